from .corpus import *
from .expansion import *
from .instance import *
from .negatives import *
from .sampler import *
