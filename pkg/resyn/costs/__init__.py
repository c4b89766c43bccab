from .alignment import *
from .decomposition import *
from .expression import *
from .language import *
from .report import *
