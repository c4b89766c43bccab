from .alphabet import *
from .language import *
from .matcher import *
from .nodes import *
from .parser import *
from .serializer import *
from .stats import *
