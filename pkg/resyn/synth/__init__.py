from .engine import *
from .enumerative import *
from .fallback import *
from .heuristic import *
from .oracle import *
from .strategies import *
from .tree import *
