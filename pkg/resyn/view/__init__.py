from .progress import *
from .report import *
