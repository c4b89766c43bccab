from .anonymize import *
from .extract import *
from .optimizer import *
from .rules import *
from .validation import *
