from .corpus_stats import *
from .harness import *
from .metrics import *
