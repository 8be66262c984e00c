import os

from .consts import DEFAULT_BUDGET_K
from .consts import DEFAULT_BUDGET_VERTICES
from .consts import DEFAULT_LOG_LEVEL
from .consts import DEFAULT_TIME_LIMIT_SECONDS
from .utils.utils import str2bool

MADGAD_BUDGET_N = int(os.getenv('MADGAD_BUDGET_N') or DEFAULT_BUDGET_VERTICES)
MADGAD_BUDGET_K = int(os.getenv('MADGAD_BUDGET_K') or DEFAULT_BUDGET_K)
MADGAD_TIME_LIMIT = float(os.getenv('MADGAD_TIME_LIMIT') or DEFAULT_TIME_LIMIT_SECONDS)
MADGAD_SEED = int(os.getenv('MADGAD_SEED') or 0)
MADGAD_WORKERS = int(os.getenv('MADGAD_WORKERS') or 1)
MADGAD_LOG_LEVEL = os.getenv('MADGAD_LOG_LEVEL') or DEFAULT_LOG_LEVEL
MADGAD_PARALLEL_VALIDATE = str2bool(os.getenv('MADGAD_PARALLEL_VALIDATE'), False)
