from fractions import Fraction

from .version import version

CURRENT_FORMAT_VERSION = '1.1.0'
MINIMUM_FORMAT_VERSION = '1.0.0'
LEGACY_FORMAT_VERSION = '1.0.0'

DEFAULT_BUDGET_VERTICES = 7
DEFAULT_BUDGET_K = 4
DEFAULT_BUDGET_LIST_EDGES = 200
DEFAULT_BUDGET_LIST_K = 10
DEFAULT_TIME_LIMIT_SECONDS = 600

MAD_BRUTEFORCE_MAX_VERTICES = 20
INVARIANTS_MAX_VERTICES = 12
COLORINGS_MAX_COUNT = 2 ** 16

SQRT_INTERVAL_WIDTH = Fraction(1, 10 ** 9)

PRIME_PLANE_ORDERS = (2, 3, 5, 7, 11, 13)
PRIME_POWER_PLANE_ORDERS = (4, 8, 9)
PLANE_ORDERS = tuple(sorted(PRIME_PLANE_ORDERS + PRIME_POWER_PLANE_ORDERS))

# Singer difference sets, one per supported order, as printed in the
# classical tables; planes shift them so that 0 is a member.
DIFFERENCE_SETS = {
    2: (1, 2, 4),
    3: (0, 1, 3, 9),
    4: (0, 1, 4, 14, 16),
    5: (1, 5, 11, 24, 25, 27),
    7: (0, 1, 3, 13, 32, 36, 43, 52),
    8: (1, 2, 4, 8, 16, 32, 37, 55, 64),
    9: (0, 1, 3, 9, 27, 49, 56, 61, 77, 81),
}

GREEDY_MAX_STEPS = 200000
GREEDY_MAX_RESTARTS = 50

# (k, n) entries kept by the lower-bound catalog cache
LOWER_BOUND_CACHE_SIZE = 4096

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_REFUSAL = 3

DEFAULT_LOG_LEVEL = 'WARNING'
PROGRAM_NAME = 'madgad'
PROGRAM_BANNER = "madgad/{0}".format(version)

PACKING = 'PACKING'
DECOMPOSITION = 'DECOMPOSITION'
DECOMPOSITION_MODES = {PACKING, DECOMPOSITION}
