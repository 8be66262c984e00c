"""Size and time limits the brute-force oracles refuse to exceed."""
import time

from ..consts import DEFAULT_BUDGET_K
from ..consts import DEFAULT_BUDGET_LIST_EDGES
from ..consts import DEFAULT_BUDGET_LIST_K
from ..consts import DEFAULT_BUDGET_VERTICES
from ..consts import DEFAULT_TIME_LIMIT_SECONDS
from ..errors import BudgetExceeded, DomainError


class OracleBudget(object):
    """
    Limits for one oracle run.

    ``max_vertices``/``max_k`` bound the subset-tuple search, ``max_N`` and
    ``max_list_k`` the list DP, ``time_limit`` (seconds) every search once
    :meth:`start` has been called.
    """

    def __init__(self, max_vertices=DEFAULT_BUDGET_VERTICES, max_k=DEFAULT_BUDGET_K,
                 max_N=DEFAULT_BUDGET_LIST_EDGES, max_list_k=DEFAULT_BUDGET_LIST_K,
                 time_limit=DEFAULT_TIME_LIMIT_SECONDS):
        for name, value in (('max_vertices', max_vertices), ('max_k', max_k), ('max_N', max_N),
                            ('max_list_k', max_list_k)):
            if not isinstance(value, int) or value < 1:
                raise DomainError('{0} must be a positive integer, got {1!r}'.format(name, value))
        self.max_vertices = max_vertices
        self.max_k = max_k
        self.max_N = max_N
        self.max_list_k = max_list_k
        self.time_limit = time_limit
        self._deadline = None

    @classmethod
    def from_env(cls, **overrides):
        """Budget from MADGAD_* environment values; explicit ``overrides`` win."""
        from .. import envs
        params = {
            'max_vertices': envs.MADGAD_BUDGET_N,
            'max_k': envs.MADGAD_BUDGET_K,
            'time_limit': envs.MADGAD_TIME_LIMIT,
        }
        params.update((k, v) for k, v in overrides.items() if v is not None)
        return cls(**params)

    def require(self, limit, requested):
        maximum = getattr(self, limit)
        if requested > maximum:
            raise BudgetExceeded(limit, maximum, requested)

    def start(self):
        self._deadline = time.monotonic() + self.time_limit if self.time_limit else None
        return self

    def check_time(self):
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceeded('time_limit', self.time_limit, 'more')

    def __repr__(self):
        return '<OracleBudget n<={0} k<={1} N<={2} list_k<={3} t<={4}s>'.format(
            self.max_vertices, self.max_k, self.max_N, self.max_list_k, self.time_limit)
