# encoding=utf-8
import functools
import inspect
from itertools import combinations

_TRUE = frozenset(('1', 'on', 'true', 'yes', 'y'))
_FALSE = frozenset(('0', 'off', 'false', 'no', 'n'))


def str2bool(v, default):
    """
    Read an environment flag such as ``MADGAD_PARALLEL_VALIDATE``.
    Case and surrounding blanks are ignored; unset or unrecognised text
    yields ``default``.
    """
    if v is None:
        return default
    token = v.strip().lower()
    if token in _TRUE:
        return True
    if token in _FALSE:
        return False
    return default


def memoize(maxsize=1024):
    """
    Least-recently-used cache keyed on the bound arguments, so positional
    and keyword spellings of one call share an entry. Arguments must be
    hashable.
    """
    def decorator(fn):
        signature = inspect.signature(fn)

        @functools.lru_cache(maxsize=maxsize)
        def cached(key):
            return fn(**dict(key))

        @functools.wraps(fn)
        def _memoize(*args, **kwargs):
            bound = signature.bind(*args, **kwargs)
            bound.apply_defaults()
            return cached(tuple(bound.arguments.items()))

        _memoize.cache_info = cached.cache_info
        _memoize.cache_clear = cached.cache_clear
        return _memoize

    return decorator


def popcount(x):
    return bin(x).count('1')


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask):
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def pairs_of(block):
    return combinations(sorted(block), 2)
