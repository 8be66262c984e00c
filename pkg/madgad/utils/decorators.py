import functools

from semantic_version import Version as _V

from .. import errors


def minimum_version(version):
    """Gate a document accessor behind a minimum file-format version.

    The decorated method's owner must expose ``format_version``.
    """
    def decorator(f):
        @functools.wraps(f)
        def wrapper(self, *args, **kwargs):
            if _V(self.format_version) < _V(version):
                raise errors.InvalidFormatVersion(
                    '{0} is not available for format version < {1} (document is {2})'.format(
                        f.__name__, version, self.format_version
                    )
                )
            return f(self, *args, **kwargs)

        return wrapper

    return decorator


def refuse_above(limit, maximum, measure):
    """Refuse calls whose ``measure(*args, **kwargs)`` exceeds a hard cap."""
    def decorator(f):
        @functools.wraps(f)
        def wrapper(*args, **kwargs):
            requested = measure(*args, **kwargs)
            if requested > maximum:
                raise errors.BudgetExceeded(limit, maximum, requested)
            return f(*args, **kwargs)

        return wrapper

    return decorator
