class MadgadException(Exception):
    """
    Root of every error madgad raises deliberately.
    """


class DomainError(MadgadException, ValueError):
    """
    Parameters outside the range an operation is defined on.
    """


class FormatError(MadgadException, ValueError):
    """
    A graph, rational, design or decomposition document that cannot be parsed.
    """


class InvalidFormatVersion(MadgadException):
    pass


class ValidationError(MadgadException):
    """
    A structure failed its certificate check.

    ``pairs`` holds the offending vertex pairs in canonical order.
    """

    PREVIEW = 12

    def __init__(self, message, kind=None, pairs=None):
        super(ValidationError, self).__init__(message)
        self.kind = kind
        self.pairs = sorted(tuple(sorted(p)) for p in pairs or ())

    def __str__(self):
        message = super(ValidationError, self).__str__()
        if self.kind:
            message = '{0}: {1}'.format(self.kind, message)
        if self.pairs:
            shown = ', '.join('{0}-{1}'.format(u, v) for u, v in self.pairs[:self.PREVIEW])
            if len(self.pairs) > self.PREVIEW:
                shown += ', ... ({0} total)'.format(len(self.pairs))
            message = '{0} [{1}]'.format(message, shown)
        return message


class BudgetExceeded(MadgadException):
    """
    An oracle refused an input larger than its budget.
    """

    def __init__(self, limit, maximum, requested):
        super(BudgetExceeded, self).__init__(
            '{0} budget exceeded: requested {1}, allowed {2}'.format(limit, requested, maximum))
        self.limit = limit
        self.maximum = maximum
        self.requested = requested


def create_validation_error(kind, message, pairs):
    pairs = list(pairs)
    return ValidationError('{0} ({1} pair{2})'.format(message, len(pairs), '' if len(pairs) == 1 else 's'),
                           kind=kind, pairs=pairs)


def create_unexpected_params_error(name, params):
    quoted = ["'{}'".format(k) for k in sorted(params)]
    text = ["{} ".format(name)]
    if len(quoted) == 1:
        text.append("got an unexpected parameter ")
    else:
        text.append("got unexpected parameters ")
    text.append(', '.join(quoted))
    return TypeError(''.join(text))
