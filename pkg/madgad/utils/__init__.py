from .cached_property import threaded_cached_property
from .decorators import minimum_version, refuse_above
from .utils import memoize, str2bool
