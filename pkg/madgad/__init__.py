from .core import Graph, GraphList, builders
from .decomp import Decomposition, construct, validate
from .formulas import (
    g_max_mad,
    lower_bound_table,
    m_list,
    m_two,
    m_upper_bound,
    m_upper_range,
    param_triple,
    representative
)
from .mad import MadCertificate, mad, mad_value
from .normalize import normalize
from .oracle import OracleBudget, m_kn_search, m_list_dp, mad_bruteforce
from .version import version, version_info
