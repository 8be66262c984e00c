from .budget import OracleBudget
from .invariants import (
    InvariantRecord,
    PPReport,
    check_chain,
    check_pp_theorem,
    chromatic_number,
    degeneracy,
    invariants_small,
    kappa_plus,
    lambda_plus,
    pp_report
)
from .search import (
    ColoringResult,
    SearchResult,
    first_fit_decomposition,
    m_kn_colorings,
    m_kn_search,
    m_list_dp,
    mad_bruteforce
)
