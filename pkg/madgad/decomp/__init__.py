from .constructions import (
    CONSTRUCTIONS,
    bind_params,
    blow_up_design_decomposition,
    construct,
    construct_from_design,
    construct_k2,
    construct_k7_K8,
    construct_psts_decomposition,
    construct_small_k,
    construct_triangular,
    plane_plus_r_decomposition
)
from .decomposition import Decomposition, MadSumReport, is_pbd, pbd_total, validate
from .transforms import (
    apex_extend,
    canonicalize_packing,
    packing_to_c4free_bipartite,
    recursive_blowup,
    split_edge
)
