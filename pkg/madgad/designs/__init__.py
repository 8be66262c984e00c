from .design import BlockDesign, leave_graph
from .planes import (
    DELETE_LINE,
    DELETE_POINT,
    CyclicPlane,
    affine_plane,
    cyclic_plane_difference_set,
    is_perfect_difference_set,
    projective_plane,
    truncate_plane
)
from .triples import expected_leave, max_partial_triple_system, steiner_triple_system
