from . import builders
from .graph import Graph, vertex_set
from .graphlist import GraphList
from .operations import (
    average_degree,
    blow_up,
    clique_number,
    complement,
    disjoint_union,
    essential_average_degree,
    induced,
    join,
    maximum_clique,
    support
)
from .rational import ExactRational, Interval, SqrtInterval, le_sqrt, lt_sqrt
from .shapes import shape_name
