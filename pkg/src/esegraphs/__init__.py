"""Recognition, certification and census of edge- and vertex-stable equimatchable graphs."""

from .graph_core import (
    Graph,
    GraphError,
    canonical_form,
    decode_edge_list,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
)
from .matching import maximum_matching, matching_number, enumerate_maximal_matchings
from .decomposition import gallai_edmonds, is_factor_critical
from .certificates import Certificate
from .equimatch import (
    Classification,
    critical_edges,
    is_equimatchable,
    is_equimatchable_oracle,
    is_ese,
    is_ese_oracle,
    is_vse,
    is_vse_oracle,
    verify_certificate,
)
from .families import gen_g1, gen_g2, G2Shape, small_catalog

__version__ = "0.1.0"
