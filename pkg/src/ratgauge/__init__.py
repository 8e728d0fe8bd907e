"""Exact rational homotopy calculator for mapping spaces and gauge groups."""
from .errors import InputError
from .graded import UNBOUNDED, GradedDims, poincare_series, regrade_nonpositive, tensor, truncate_min
from .groups import LieGroupModel, bg_degrees, parse_group
from .limits import ColimitReport, DirectSystem, colimit_dims, stable_ranks, system_from_maps
from .simplicial import (
    SimplicialComplex, SimplicialMap, betti, build_complex, cochain_complex,
    cohomology_representatives, induced_cohomology_map,
)
from .gauge import (
    HomotopyReport, bg_loop_oracle, gauge_group_homotopy, mapping_space_homotopy,
    projective_gauge_homotopy, samelson_algebra, thom_homotopy, ua_homotopy,
)

__version__ = "0.1.0"
