"""Maximum-size binary grid words of bounded degree.

Closed formulas for the maxima, deterministic constructions attaining them,
an exact profile-DP search oracle for independent certification, and exact
grid-graph domination (the d=3 reduction).
"""

from ._kernels import backend_name
from .construct import construct
from .domination import DominationWitness, gamma, is_dominating, min_dominating_set
from .errors import (
    CapacityError,
    ConstructionError,
    DimensionError,
    GridWordError,
    ParseError,
    PartialResultError,
)
from .formula import excess_max, formula_table, max_filled
from .grid_word import (
    CellState,
    Component,
    DegreeWord,
    Third,
    Word2D,
    boundary_cells,
    degree_word,
    excess,
    filled_count,
    from_json,
    hconcat,
    induced_components,
    is_degree_bounded,
    is_linear_forest,
    is_snake,
    max_degree,
    parse_text,
    power,
    render_text,
    row_distribution,
    rows_factor,
    to_json,
    transform,
    vconcat,
    with_cell,
)
from .oracle import (
    MaxReport,
    count_maximal,
    exact_max,
    exact_max_bruteforce,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "CellState",
    "Component",
    "DegreeWord",
    "Third",
    "Word2D",
    "backend_name",
    "boundary_cells",
    "CapacityError",
    "ConstructionError",
    "DimensionError",
    "DominationWitness",
    "GridWordError",
    "MaxReport",
    "ParseError",
    "PartialResultError",
    "construct",
    "count_maximal",
    "degree_word",
    "excess",
    "excess_max",
    "exact_max",
    "exact_max_bruteforce",
    "filled_count",
    "formula_table",
    "from_json",
    "gamma",
    "hconcat",
    "induced_components",
    "is_degree_bounded",
    "is_dominating",
    "is_linear_forest",
    "is_snake",
    "max_degree",
    "max_filled",
    "min_dominating_set",
    "parse_text",
    "power",
    "render_text",
    "row_distribution",
    "rows_factor",
    "to_json",
    "transform",
    "vconcat",
    "verify_theorem",
    "with_cell",
]
