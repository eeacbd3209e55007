"""Exact zero-sum game reductions: packaging strategies, lifting optima back,
and deciding when a reduction keeps the value and all optimal strategies."""

from .errors import DimensionError, EmbedError, GKTError, GuardExceeded, ParseError, SpecError
from .game import Game, MixedStrategy, Partition, ReductionSpec, check_profile, dual, payoff
from .lab import (
    ReductionReport,
    ScanReport,
    check_reduction,
    scan_2x2,
    search_desirable,
    verify_thm_2_2,
    verify_thm_2_4,
)
from .lp import (
    OptimalPolytope,
    SolveResult,
    conditional_feasible,
    is_optimal,
    min_mass,
    optimal_vertices,
    solve,
    value,
)
from .numeric import Rational, parse_rational, render
from .reduction import ReducedGame, derive_profile, elementary_reduce, embed, general_reduce, lift

__version__ = "0.1.0"
