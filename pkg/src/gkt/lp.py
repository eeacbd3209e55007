"""Game values, optimal strategies and the optimal-strategy polytope.

Everything is solved exactly with :mod:`gkt.simplex`; results are checked
against the defining inequalities before they are returned.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Tuple

from .errors import DimensionError, GuardExceeded, SpecError
from .game import MixedStrategy, Partition, check_profile, col_payoffs, dual, row_payoffs
from .simplex import OPTIMAL, maximize

DEFAULT_VERTEX_GUARD = 12

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class SolveResult:
    value: Fraction
    opt_row: MixedStrategy
    opt_col: MixedStrategy


@dataclass(frozen=True)
class OptimalPolytope:
    """Vertices of one player's optimal set, in lexicographic order.

    ``value`` is always the value of the game in row-player terms.
    """

    player: int
    value: Fraction
    vertices: Tuple[MixedStrategy, ...]


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Optional[MixedStrategy] = None
    masses: Optional[Tuple[Fraction, ...]] = None

    def __bool__(self):
        return self.feasible


def _row_value(g):
    """Maximin value and a maximin row strategy."""
    m, n = g.shape
    # variables x_0..x_{m-1}, then v (free)
    A_ub = [[-g.payoffs[i][j] for i in range(m)] + [ONE] for j in range(n)]
    res = maximize(
        [ZERO] * m + [ONE],
        A_ub=A_ub,
        b_ub=[ZERO] * n,
        A_eq=[[ONE] * m + [ZERO]],
        b_eq=[ONE],
        free=[m],
    )
    # the LP is always feasible and bounded (v <= max entry)
    assert res.status == OPTIMAL, res.status
    return res.objective, res.x[:m]


def solve(g):
    """Value of ``g`` with one optimal strategy per player.

    Both strategies are certified: the row strategy earns at least the value
    against every column, the column strategy concedes at most the value
    against every row.
    """
    value, x = _row_value(g)
    neg_value, y = _row_value(dual(g))
    if neg_value != -value:
        raise ArithmeticError("primal and dual values disagree")
    if min(row_payoffs(g, x)) < value or max(col_payoffs(g, y)) > value:
        raise ArithmeticError("optimality certificate failed")
    return SolveResult(value, MixedStrategy(x, 1), MixedStrategy(y, 2))


def value(g):
    """Value of ``g``; pure saddle points skip the LP."""
    lower = max(min(row) for row in g.payoffs)
    upper = min(max(g.column(j)) for j in range(g.cols))
    if lower == upper:
        return lower
    return _row_value(g)[0]


def is_optimal(g, x, v=None, player=1):
    """Whether ``x`` guarantees the value ``v`` (computed when omitted)."""
    if v is None:
        v = value(g)
    if player == 1:
        return min(row_payoffs(g, x)) >= v
    return max(col_payoffs(g, x)) <= v


def _solve_square(M, rhs):
    """Unique solution of ``M z = rhs`` or None when ``M`` is singular."""
    n = len(M)
    a = [list(M[i]) + [rhs[i]] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return None
        if p != c:
            a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        prow = a[c]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c] / piv
                row = a[r]
                for k in range(c, n + 1):
                    if prow[k]:
                        row[k] -= f * prow[k]
    return tuple(a[i][n] / a[i][i] for i in range(n))


def _player_one_view(g, player):
    if player == 1:
        return g, 1
    if player == 2:
        return dual(g), -1
    raise DimensionError(f"player must be 1 or 2, got {player}")


def optimal_vertices(g, player=1, guard=DEFAULT_VERTEX_GUARD):
    """All vertices of ``player``'s optimal-strategy polytope.

    The polytope is ``{x in simplex : x earns at least v against each pure
    reply}``. Each vertex is the unique solution of the simplex equation plus
    ``k - 1`` tight constraints drawn from the nonnegativity bounds and the
    reply inequalities, so all such choices are tried, solved exactly, and
    filtered for feasibility. Cost grows combinatorially, hence ``guard`` on
    the player's strategy count.
    """
    h, sign = _player_one_view(g, player)
    m, n = h.shape
    if m > guard:
        raise GuardExceeded("vertex_enumeration_strategies", guard, m)
    v = value(h)
    cols = [h.column(j) for j in range(n)]
    hyper = [tuple(ONE if k == i else ZERO for k in range(m)) for i in range(m)]
    rhs = [ZERO] * m
    hyper += cols
    rhs += [v] * n
    ones = (ONE,) * m
    found = set()
    for pick in combinations(range(m + n), m - 1):
        # a vertex with nonnegativity bounds picked must still satisfy them
        M = [ones] + [hyper[k] for k in pick]
        z = _solve_square(M, [ONE] + [rhs[k] for k in pick])
        if z is None or any(p < 0 for p in z):
            continue
        if all(sum((p * a for p, a in zip(z, col) if p), ZERO) >= v for col in cols):
            found.add(z)
    vertices = tuple(MixedStrategy(z, player) for z in sorted(found))
    return OptimalPolytope(player, sign * v, vertices)


def _check_subset(subset, size):
    subset = tuple(sorted(set(subset)))
    if not subset:
        raise SpecError("subset is empty")
    if subset[0] < 0 or subset[-1] >= size:
        raise SpecError(f"subset index out of range 1..{size}")
    return subset


def min_mass(g, subset):
    """Least total probability an optimal row strategy can put on ``subset``."""
    m, n = g.shape
    subset = _check_subset(subset, m)
    v = value(g)
    res = maximize(
        [-ONE if i in subset else ZERO for i in range(m)],
        A_ub=[[-a for a in g.column(j)] for j in range(n)],
        b_ub=[-v] * n,
        A_eq=[[ONE] * m],
        b_eq=[ONE],
    )
    assert res.status == OPTIMAL, res.status
    return -res.objective


def aggregated_rows(g, partition, profile):
    """Profile-weighted average of each block's rows, one row per block."""
    return tuple(
        tuple(
            sum((p * g.payoffs[s][j] for s, p in zip(block, dist) if p), ZERO)
            for j in range(g.cols)
        )
        for block, dist in zip(partition.blocks, profile)
    )


def conditional_feasible(g, partition, profile):
    """Is there an optimal row strategy whose conditionals match ``profile``?

    Searches over block masses ``t_k >= 0`` summing to one, with the strategy
    ``x(s) = p_k(s) * t_k`` on block ``k``. Blocks may receive zero mass, in
    which case their distribution is unconstrained.
    """
    if not isinstance(partition, Partition):
        partition = Partition(partition)
    if partition.size != g.rows:
        raise SpecError(f"partition covers {partition.size} strategies, game has {g.rows} rows")
    profile = check_profile(partition, profile)
    v = value(g)
    agg = aggregated_rows(g, partition, profile)
    K = len(agg)
    res = maximize(
        [ZERO] * K,
        A_ub=[[-agg[k][j] for k in range(K)] for j in range(g.cols)],
        b_ub=[-v] * g.cols,
        A_eq=[[ONE] * K],
        b_eq=[ONE],
    )
    if res.status != OPTIMAL:
        return Feasibility(False)
    t = res.x
    x = [ZERO] * g.rows
    for k, (block, dist) in enumerate(zip(partition.blocks, profile)):
        for s, p in zip(block, dist):
            x[s] = p * t[k]
    witness = MixedStrategy(x, 1)
    if not is_optimal(g, witness, v):
        raise ArithmeticError("conditional witness is not optimal")
    return Feasibility(True, witness, t)
