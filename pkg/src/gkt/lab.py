"""Executable checks of when a reduction is desirable.

A reduction is *value preserving* when the reduced game has the original
value, and *fully restorable* when every optimal strategy of the reduced game
lifts to an optimal strategy of the original. The checks here decide both
exactly, search for desirable reductions, and scan random 2x2 games.

Restorability is decided at the vertices of the reduced optimal polytope:
lifting is linear and optimality in the original game is a system of linear
inequalities, so if every vertex lifts to an optimum, so does every convex
combination of them.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .errors import GuardExceeded
from .game import Game, MixedStrategy, Partition, ReductionSpec, dual, row_payoffs
from .lp import DEFAULT_VERTEX_GUARD, conditional_feasible, min_mass, optimal_vertices, value
from .reduction import derive_profile, general_reduce, lift

SEARCH_GUARD = 8


@dataclass(frozen=True)
class LiftedVertex:
    reduced: MixedStrategy
    lifted: MixedStrategy
    is_optimal: bool


@dataclass(frozen=True)
class ReductionReport:
    """Outcome of :func:`check_reduction`.

    Values are in row-player terms. For a player-1 reduction the reduced value
    never exceeds the original; for a player-2 reduction it is never below.
    """

    original_value: Fraction
    reduced_value: Fraction
    value_preserved: bool
    all_optima_restorable: bool
    witness: Optional[MixedStrategy]
    lifted_vertices: Tuple[LiftedVertex, ...]
    reduced_game: Game
    reduced_player: int = 1

    @property
    def desirable(self):
        return self.value_preserved and self.all_optima_restorable


def check_reduction(g, spec, guard=DEFAULT_VERTEX_GUARD, original_value=None):
    """Solve original and reduced games and lift every reduced optimal vertex.

    The witness, when present, is the lexicographically smallest reduced
    optimal vertex whose lift is not optimal in ``g``. ``original_value`` may
    be passed to skip re-solving ``g`` when it is already known.
    """
    spec.fits(g)
    if spec.reduced_player == 2:
        known = None if original_value is None else -original_value
        rep = check_reduction(dual(g), spec.transposed(), guard, known)
        lifted = tuple(
            LiftedVertex(
                MixedStrategy(lv.reduced.probs, 2), MixedStrategy(lv.lifted.probs, 2), lv.is_optimal
            )
            for lv in rep.lifted_vertices
        )
        witness = None if rep.witness is None else MixedStrategy(rep.witness.probs, 2)
        return ReductionReport(
            -rep.original_value,
            -rep.reduced_value,
            rep.value_preserved,
            rep.all_optima_restorable,
            witness,
            lifted,
            dual(rep.reduced_game),
            2,
        )
    v = value(g) if original_value is None else original_value
    reduced = general_reduce(g, spec).game
    poly = optimal_vertices(reduced, 1, guard)
    lifted = []
    witness = None
    for vert in poly.vertices:
        x = lift(vert, spec)
        ok = min(row_payoffs(g, x)) >= v
        lifted.append(LiftedVertex(vert, x, ok))
        if not ok and witness is None:
            witness = vert
    return ReductionReport(
        v, poly.value, poly.value == v, witness is None, witness, tuple(lifted), reduced, 1
    )


@dataclass(frozen=True)
class Thm22Verdict:
    """Branch ``1``: every optimal strategy puts mass on the subset, and value
    preservation must coincide with conditional feasibility. Branch ``2``: some
    optimal strategy ignores the subset, and the value must be preserved.
    """

    branch: int
    min_mass: Fraction
    value_preserved: bool
    conditional_feasible: bool
    witness: Optional[MixedStrategy]
    holds: bool


def verify_thm_2_2(g, subset, p):
    """Check the optimal-strategy characterisation of value-preserving packaging."""
    spec = ReductionSpec.elementary(g.rows, g.cols, subset, p)
    mass = min_mass(g, subset)
    preserved = value(general_reduce(g, spec).game) == value(g)
    feas = conditional_feasible(g, spec.row_partition, spec.profile)
    if mass > 0:
        return Thm22Verdict(1, mass, preserved, feas.feasible, feas.witness, preserved == feas.feasible)
    return Thm22Verdict(2, mass, preserved, feas.feasible, feas.witness, preserved)


@dataclass(frozen=True)
class Thm24Verdict:
    """When every reduced optimum is restorable, some original optimum must
    generate the profile on its positive-mass blocks. ``profile_derivable`` is
    reported either way; it being true with the hypothesis unmet shows the
    converse fails.
    """

    hypothesis_met: bool
    profile_derivable: bool
    witness: Optional[MixedStrategy]
    holds: bool
    report: ReductionReport


def verify_thm_2_4(g, spec, guard=DEFAULT_VERTEX_GUARD):
    rep = check_reduction(g, spec, guard)
    if spec.reduced_player == 2:
        feas = conditional_feasible(dual(g), spec.col_partition, spec.profile)
        witness = None if feas.witness is None else MixedStrategy(feas.witness.probs, 2)
    else:
        feas = conditional_feasible(g, spec.row_partition, spec.profile)
        witness = feas.witness
    met = rep.all_optima_restorable
    return Thm24Verdict(met, feas.feasible, witness, feas.feasible or not met, rep)


class SplitMix64:
    """Small deterministic 64-bit generator; the stream depends only on the seed."""

    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = seed & self.MASK

    def next64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n):
        """Uniform integer in ``[0, n)`` by rejection sampling."""
        limit = ((1 << 64) // n) * n
        while True:
            z = self.next64()
            if z < limit:
                return z % n

    def randint(self, lo, hi):
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


def random_game(rng, max_rows=4, max_cols=4, bound=5, rows=None, cols=None):
    m = rows or rng.randint(1, max_rows)
    n = cols or rng.randint(1, max_cols)
    return Game(tuple(tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n)) for _ in range(m)))


def random_partition(rng, size):
    labels = [rng.below(size) for _ in range(size)]
    blocks = {}
    for i, lab in enumerate(labels):
        blocks.setdefault(lab, []).append(i)
    return Partition(tuple(blocks.values()))


def random_distribution(rng, size, denom=6):
    w = [rng.randint(0, denom) for _ in range(size)]
    if not any(w):
        w[rng.below(size)] = 1
    total = sum(w)
    return tuple(Fraction(a, total) for a in w)


def random_spec(rng, g, elementary=False, vertices=None):
    """A random player-1 spec; half the time the profile comes from an optimal vertex.

    ``vertices`` are the original game's optimal row vertices, used for the
    derived profiles so that value-preserving cases come up often.
    """
    m, n = g.shape
    if elementary:
        k = rng.randint(1, m)
        subset = sorted(range(m), key=lambda _: rng.next64())[:k]
        rows, cols = Partition.merging(m, subset), Partition.singletons(n)
    else:
        rows, cols = random_partition(rng, m), random_partition(rng, n)
    if vertices and rng.below(2):
        profile = derive_profile(rng.choice(vertices), rows)
    else:
        profile = tuple(
            random_distribution(rng, len(b)) if len(b) > 1 else (Fraction(1),) for b in rows.blocks
        )
    return ReductionSpec(1, rows, cols, profile)


@dataclass(frozen=True)
class Violation:
    trial: int
    game: Game
    spec: ReductionSpec
    report: ReductionReport


@dataclass
class ScanReport:
    trials: int
    structures_checked: int
    seed: int
    violations: list = field(default_factory=list)


def grid_profiles(denominator_bound):
    """Two-point distributions ``(q, 1 - q)`` with ``q`` of denominator at most the bound."""
    qs = sorted({Fraction(a, d) for d in range(1, denominator_bound + 1) for a in range(d + 1)})
    return [(q, 1 - q) for q in qs]


def scan_2x2(trials=500, seed=42, denominator_bound=6, bound=5, game=None):
    """Look for 2x2 player-1 reductions where value preservation and full
    restorability disagree.

    Each trial draws a game (or reuses ``game``), tries all four pairs of
    row/column partitions, and for a merged row block runs every grid profile
    plus every profile derived from an optimal row vertex.
    """
    rng = SplitMix64(seed)
    grid = grid_profiles(denominator_bound)
    split, whole = Partition(((0,), (1,))), Partition(((0, 1),))
    report = ScanReport(trials, 0, seed)
    for trial in range(trials):
        g = game if game is not None else random_game(rng, rows=2, cols=2, bound=bound)
        poly = optimal_vertices(g)
        derived = [derive_profile(x, whole)[0] for x in poly.vertices]
        merged_profiles = list(grid) + [d for d in derived if d not in grid]
        for rows in (whole, split):
            profiles = [(p,) for p in merged_profiles] if rows is whole else [((1,), (1,))]
            for cols in (whole, split):
                for profile in profiles:
                    spec = ReductionSpec(1, rows, cols, profile)
                    rep = check_reduction(g, spec, original_value=poly.value)
                    report.structures_checked += 1
                    if rep.value_preserved != rep.all_optima_restorable:
                        report.violations.append(Violation(trial, g, spec, rep))
    return report


def set_partitions(size, max_blocks=None):
    """All partitions of ``range(size)`` as restricted growth strings, in
    lexicographic order of those strings."""
    max_blocks = size if max_blocks is None else max_blocks

    def grow(prefix, used):
        if len(prefix) == size:
            blocks = [[] for _ in range(used)]
            for i, lab in enumerate(prefix):
                blocks[lab].append(i)
            yield Partition(tuple(tuple(b) for b in blocks))
            return
        for lab in range(min(used + 1, max_blocks)):
            yield from grow(prefix + [lab], max(used, lab + 1))

    yield from grow([], 0)


def search_desirable(g, max_blocks=None, guard=SEARCH_GUARD):
    """Value-preserving row reductions built from the game's own optima.

    Every row partition with at most ``max_blocks`` blocks is paired with the
    profiles derived from each optimal row vertex (uniform on zero-mass
    blocks); columns stay unpacked. Results are sorted by reduced game size,
    then by spec.
    """
    if g.rows > guard:
        raise GuardExceeded("search_rows", guard, g.rows)
    poly = optimal_vertices(g)
    vertices = poly.vertices
    cols = Partition.singletons(g.cols)
    seen = set()
    found = []
    for rows in set_partitions(g.rows, max_blocks):
        for x in vertices:
            spec = ReductionSpec(1, rows, cols, derive_profile(x, rows))
            if spec in seen:
                continue
            seen.add(spec)
            rep = check_reduction(g, spec, original_value=poly.value)
            if rep.value_preserved:
                found.append((spec, rep))
    found.sort(key=lambda sr: (sr[1].reduced_game.rows * sr[1].reduced_game.cols, sr[0].sort_key()))
    return found
