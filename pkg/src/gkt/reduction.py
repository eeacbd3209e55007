"""Strategy packaging: elementary and general reductions and their maps.

A reduction replaces blocks of one player's pure strategies by single
"packaged" strategies that randomize inside the block with a fixed
distribution. Player-2 reductions run as player-1 reductions of the dual
game and are mapped back.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import DimensionError, EmbedError, SpecError
from .game import Game, MixedStrategy, Partition, ReductionSpec, dual
from .numeric import render

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class ReducedGame:
    """A reduced game together with the data that produced it.

    ``order[r]`` is the block of the reduced player's partition behind the
    reduced player's ``r``-th strategy. General reductions keep block order;
    elementary ones put the packaged strategy last.
    """

    game: Game
    spec: ReductionSpec
    row_names: Tuple[str, ...]
    col_names: Tuple[str, ...]
    order: Tuple[int, ...]
    elementary: bool = False

    @property
    def block_names(self):
        return self.row_names, self.col_names

    def to_blocks(self, x):
        """Reorder a reduced strategy from game order to block order."""
        probs = _probs(x)
        if len(probs) != len(self.order):
            raise DimensionError(f"strategy of length {len(probs)} for {len(self.order)} strategies")
        out = [ZERO] * len(self.order)
        for r, t in enumerate(self.order):
            out[t] = probs[r]
        return tuple(out)

    def from_blocks(self, x):
        probs = _probs(x)
        return tuple(probs[t] for t in self.order)

    def lift(self, x):
        return lift(self.to_blocks(x), self.spec)

    def embed(self, x1):
        e = embed(x1, self.spec)
        return MixedStrategy(self.from_blocks(e), e.player)

    def reproduce(self, original):
        """Recompute this reduction from ``original``; equal to ``self`` when consistent."""
        if self.elementary:
            t = self.order[-1]  # the packaged strategy comes last
            subset = self.spec.partition.blocks[t]
            return elementary_reduce(original, subset, self.spec.profile[t], self.spec.reduced_player)
        return general_reduce(original, self.spec)


def _probs(x):
    return x.probs if isinstance(x, MixedStrategy) else tuple(Fraction(p) for p in x)


def _names(player, partition):
    return tuple(f"alpha{player}{t + 1}" for t in range(len(partition)))


def _pure_names(player, size):
    return tuple(f"s{player}{i + 1}" for i in range(size))


def elementary_reduce(g, subset, p, player=1):
    """Package ``subset`` (0-based indices) of ``player``'s strategies with ``p``.

    For player 1 the rows outside ``subset`` are kept in their original order
    and the packaged row, the ``p``-weighted average of the subset's rows, is
    appended last. ``p`` is aligned with ``subset`` as given.
    """
    subset = tuple(subset)
    if not subset:
        raise SpecError("cannot package an empty subset")
    p = tuple(Fraction(a) for a in p)
    if len(p) != len(subset) or any(a < 0 for a in p) or sum(p) != 1:
        raise SpecError("p is not a probability vector on the subset")
    spec = ReductionSpec.elementary(g.rows, g.cols, subset, p, player)
    if player == 2:
        r = elementary_reduce(dual(g), subset, p, 1)
        return ReducedGame(dual(r.game), spec, r.col_names, r.row_names, r.order, True)
    merged = set(subset)
    kept = [i for i in range(g.rows) if i not in merged]
    packaged = tuple(
        sum((w * g.payoffs[s][j] for s, w in zip(subset, p) if w), ZERO)
        for j in range(g.cols)
    )
    reduced = Game(tuple(g.payoffs[i] for i in kept) + (packaged,))
    part = spec.partition
    order = tuple(part.block_of(i) for i in kept) + (part.block_of(subset[0]),)
    names = tuple(f"s1{i + 1}" for i in kept) + ("alpha",)
    return ReducedGame(reduced, spec, names, _pure_names(2, g.cols), order, True)


def general_reduce(g, spec):
    """Reduce ``g`` by both partitions, packaging the reduced player's blocks.

    For a player-1 spec the entry for row block ``R`` and column block ``C``
    is the smallest, over columns in ``C``, of the profile-weighted average of
    the rows in ``R``: the packaged row guarantees at least that much against
    anything in the column block.
    """
    spec.fits(g)
    if spec.reduced_player == 2:
        r = general_reduce(dual(g), spec.transposed())
        return ReducedGame(dual(r.game), spec, r.col_names, r.row_names, r.order)
    rows, cols = spec.row_partition, spec.col_partition
    entries = []
    for block, dist in zip(rows.blocks, spec.profile):
        avg = [
            sum((w * g.payoffs[s][j] for s, w in zip(block, dist) if w), ZERO)
            for j in range(g.cols)
        ]
        entries.append(tuple(min(avg[j] for j in cblock) for cblock in cols.blocks))
    return ReducedGame(
        Game(tuple(entries)), spec, _names(1, rows), _names(2, cols), tuple(range(len(rows)))
    )


def reduce(g, spec):
    """Alias of :func:`general_reduce`, which covers elementary specs too."""
    return general_reduce(g, spec)


def lift(x_reduced, spec):
    """Map a reduced strategy (block order) back to the original strategies.

    Each original strategy gets its block's mass times its weight in the
    block distribution.
    """
    probs = _probs(x_reduced)
    part = spec.partition
    if len(probs) != len(part):
        raise DimensionError(f"strategy of length {len(probs)} for {len(part)} blocks")
    out = [ZERO] * part.size
    for mass, block, dist in zip(probs, part.blocks, spec.profile):
        for s, w in zip(block, dist):
            out[s] = w * mass
    return MixedStrategy(out, spec.reduced_player)


def block_masses(x, partition):
    probs = _probs(x)
    if len(probs) != partition.size:
        raise DimensionError(f"strategy of length {len(probs)} for a partition of {partition.size}")
    return tuple(sum((probs[s] for s in b), ZERO) for b in partition.blocks)


def embed(x1, spec):
    """Inverse of :func:`lift` on strategies the reduction can represent.

    Every block with positive mass must carry exactly the profile as its
    conditional distribution; otherwise :class:`EmbedError` is raised.
    """
    probs = _probs(x1)
    part = spec.partition
    masses = block_masses(probs, part)
    for t, (mass, block, dist) in enumerate(zip(masses, part.blocks, spec.profile)):
        if mass and any(probs[s] != w * mass for s, w in zip(block, dist)):
            cond = ", ".join(render(probs[s] / mass) for s in block)
            want = ", ".join(render(w) for w in dist)
            raise EmbedError(
                f"block {t + 1} has conditional ({cond}), profile is ({want})"
            )
    return MixedStrategy(masses, spec.reduced_player)


UNIFORM = "uniform"
ERROR = "error"


def derive_profile(x1, partition, zero_block_policy=UNIFORM):
    """Conditional distribution of ``x1`` on every block of ``partition``.

    Blocks where ``x1`` has no mass get the uniform distribution, or raise
    :class:`SpecError` under the ``"error"`` policy.
    """
    if not isinstance(partition, Partition):
        partition = Partition(partition)
    probs = _probs(x1)
    if zero_block_policy not in (UNIFORM, ERROR):
        raise ValueError(f"unknown zero_block_policy {zero_block_policy!r}")
    profile = []
    for t, (mass, block) in enumerate(zip(block_masses(probs, partition), partition.blocks)):
        if mass:
            profile.append(tuple(probs[s] / mass for s in block))
        elif zero_block_policy == UNIFORM:
            profile.append((Fraction(1, len(block)),) * len(block))
        else:
            raise SpecError(f"block {t + 1} has zero mass")
    return tuple(profile)
