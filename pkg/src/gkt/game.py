"""Games, mixed strategies, partitions and reduction data.

Indices are 0-based in Python objects and 1-based whenever rendered as text.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import DimensionError, SpecError
from .numeric import as_rational, render

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Game:
    """Row player's payoff matrix; the column player receives the negation."""

    payoffs: Tuple[Vector, ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(a) for a in row) for row in self.payoffs)
        if not rows or not rows[0]:
            raise DimensionError("a game needs at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("payoff matrix is not rectangular")
        object.__setattr__(self, "payoffs", rows)

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(r) for r in rows))

    @property
    def rows(self):
        return len(self.payoffs)

    @property
    def cols(self):
        return len(self.payoffs[0])

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.payoffs[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.payoffs)

    def strategy_count(self, player):
        return self.rows if player == 1 else self.cols

    def __str__(self):
        return "\n".join(" ".join(render(a) for a in row) for row in self.payoffs)


@dataclass(frozen=True)
class MixedStrategy:
    """A probability vector over one player's pure strategies."""

    probs: Vector
    player: int = 1

    def __post_init__(self):
        probs = tuple(as_rational(p) for p in self.probs)
        if self.player not in (1, 2):
            raise DimensionError(f"player must be 1 or 2, got {self.player}")
        if not probs:
            raise DimensionError("empty strategy")
        if any(p < 0 for p in probs):
            raise DimensionError("negative probability")
        if sum(probs) != 1:
            raise DimensionError(f"probabilities sum to {render(sum(probs))}, not 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def pure(cls, k, size, player=1):
        return cls(tuple(Fraction(int(i == k)) for i in range(size)), player)

    def __len__(self):
        return len(self.probs)

    def __getitem__(self, i):
        return self.probs[i]

    def __iter__(self):
        return iter(self.probs)

    def support(self):
        return tuple(i for i, p in enumerate(self.probs) if p)

    def __str__(self):
        return "(" + ", ".join(render(p) for p in self.probs) + ")"


def _probs(x):
    return x.probs if isinstance(x, MixedStrategy) else tuple(x)


def payoff(g, x1, x2):
    """Expected row-player payoff of the bilinear extension ``x1ᵀ A x2``."""
    p, q = _probs(x1), _probs(x2)
    if isinstance(x1, MixedStrategy) and x1.player != 1:
        raise DimensionError("first strategy must belong to player 1")
    if isinstance(x2, MixedStrategy) and x2.player != 2:
        raise DimensionError("second strategy must belong to player 2")
    if len(p) != g.rows or len(q) != g.cols:
        raise DimensionError(
            f"strategies of length {len(p)}, {len(q)} do not fit a {g.rows}x{g.cols} game"
        )
    return sum(
        (pi * sum((qj * a for qj, a in zip(q, row) if qj), Fraction(0))
         for pi, row in zip(p, g.payoffs) if pi),
        Fraction(0),
    )


def row_payoffs(g, x1):
    """Payoff of ``x1`` against each pure column."""
    p = _probs(x1)
    if len(p) != g.rows:
        raise DimensionError(f"strategy of length {len(p)} for {g.rows} rows")
    return tuple(
        sum((pi * g.payoffs[i][j] for i, pi in enumerate(p) if pi), Fraction(0))
        for j in range(g.cols)
    )


def col_payoffs(g, x2):
    """Payoff of each pure row against ``x2``."""
    q = _probs(x2)
    if len(q) != g.cols:
        raise DimensionError(f"strategy of length {len(q)} for {g.cols} columns")
    return tuple(
        sum((qj * a for qj, a in zip(q, row) if qj), Fraction(0)) for row in g.payoffs
    )


def dual(g):
    """Negated transpose: the same game seen from the column player's side."""
    return Game(tuple(tuple(-a for a in g.column(j)) for j in range(g.cols)))


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering ``range(size)``, stored canonically.

    Blocks are sorted internally and ordered by their smallest element, so two
    listings of the same partition compare equal.
    """

    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = [tuple(sorted(int(i) for i in b)) for b in self.blocks]
        if not blocks:
            raise SpecError("partition has no blocks")
        seen = set()
        for b in blocks:
            if not b:
                raise SpecError("partition has an empty block")
            for i in b:
                if i in seen:
                    raise SpecError(f"index {i + 1} appears in two blocks")
                seen.add(i)
        if seen != set(range(len(seen))):
            missing = sorted(set(range(max(seen) + 1)) - seen)
            raise SpecError(f"partition does not cover index {missing[0] + 1}")
        object.__setattr__(self, "blocks", tuple(sorted(blocks)))

    @classmethod
    def singletons(cls, size):
        return cls(tuple((i,) for i in range(size)))

    @classmethod
    def merging(cls, size, subset):
        """``subset`` as one block, every other index alone."""
        subset = tuple(sorted(set(subset)))
        if not subset:
            raise SpecError("merged block is empty")
        if subset[0] < 0 or subset[-1] >= size:
            raise SpecError(f"index out of range 1..{size}")
        rest = tuple((i,) for i in range(size) if i not in subset)
        return cls((subset,) + rest)

    @property
    def size(self):
        return sum(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def block_of(self, i):
        for t, b in enumerate(self.blocks):
            if i in b:
                return t
        raise IndexError(i)

    def is_trivial(self):
        return all(len(b) == 1 for b in self.blocks)

    def merged_blocks(self):
        return tuple(b for b in self.blocks if len(b) > 1)

    def __str__(self):
        return "".join("{" + ",".join(str(i + 1) for i in b) + "}" for b in self.blocks)


def check_profile(partition, profile):
    """Validate a distribution profile (one probability vector per block).

    Returns the profile as a tuple of tuples of Fractions.
    """
    profile = tuple(tuple(as_rational(p) for p in dist) for dist in profile)
    if len(profile) != len(partition):
        raise SpecError(
            f"profile has {len(profile)} distributions for {len(partition)} blocks"
        )
    for t, (block, dist) in enumerate(zip(partition.blocks, profile)):
        if len(dist) != len(block):
            raise SpecError(
                f"distribution {t + 1} has {len(dist)} entries for a block of {len(block)}"
            )
        if any(p < 0 for p in dist) or sum(dist) != 1:
            raise SpecError(f"distribution {t + 1} is not a probability vector")
    return profile


@dataclass(frozen=True)
class ReductionSpec:
    """Which player is reduced, both partitions, and the block distributions.

    ``profile`` is aligned with the reduced player's partition. An elementary
    reduction is a spec whose reduced partition has one merged block and whose
    other partition is all singletons.
    """

    reduced_player: int
    row_partition: Partition
    col_partition: Partition
    profile: Tuple[Vector, ...]

    def __post_init__(self):
        if self.reduced_player not in (1, 2):
            raise SpecError(f"reduced player must be 1 or 2, got {self.reduced_player}")
        object.__setattr__(self, "profile", check_profile(self.partition, self.profile))

    @classmethod
    def elementary(cls, rows, cols, subset, p, player=1):
        """Spec packaging ``subset`` (0-based) of ``player``'s strategies with ``p``."""
        size, other = (rows, cols) if player == 1 else (cols, rows)
        subset = tuple(subset)
        if len(set(subset)) != len(subset):
            raise SpecError("repeated index in subset")
        p = tuple(p)
        if len(p) != len(subset):
            raise SpecError(f"{len(p)} probabilities for a subset of {len(subset)}")
        merged = Partition.merging(size, subset)
        # p is given in the caller's subset order; the block is stored sorted
        weights = dict(zip(subset, (as_rational(a) for a in p)))
        profile = tuple(
            tuple(weights[i] for i in b) if len(b) > 1 or b[0] in weights else (Fraction(1),)
            for b in merged.blocks
        )
        parts = (merged, Partition.singletons(other))
        if player == 2:
            parts = parts[::-1]
        return cls(player, parts[0], parts[1], profile)

    @property
    def partition(self):
        """Partition of the reduced player's strategies."""
        return self.row_partition if self.reduced_player == 1 else self.col_partition

    @property
    def other_partition(self):
        return self.col_partition if self.reduced_player == 1 else self.row_partition

    @property
    def shape(self):
        return self.row_partition.size, self.col_partition.size

    def fits(self, g):
        if (g.rows, g.cols) != self.shape:
            raise DimensionError(
                f"spec is for a {self.shape[0]}x{self.shape[1]} game, got {g.rows}x{g.cols}"
            )

    def is_elementary(self):
        return len(self.partition.merged_blocks()) <= 1 and self.other_partition.is_trivial()

    def transposed(self):
        """The same reduction described for the dual game."""
        return ReductionSpec(
            3 - self.reduced_player, self.col_partition, self.row_partition, self.profile
        )

    def sort_key(self):
        return (
            self.reduced_player,
            self.row_partition.blocks,
            self.col_partition.blocks,
            self.profile,
        )
