import random
from fractions import Fraction as F

import pytest
from conftest import NESTED, MATCHING_PENNIES

from gkt import Game, MixedStrategy, Partition, ReductionSpec, dual, payoff
from gkt.errors import DimensionError, SpecError
from gkt.lp import value


def test_payoff_matching_pennies():
    x = MixedStrategy((F(1, 2), F(1, 2)), 1)
    y = MixedStrategy((F(1, 2), F(1, 2)), 2)
    assert payoff(MATCHING_PENNIES, x, y) == 0


def test_payoff_pure_is_entry():
    for i in range(4):
        for j in range(4):
            x = MixedStrategy.pure(i, 4, 1)
            y = MixedStrategy.pure(j, 4, 2)
            assert payoff(NESTED, x, y) == NESTED[i, j]


def test_payoff_nested_against_first_column():
    x = MixedStrategy((F(1, 3), F(1, 6), F(1, 3), F(1, 6)))
    assert payoff(NESTED, x, MixedStrategy.pure(0, 4, 2)) == F(1, 2)


def test_payoff_dimension_mismatch():
    with pytest.raises(DimensionError):
        payoff(MATCHING_PENNIES, MixedStrategy((1,)), MixedStrategy((F(1, 2), F(1, 2)), 2))


def test_dual_examples():
    assert dual(MATCHING_PENNIES) == Game.from_rows([[-1, 1], [1, -1]])
    assert dual(Game.from_rows([[F(3, 7)]])) == Game.from_rows([[F(-3, 7)]])
    assert value(dual(NESTED)) == F(-1, 2)


def _random_game(rng, m=None, n=None):
    m = m or rng.randint(1, 4)
    n = n or rng.randint(1, 4)
    return Game.from_rows([[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)])


def _random_strategy(rng, size, player=1):
    w = [rng.randint(0, 6) for _ in range(size)]
    w[rng.randrange(size)] += 1
    return MixedStrategy(tuple(F(a, sum(w)) for a in w), player)


def test_payoff_bilinear_randomized():
    rng = random.Random(7)
    for _ in range(300):
        g = _random_game(rng)
        x, y = _random_strategy(rng, g.rows), _random_strategy(rng, g.rows)
        z = _random_strategy(rng, g.cols, 2)
        a = F(rng.randint(0, 12), 12)
        mix = MixedStrategy(tuple(a * p + (1 - a) * q for p, q in zip(x, y)))
        assert payoff(g, mix, z) == a * payoff(g, x, z) + (1 - a) * payoff(g, y, z)


def test_dual_involution_randomized():
    rng = random.Random(8)
    for _ in range(200):
        g = _random_game(rng)
        assert dual(dual(g)) == g


def test_game_validation():
    with pytest.raises(DimensionError):
        Game.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionError):
        Game.from_rows([])
    with pytest.raises(TypeError):
        Game.from_rows([[0.5]])


def test_strategy_validation():
    with pytest.raises(DimensionError):
        MixedStrategy((F(1, 2), F(1, 3)))
    with pytest.raises(DimensionError):
        MixedStrategy((F(3, 2), F(-1, 2)))


def test_partition_normalization_is_order_independent():
    rng = random.Random(9)
    for _ in range(100):
        size = rng.randint(1, 7)
        labels = [rng.randrange(size) for _ in range(size)]
        blocks = {}
        for i, lab in enumerate(labels):
            blocks.setdefault(lab, []).append(i)
        listing = [list(reversed(b)) for b in blocks.values()]
        rng.shuffle(listing)
        p = Partition(tuple(map(tuple, listing)))
        assert Partition(p.blocks) == p
        assert list(p.blocks) == sorted(p.blocks)
        assert all(list(b) == sorted(b) for b in p.blocks)
        assert p.size == size


@pytest.mark.parametrize(
    "blocks", [((0, 1), (1, 2)), ((0,), (2,)), ((0, 1), ()), ()]
)
def test_partition_rejects_invalid(blocks):
    with pytest.raises(SpecError):
        Partition(blocks)


def test_partition_rendering_is_one_based():
    assert str(Partition(((2, 3), (0, 1)))) == "{1,2}{3,4}"


def test_spec_profile_alignment():
    rows = Partition(((0, 1), (2,)))
    with pytest.raises(SpecError):
        ReductionSpec(1, rows, Partition.singletons(2), ((F(1, 2), F(1, 2)),))
    with pytest.raises(SpecError):
        ReductionSpec(1, rows, Partition.singletons(2), ((F(1, 2), F(1, 3)), (1,)))


def test_elementary_spec_shape():
    spec = ReductionSpec.elementary(3, 2, (2, 0), (F(1, 4), F(3, 4)))
    assert spec.row_partition == Partition(((0, 2), (1,)))
    # p follows the caller's subset order
    assert spec.profile == ((F(3, 4), F(1, 4)), (F(1),))
    assert spec.is_elementary()
    spec2 = ReductionSpec.elementary(3, 2, (0, 1), (F(1, 2), F(1, 2)), player=2)
    assert spec2.col_partition == Partition(((0, 1),))
    assert spec2.row_partition.is_trivial()


def test_elementary_spec_length_mismatch():
    with pytest.raises(SpecError):
        ReductionSpec.elementary(4, 2, (1, 3), (1,))
