"""
Reducing both sides
===================

A general reduction partitions both players' strategies. The reduced payoff
of a pair of blocks is the worst case, over the column block, of the packaged
row. Keeping the value and restoring every optimal strategy are no longer
the same thing.
"""

from fractions import Fraction as F

from gkt import Game, Partition, ReductionSpec, check_reduction, verify_thm_2_4


def show(title, g, spec):
    rep = check_reduction(g, spec)
    print(title)
    print("  reduced game:", [list(map(str, r)) for r in rep.reduced_game.payoffs])
    print(f"  value {rep.original_value} -> {rep.reduced_value}; "
          f"preserved {rep.value_preserved}, all optima restorable {rep.all_optima_restorable}")
    for lv in rep.lifted_vertices:
        print(f"  reduced optimum {lv.reduced} lifts to {lv.lifted}: optimal {lv.is_optimal}")
    return rep


pennies = Game.from_rows([[1, -1], [-1, 1]])
split_rows = ReductionSpec(1, Partition(((0,), (1,))), Partition(((0, 1),)), ((1,), (1,)))
show("Matching Pennies, columns merged:", pennies, split_rows)

# Here both flags are false: the reduced optimum (0, 1) lifts to a
# non-optimal strategy, so this pair does not separate the two notions.

nested = Game.from_rows([[3, 0, -1, -1], [0, 3, -1, 2], [-1, -1, 3, 0], [-1, 2, 0, 3]])
blocks = Partition(((0, 1), (2, 3)))
spec = ReductionSpec(1, blocks, blocks, ((F(2, 3), F(1, 3)), (F(2, 3), F(1, 3))))
show("\n4x4 game, pairs of rows and columns merged:", nested, spec)

# The value drops from 1/2 to 0, yet the only reduced optimum lifts to an
# optimal strategy of the original game.

# When every optimum restores, the profile must come from an optimal strategy.
v = verify_thm_2_4(nested, spec)
print("\nprofile generated by optimum:", v.witness)
v = verify_thm_2_4(pennies, split_rows)
print("Matching Pennies: restorable", v.hypothesis_met, "yet profile derivable", v.profile_derivable)
