"""
Packaging strategies into one
=============================

An elementary reduction replaces a subset of the row player's strategies by a
single strategy that randomizes over the subset. Whether the value survives
depends entirely on the optimal strategies of the original game.
"""

from fractions import Fraction as F

from gkt import Game, elementary_reduce, min_mass, solve, verify_thm_2_2

pennies = Game.from_rows([[1, -1], [-1, 1]])

for p in [(F(1, 2), F(1, 2)), (F(2, 3), F(1, 3)), (F(1), F(0))]:
    reduced = elementary_reduce(pennies, (0, 1), p)
    print(f"package both rows with {tuple(map(str, p))}: "
          f"reduced row {' '.join(map(str, reduced.game.payoffs[0]))}, value {solve(reduced.game).value}")

# Only the distribution read off the optimum (1/2, 1/2) keeps the value.
# Every optimal strategy uses the subset, so preservation is equivalent to
# the distribution being a conditional of some optimal strategy:
for p in [(F(1, 2), F(1, 2)), (F(1), F(0))]:
    v = verify_thm_2_2(pennies, (0, 1), p)
    print(f"p={tuple(map(str, p))}: branch {v.branch}, preserved {v.value_preserved}, "
          f"conditional of an optimum {v.conditional_feasible}")

# Strictly dominated rows are never needed, so packaging them together is
# harmless whatever the distribution.
dominated = Game.from_rows([[1, -1], [-1, 1], [-5, -5], [-6, -4]])
print("\nleast optimal mass on rows 3,4:", min_mass(dominated, [2, 3]))
for q in [(F(1, 2), F(1, 2)), (F(0), F(1)), (F(5, 6), F(1, 6))]:
    v = verify_thm_2_2(dominated, (2, 3), q)
    print(f"package rows 3,4 with {tuple(map(str, q))}: branch {v.branch}, "
          f"preserved {v.value_preserved}")
