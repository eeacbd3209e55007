"""
Solving zero-sum games exactly
==============================

Values, optimal strategies and the full set of optimal strategies, all in
exact rational arithmetic.
"""

from fractions import Fraction

from gkt import Game, dual, optimal_vertices, solve

# Matching Pennies: the row player wins on a match.
pennies = Game.from_rows([[1, -1], [-1, 1]])
res = solve(pennies)
print("Matching Pennies value:", res.value)
print("  row strategy:", res.opt_row, " column strategy:", res.opt_col)

# A 4x4 game whose optimal strategies are not uniform.
g = Game.from_rows([[3, 0, -1, -1], [0, 3, -1, 2], [-1, -1, 3, 0], [-1, 2, 0, 3]])
res = solve(g)
print("\n4x4 value:", res.value, "row strategy:", res.opt_row)

# Seen from the column player's side the value flips sign.
print("value of the dual game:", solve(dual(g)).value)

# Optimal strategies form a polytope. When some rows are interchangeable the
# polytope has several vertices; every optimal strategy mixes them.
flat = Game.from_rows([[-1], [-1], [Fraction(-3, 2)]])
poly = optimal_vertices(flat, player=1)
print("\nvertices of the optimal set of", [list(map(str, r)) for r in flat.payoffs])
for v in poly.vertices:
    print("  ", v)
