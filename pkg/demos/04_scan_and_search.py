"""
Scanning and searching
======================

For 2x2 games the two desirability notions coincide; a seeded random scan
looks for a counterexample. For a given game, a search lists the row
reductions built from its own optimal strategies that keep the value.
"""

from gkt import Game, scan_2x2, search_desirable

report = scan_2x2(trials=200, seed=42, denominator_bound=6)
print(f"{report.trials} random 2x2 games, {report.structures_checked} reductions, "
      f"{len(report.violations)} mismatches")

dominated = Game.from_rows([[1, -1], [-1, 1], [-5, -5]])
for spec, rep in search_desirable(dominated):
    dists = " | ".join(" ".join(map(str, d)) for d in spec.profile)
    print(f"rows {spec.row_partition}  dist {dists}  -> {rep.reduced_game.rows}x{rep.reduced_game.cols}")
