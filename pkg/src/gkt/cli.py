"""Command line interface.

Exit status: 0 when the command ran and its verdicts hold, 1 when it ran and
found a counterexample (a non-restorable witness, a violated characterisation, a scan
violation), 2 for unusable input.
"""

import argparse
import json
import os
import sys

from . import formats
from .errors import GKTError, GuardExceeded, ParseError
from .game import ReductionSpec
from .lab import check_reduction, scan_2x2, search_desirable, verify_thm_2_2, verify_thm_2_4
from .lp import DEFAULT_VERTEX_GUARD, optimal_vertices, solve
from .numeric import approx, render, render_vector
from .reduction import derive_profile, general_reduce, lift

EXIT_OK, EXIT_VERDICT, EXIT_INPUT = 0, 1, 2


class Output:
    """Collects ordered fields and prints them as ``key: value`` lines or JSON."""

    def __init__(self, as_json, with_approx):
        self.as_json = as_json
        self.with_approx = with_approx
        self.fields = {}
        self.lines = []

    def scalar(self, key, r):
        self.fields[key] = render(r)
        if self.with_approx:
            self.fields[key + "_approx"] = approx(r)
            self.lines.append(f"{key}: {render(r)}  [approx {approx(r)}]")
        else:
            self.lines.append(f"{key}: {render(r)}")

    def vector(self, key, vec):
        self.fields[key] = [render(a) for a in vec]
        self.lines.append(f"{key}: {render_vector(vec)}")

    def flag(self, key, b):
        self.fields[key] = bool(b)
        self.lines.append(f"{key}: {'yes' if b else 'no'}")

    def text(self, key, s, plain=None):
        self.fields[key] = s
        self.lines.append(f"{key}: {s if plain is None else plain}")

    def number(self, key, k):
        self.fields[key] = k
        self.lines.append(f"{key}: {k}")

    def items(self, key, records, plain_lines):
        self.fields[key] = records
        self.lines.extend(plain_lines)

    def emit(self, stream):
        if self.as_json:
            stream.write(json.dumps(self.fields, indent=2) + "\n")
        else:
            stream.write("".join(line + "\n" for line in self.lines))


def _strategy_or_none(out, key, x):
    if x is None:
        out.fields[key] = None
        out.lines.append(f"{key}: none")
    else:
        out.vector(key, x)


def cmd_solve(args, out):
    res = solve(formats.read_game(args.game))
    out.scalar("value", res.value)
    out.vector("row_strategy", res.opt_row)
    out.vector("col_strategy", res.opt_col)
    return EXIT_OK


def cmd_vertices(args, out):
    poly = optimal_vertices(formats.read_game(args.game), args.player, args.guard)
    out.number("player", poly.player)
    out.scalar("value", poly.value)
    out.number("vertex_count", len(poly.vertices))
    out.items(
        "vertices",
        [[render(a) for a in v] for v in poly.vertices],
        [f"vertex {k}: {render_vector(v)}" for k, v in enumerate(poly.vertices, 1)],
    )
    return EXIT_OK


def cmd_reduce(args, out):
    g = formats.read_game(args.game)
    spec = formats.read_spec(args.spec)
    reduced = general_reduce(g, spec).game
    text = formats.render_game(reduced)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if out.as_json:
        out.number("rows", reduced.rows)
        out.number("cols", reduced.cols)
        out.fields["payoffs"] = [[render(a) for a in row] for row in reduced.payoffs]
    elif not args.out:
        out.lines.extend(text.splitlines())
    else:
        out.text("wrote", args.out)
    return EXIT_OK


def cmd_lift(args, out):
    spec = formats.read_spec(args.spec)
    x = formats.parse_vector(args.strategy)
    out.vector("lifted", lift(x, spec))
    return EXIT_OK


def cmd_derive(args, out):
    g = formats.read_game(args.game)
    partition = formats.parse_partition(args.partition)
    poly = optimal_vertices(g, 1, args.guard)
    if not 1 <= args.vertex <= len(poly.vertices):
        raise GKTError(f"--vertex must be between 1 and {len(poly.vertices)}")
    x = poly.vertices[args.vertex - 1]
    profile = derive_profile(x, partition)
    out.vector("vertex", x)
    out.text("rows", str(partition))
    out.text("dist", formats.render_profile(profile))
    return EXIT_OK


def _report(out, rep):
    out.number("reduced_player", rep.reduced_player)
    out.scalar("original_value", rep.original_value)
    out.scalar("reduced_value", rep.reduced_value)
    out.flag("value_preserved", rep.value_preserved)
    out.flag("all_optima_restorable", rep.all_optima_restorable)
    _strategy_or_none(out, "witness", rep.witness)
    out.items(
        "lifted_vertices",
        [
            {
                "reduced": [render(a) for a in lv.reduced],
                "lifted": [render(a) for a in lv.lifted],
                "is_optimal": lv.is_optimal,
            }
            for lv in rep.lifted_vertices
        ],
        [
            f"reduced_vertex {k}: {render_vector(lv.reduced)} -> {render_vector(lv.lifted)}"
            f" {'optimal' if lv.is_optimal else 'not optimal'}"
            for k, lv in enumerate(rep.lifted_vertices, 1)
        ],
    )


def cmd_check(args, out):
    rep = check_reduction(formats.read_game(args.game), formats.read_spec(args.spec), args.guard)
    _report(out, rep)
    return EXIT_OK if rep.all_optima_restorable else EXIT_VERDICT


def cmd_verify_thm22(args, out):
    g = formats.read_game(args.game)
    subset = formats.parse_subset(args.subset)
    if subset[-1] >= g.rows:
        raise GKTError(f"--subset index out of range 1..{g.rows}")
    p = formats.parse_vector(args.dist)
    verdict = verify_thm_2_2(g, subset, p)
    out.number("branch", verdict.branch)
    out.scalar("min_mass", verdict.min_mass)
    out.flag("value_preserved", verdict.value_preserved)
    out.flag("conditional_feasible", verdict.conditional_feasible)
    _strategy_or_none(out, "witness", verdict.witness)
    out.flag("holds", verdict.holds)
    return EXIT_OK if verdict.holds else EXIT_VERDICT


def cmd_verify_thm24(args, out):
    verdict = verify_thm_2_4(formats.read_game(args.game), formats.read_spec(args.spec), args.guard)
    out.flag("hypothesis_met", verdict.hypothesis_met)
    out.flag("profile_derivable", verdict.profile_derivable)
    _strategy_or_none(out, "witness", verdict.witness)
    out.flag("holds", verdict.holds)
    return EXIT_OK if verdict.holds else EXIT_VERDICT


def cmd_search(args, out):
    found = search_desirable(formats.read_game(args.game), args.max_blocks)
    out.number("found", len(found))
    records, lines = [], []
    for k, (spec, rep) in enumerate(found, 1):
        shape = f"{rep.reduced_game.rows}x{rep.reduced_game.cols}"
        records.append({
            "rows": str(spec.row_partition),
            "cols": str(spec.col_partition),
            "dist": formats.render_profile(spec.profile),
            "reduced_shape": shape,
            "all_optima_restorable": rep.all_optima_restorable,
        })
        lines.append(
            f"spec {k}: rows {spec.row_partition} dist {formats.render_profile(spec.profile)}"
            f" reduced {shape} restorable {'yes' if rep.all_optima_restorable else 'no'}"
        )
    out.items("specs", records, lines)
    return EXIT_OK


def cmd_scan(args, out):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("GKT_SEED", "42"))
    rep = scan_2x2(args.trials, seed, args.denom)
    out.number("trials", rep.trials)
    out.number("seed", rep.seed)
    out.number("structures_checked", rep.structures_checked)
    out.number("violation_count", len(rep.violations))
    out.items(
        "violations",
        [
            {
                "trial": v.trial,
                "game": formats.render_game(v.game),
                "spec": formats.render_spec(v.spec),
                "value_preserved": v.report.value_preserved,
                "all_optima_restorable": v.report.all_optima_restorable,
            }
            for v in rep.violations
        ],
        [
            f"violation trial {v.trial}: game {'; '.join(formats.render_game(v.game).splitlines())}"
            f" spec {'; '.join(formats.render_spec(v.spec).splitlines())}"
            for v in rep.violations
        ],
    )
    return EXIT_VERDICT if rep.violations else EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--approx", action="store_true", default=argparse.SUPPRESS,
                        help="append decimal approximations (display only)")

    parser = argparse.ArgumentParser(prog="gkt", parents=[common],
                                     description="Exact zero-sum game reductions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def guard(p):
        p.add_argument("--guard", type=int, default=DEFAULT_VERTEX_GUARD,
                       help="largest strategy count for vertex enumeration")

    p = add("solve", cmd_solve, "value and one optimal strategy per player")
    p.add_argument("game")
    p = add("vertices", cmd_vertices, "vertices of a player's optimal polytope")
    p.add_argument("game")
    p.add_argument("--player", type=int, choices=(1, 2), default=1)
    guard(p)
    p = add("reduce", cmd_reduce, "apply a reduction spec")
    p.add_argument("game")
    p.add_argument("spec")
    p.add_argument("--out")
    p = add("lift", cmd_lift, "lift a reduced strategy to the original game")
    p.add_argument("spec")
    p.add_argument("--strategy", required=True)
    p = add("derive", cmd_derive, "profile induced by an optimal row vertex")
    p.add_argument("game")
    p.add_argument("--partition", required=True)
    p.add_argument("--vertex", type=int, default=1)
    guard(p)
    p = add("check", cmd_check, "value preservation and restorability of a reduction")
    p.add_argument("game")
    p.add_argument("spec")
    guard(p)
    p = add("verify-thm22", cmd_verify_thm22, "check the elementary packaging characterisation")
    p.add_argument("game")
    p.add_argument("--subset", required=True)
    p.add_argument("--dist", required=True)
    p = add("verify-thm24", cmd_verify_thm24, "check the necessary condition for restorable reductions")
    p.add_argument("game")
    p.add_argument("spec")
    guard(p)
    p = add("search", cmd_search, "value-preserving row reductions derived from optima")
    p.add_argument("game")
    p.add_argument("--max-blocks", type=int)
    p = add("scan-2x2", cmd_scan, "random 2x2 scan for preservation/restorability mismatches")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, help="defaults to $GKT_SEED, then 42")
    p.add_argument("--denom", type=int, default=6)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    out = Output(getattr(args, "json", False), getattr(args, "approx", False))
    try:
        status = args.func(args, out)
    except ParseError as exc:
        stderr.write(f"gkt: parse error: {exc}\n")
        return EXIT_INPUT
    except GuardExceeded as exc:
        stderr.write(f"gkt: {exc}\n")
        return EXIT_INPUT
    except (GKTError, OSError) as exc:
        stderr.write(f"gkt: {exc}\n")
        return EXIT_INPUT
    out.emit(stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
