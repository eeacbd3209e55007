"""Two-phase primal simplex on exact rationals with Bland's rule.

Bland's rule (smallest entering index, ties in the ratio test broken by the
smallest basic variable) guarantees termination without perturbation and
makes the returned basic solution a deterministic function of the input.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[Tuple[Fraction, ...]] = None
    objective: Optional[Fraction] = None


def _pivot(rows, obj, basis, r, c):
    prow = rows[r]
    piv = prow[c]
    if piv != 1:
        inv = 1 / piv
        prow[:] = [a * inv if a else a for a in prow]
    nz = [(k, a) for k, a in enumerate(prow) if a]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                for k, a in nz:
                    row[k] -= f * a
    f = obj[c]
    if f:
        for k, a in nz:
            obj[k] -= f * a
    basis[r] = c


def _run(rows, obj, basis, allowed):
    """Maximize; ``obj`` holds reduced costs with the negated value in its last slot."""
    last = len(obj) - 1
    while True:
        enter = next((j for j in range(last) if allowed[j] and obj[j] > 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                key = (row[last] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return UNBOUNDED
        _pivot(rows, obj, basis, best[1], enter)


def maximize_standard(c, A, b):
    """Maximize ``c·x`` subject to ``A x = b`` and ``x >= 0``."""
    m, n = len(A), len(c)
    rows = []
    for i in range(m):
        row = [Fraction(a) for a in A[i]] + [ZERO] * m + [Fraction(b[i])]
        if row[-1] < 0:
            row = [-a for a in row]
        row[n + i] = ONE
        rows.append(row)
    basis = list(range(n, n + m))
    width = n + m + 1

    # phase 1: maximize -(sum of artificials)
    obj = [ZERO] * width
    for row in rows:
        for k in range(n):
            obj[k] += row[k]
        obj[-1] += row[-1]
    allowed = [True] * (n + m)
    _run(rows, obj, basis, allowed)
    if obj[-1] != 0:
        return LPResult(INFEASIBLE)

    # drive zero-level artificials out of the basis; drop redundant rows
    i = 0
    while i < len(rows):
        if basis[i] >= n:
            c_in = next((k for k in range(n) if rows[i][k]), None)
            if c_in is None:
                del rows[i]
                del basis[i]
                continue
            _pivot(rows, obj, basis, i, c_in)
        i += 1
    for row in rows:
        del row[n:n + m]

    obj = [Fraction(a) for a in c] + [ZERO]
    for i, row in enumerate(rows):
        cb = obj[basis[i]]
        if cb:
            for k in range(n + 1):
                if row[k]:
                    obj[k] -= cb * row[k]
    status = _run(rows, obj, basis, [True] * n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [ZERO] * n
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    return LPResult(OPTIMAL, tuple(x), -obj[-1])


def maximize(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), free=()):
    """Maximize ``c·x`` with ``A_ub x <= b_ub``, ``A_eq x = b_eq``.

    Variables are nonnegative except those listed in ``free``.
    """
    n = len(c)
    free = sorted(set(free))
    n_ub = len(A_ub)
    # columns: x (n), negative parts of free vars, slacks
    width = n + len(free) + n_ub

    def expand(row):
        out = list(row) + [-row[j] for j in free]
        return out

    A = []
    b = []
    for i, (row, rhs) in enumerate(zip(A_ub, b_ub)):
        r = expand(row) + [ZERO] * n_ub
        r[n + len(free) + i] = ONE
        A.append(r)
        b.append(rhs)
    for row, rhs in zip(A_eq, b_eq):
        A.append(expand(row) + [ZERO] * n_ub)
        b.append(rhs)
    cc = expand(c) + [ZERO] * n_ub
    assert all(len(r) == width for r in A)
    res = maximize_standard(cc, A, b)
    if res.status != OPTIMAL:
        return res
    x = list(res.x[:n])
    for k, j in enumerate(free):
        x[j] -= res.x[n + k]
    return LPResult(OPTIMAL, tuple(x), res.objective)
