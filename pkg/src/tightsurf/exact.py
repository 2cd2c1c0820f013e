"""Exact rational linear algebra and LP feasibility.

Everything here works over :class:`fractions.Fraction`; there are no
tolerances anywhere.  Points are plain tuples of fractions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]

LE, LT, EQ, GE, GT = "<=", "<", "=", ">=", ">"
_RELATIONS = (LE, LT, EQ, GE, GT)


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact code")
    return Fraction(x)


def vec(*xs) -> RatVector:
    if len(xs) == 1 and not isinstance(xs[0], (int, str, Fraction)):
        xs = tuple(xs[0])
    return tuple(rat(x) for x in xs)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def sub(u, v) -> RatVector:
    return tuple(a - b for a, b in zip(u, v))


def add(u, v) -> RatVector:
    return tuple(a + b for a, b in zip(u, v))


def scale(c, u) -> RatVector:
    return tuple(c * a for a in u)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def combination(weights: Sequence, points: Sequence[RatVector]) -> RatVector:
    """Affine combination ``sum w_i p_i / sum w_i`` (weights need not be normalised)."""
    total = sum(rat(w) for w in weights)
    if total == 0:
        raise ValueError("weights sum to zero")
    n = len(points[0])
    out = [Fraction(0)] * n
    for w, p in zip(weights, points):
        w = rat(w)
        for k in range(n):
            out[k] += w * p[k]
    return tuple(x / total for x in out)


def row_reduce(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(map(rat, r)) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[RatVector]:
    """Basis of ``{x : rows @ x = 0}``."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    red, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -red[r][f]
        basis.append(tuple(x))
    return basis


def affine_rank(points: Sequence[RatVector]) -> int:
    """Dimension of the affine hull of ``points``."""
    if not points:
        raise ValueError("no points")
    n = len(points[0])
    if any(len(p) != n for p in points):
        raise ValueError("points have mixed dimensions")
    base = points[0]
    return rank([sub(p, base) for p in points[1:]]) if len(points) > 1 else 0


def solve_affine(points: Sequence[RatVector], target: RatVector) -> RatVector | None:
    """Affine coordinates of ``target`` w.r.t. affinely independent ``points``, or None."""
    n = len(target)
    k = len(points)
    # columns: weights; rows: coordinates + sum-to-one
    rows = [[p[i] for p in points] + [target[i]] for i in range(n)]
    rows.append([Fraction(1)] * k + [Fraction(1)])
    red, pivots = row_reduce(rows)
    if k in pivots:
        return None
    w = [Fraction(0)] * k
    for r, pc in enumerate(pivots):
        w[pc] = red[r][k]
    return tuple(w)


@dataclass(frozen=True)
class LinearSystem:
    """Constraints ``coeffs . x  REL  rhs`` over ``num_vars`` variables.

    Variables are free unless listed in ``nonneg``; that is only a
    convenience that avoids splitting variables which are sign-constrained
    anyway (barycentric weights).
    """

    num_vars: int
    constraints: tuple = ()
    nonneg: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        cons = []
        for coeffs, rel, rhs in self.constraints:
            coeffs = tuple(rat(c) for c in coeffs)
            if len(coeffs) != self.num_vars:
                raise ValueError(
                    f"constraint has {len(coeffs)} coefficients, expected {self.num_vars}"
                )
            if rel not in _RELATIONS:
                raise ValueError(f"unknown relation {rel!r}")
            cons.append((coeffs, rel, rat(rhs)))
        object.__setattr__(self, "constraints", tuple(cons))
        object.__setattr__(self, "nonneg", frozenset(self.nonneg))
        if any(not 0 <= i < self.num_vars for i in self.nonneg):
            raise ValueError("nonneg index out of range")

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        if any(x[i] < 0 for i in self.nonneg):
            return False
        for coeffs, rel, rhs in self.constraints:
            lhs = dot(coeffs, x)
            ok = {
                LE: lhs <= rhs, LT: lhs < rhs, EQ: lhs == rhs, GE: lhs >= rhs, GT: lhs > rhs,
            }[rel]
            if not ok:
                return False
        return True


class _Tableau:
    """Dense simplex tableau in canonical form, maximising an objective.

    Bland's smallest-index rule throughout, so runs are deterministic and
    never cycle.
    """

    def __init__(self, rows, rhs, basis):
        self.rows = rows  # list[list[Fraction]]
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r, c):
        row = self.rows[r]
        inv = 1 / row[c]
        if inv != 1:
            row = [x * inv for x in row]
            self.rows[r] = row
            self.rhs[r] *= inv
        nz = [(j, x) for j, x in enumerate(row) if x != 0]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[c]
            if f != 0:
                for j, x in nz:
                    other[j] -= f * x
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def maximise(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> Fraction | None:
        """Run primal simplex; returns the optimum, or None if unbounded."""
        ncols = len(cost)
        while True:
            cb = [cost[b] for b in self.basis]
            entering = None
            for j in range(ncols):
                if not allowed[j] or j in self.basis:
                    continue
                red = cost[j] - sum(
                    (cb[i] * self.rows[i][j] for i in range(len(self.rows)) if cb[i] != 0),
                    Fraction(0),
                )
                if red > 0:
                    entering = j
                    break
            if entering is None:
                return sum((cb[i] * self.rhs[i] for i in range(len(self.rows))), Fraction(0))
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return None
            self.pivot(best[1], entering)


def _standard_form(system: LinearSystem, margin: bool):
    """Translate to ``A y = b, y >= 0``; returns tableau data and a decoder."""
    # column layout: variables (split when free), [t], slacks
    col_of: list[tuple[int, int | None]] = []
    ncols = 0
    for i in range(system.num_vars):
        if i in system.nonneg:
            col_of.append((ncols, None))
            ncols += 1
        else:
            col_of.append((ncols, ncols + 1))
            ncols += 2
    t_col = None
    if margin:
        t_col = ncols
        ncols += 1

    raw = []
    for coeffs, rel, rhs in system.constraints:
        if rel in (GE, GT):
            coeffs = tuple(-c for c in coeffs)
            rhs = -rhs
            rel = LE if rel == GE else LT
        raw.append((coeffs, rel, rhs))
    if margin:
        raw.append((None, LE, Fraction(1)))  # t <= 1
    n_slack = sum(1 for _, rel, _ in raw if rel != EQ)
    total = ncols + n_slack
    rows, rhs_list, slack_cols = [], [], []
    s = ncols
    for coeffs, rel, rhs in raw:
        row = [Fraction(0)] * total
        if coeffs is None:
            row[t_col] = Fraction(1)
        else:
            for i, c in enumerate(coeffs):
                if c:
                    p, q = col_of[i]
                    row[p] = c
                    if q is not None:
                        row[q] = -c
            if rel == LT:
                row[t_col] = Fraction(1)
        slack = None
        if rel != EQ:
            row[s] = Fraction(1)
            slack = s
            s += 1
        rows.append(row)
        rhs_list.append(rhs)
        slack_cols.append(slack)

    def decode(values):
        x = []
        for p, q in col_of:
            x.append(values[p] - (values[q] if q is not None else 0))
        return tuple(x)

    return rows, rhs_list, slack_cols, total, t_col, decode


def lp_feasible(system: LinearSystem) -> tuple[bool, RatVector | None]:
    """Decide exact feasibility of ``system``; returns ``(feasible, witness)``.

    Strict inequalities are handled with a margin variable ``t``: each
    ``a.x < b`` becomes ``a.x + t <= b`` and ``t`` (capped at 1) is
    maximised; the strict system is feasible iff the optimum is positive.
    """
    strict = any(rel in (LT, GT) for _, rel, _ in system.constraints)
    rows, rhs, slack_cols, total, t_col, decode = _standard_form(system, strict)

    # phase 1: slacks start basic where possible, artificials elsewhere
    basis = []
    n_art = 0
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
        if slack_cols[i] is not None and rows[i][slack_cols[i]] == 1:
            basis.append(slack_cols[i])
        else:
            basis.append(None)
            n_art += 1
    width = total + n_art
    a = total
    for i, row in enumerate(rows):
        row.extend([Fraction(0)] * n_art)
        if basis[i] is None:
            row[a] = Fraction(1)
            basis[i] = a
            a += 1

    tab = _Tableau(rows, rhs, basis)
    if n_art:
        cost = [Fraction(0)] * total + [Fraction(-1)] * n_art
        opt = tab.maximise(cost, [True] * width)
        if opt != 0:
            return False, None
        # drive zero-level artificials out of the basis; drop redundant rows
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= total:
                c = next((j for j in range(total) if tab.rows[r][j] != 0), None)
                if c is None:
                    del tab.rows[r], tab.rhs[r], tab.basis[r]
                    continue
                tab.pivot(r, c)
            r += 1
    allowed = [j < total for j in range(width)]

    if strict:
        cost = [Fraction(0)] * width
        cost[t_col] = Fraction(1)
        opt = tab.maximise(cost, allowed)
        if opt is None or opt <= 0:
            return False, None

    values = [Fraction(0)] * width
    for i, b in enumerate(tab.basis):
        values[b] = tab.rhs[i]
    witness = decode(values)
    return True, witness


def convex_weights(p: RatVector, points: Sequence[RatVector]) -> RatVector | None:
    """Barycentric weights expressing ``p`` as a convex combination, or None."""
    if not points:
        return None
    n = len(p)
    if any(len(q) != n for q in points):
        raise ValueError("dimension mismatch")
    k = len(points)
    cons = [([q[i] for q in points], EQ, p[i]) for i in range(n)]
    cons.append(([1] * k, EQ, 1))
    ok, w = lp_feasible(LinearSystem(k, tuple(cons), frozenset(range(k))))
    return w if ok else None


def iter_vectors(xs: Iterable) -> list[RatVector]:
    return [vec(x) for x in xs]
