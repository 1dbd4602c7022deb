"""Exact rational feasibility for small linear systems over x >= 0."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence[int | Fraction]


def simplex_feasible(
    A_eq: Sequence[Row] = (),
    b_eq: Row = (),
    A_ub: Sequence[Row] = (),
    b_ub: Row = (),
) -> list[Fraction] | None:
    """Return ``x >= 0`` with ``A_eq x = b_eq`` and ``A_ub x <= b_ub``, or None.

    Phase one of the tableau simplex method with Bland's rule, in exact
    arithmetic. Every row gets an artificial variable; the system is
    feasible iff the artificial sum can be driven to zero.
    """
    nvars = len((list(A_eq) + list(A_ub))[0]) if (A_eq or A_ub) else 0
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    n_slack = len(A_ub)
    for r, b in zip(A_eq, b_eq):
        rows.append([Fraction(a) for a in r] + [Fraction(0)] * n_slack)
        rhs.append(Fraction(b))
    for k, (r, b) in enumerate(zip(A_ub, b_ub)):
        slack = [Fraction(0)] * n_slack
        slack[k] = Fraction(1)
        rows.append([Fraction(a) for a in r] + slack)
        rhs.append(Fraction(b))
    m = len(rows)
    if m == 0:
        return [Fraction(0)] * nvars
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
    ncols = nvars + n_slack
    # tableau columns: structural + slack, then one artificial per row
    T = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [ncols + i for i in range(m)]
    width = ncols + m
    # reduced costs of phase-one objective (minimize sum of artificials)
    cost = [-sum(T[i][j] for i in range(m)) for j in range(width)] + [-sum(rhs)]
    for j in range(ncols, width):
        cost[j] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best, leave = None, None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise ArithmeticError("phase-one objective unbounded (cannot happen)")
        piv = T[leave][enter]
        T[leave] = [a / piv for a in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
        f = cost[enter]
        cost = [a - f * b for a, b in zip(cost, T[leave])]
        basis[leave] = enter
    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return x[:nvars]


def fourier_motzkin_feasible(A_ub: Sequence[Row], b_ub: Row, nonneg: bool = True) -> bool:
    """Decide ``A_ub x <= b_ub`` (and ``x >= 0``) by eliminating variables one by one."""
    rows = [([Fraction(a) for a in r], Fraction(b)) for r, b in zip(A_ub, b_ub)]
    n = len(rows[0][0]) if rows else 0
    if nonneg:
        for j in range(n):
            rows.append(([Fraction(-int(i == j)) for i in range(n)], Fraction(0)))
    for j in range(n):
        pos = [r for r in rows if r[0][j] > 0]
        neg = [r for r in rows if r[0][j] < 0]
        keep = [r for r in rows if r[0][j] == 0]
        for cp, bp in pos:
            for cn, bn in neg:
                sp, sn = cp[j], -cn[j]
                coeffs = [sn * a + sp * b for a, b in zip(cp, cn)]
                keep.append((coeffs, sn * bp + sp * bn))
        rows = list({(tuple(c), b) for c, b in keep})
        rows = [(list(c), b) for c, b in rows]
    return all(b >= 0 for _, b in rows)
