"""Small exact linear-algebra kernel over Fractions.

Only what support enumeration needs: solving an affine system into
particular-solution-plus-nullspace form, and enumerating the vertices of a
bounded polytope given by that affine space and linear inequalities.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns. Does not modify ``rows``."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve_affine(a: Matrix, b: Sequence[Fraction], nvars: int) -> tuple[Vector, list[Vector]] | None:
    """Solve ``a x = b``.

    Returns ``(x0, basis)`` so that the solution set is
    ``{x0 + sum t_k basis[k]}``, or None if the system is inconsistent.
    """
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    if not aug:
        return [Fraction(0)] * nvars, [_unit(nvars, j) for j in range(nvars)]
    m, pivots = rref(aug)
    if nvars in pivots:
        return None
    x0 = [Fraction(0)] * nvars
    for row, c in zip(m, pivots):
        x0[c] = row[nvars]
    free = [j for j in range(nvars) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nvars
        v[f] = Fraction(1)
        for row, c in zip(m, pivots):
            v[c] = -row[f]
        basis.append(v)
    return x0, basis


def _unit(n: int, j: int) -> Vector:
    return [Fraction(int(i == j)) for i in range(n)]


def polytope_vertices(
    eq_a: Matrix,
    eq_b: Sequence[Fraction],
    ineq_a: Matrix,
    ineq_b: Sequence[Fraction],
    nvars: int,
) -> list[tuple[Fraction, ...]] | None:
    """Vertices of ``{x : eq_a x = eq_b, ineq_a x >= ineq_b}``.

    The polytope must be bounded and pointed. Returns None when it is
    empty, otherwise the distinct vertices in sorted order.
    """
    sol = solve_affine(eq_a, eq_b, nvars)
    if sol is None:
        return None
    x0, basis = sol
    d = len(basis)
    # inequality k in the parameter space: c_k + g_k . t >= 0
    consts = [sum((ai * xi for ai, xi in zip(row, x0)), Fraction(0)) - rhs for row, rhs in zip(ineq_a, ineq_b)]
    grads = [[sum((ai * bi for ai, bi in zip(row, vec)), Fraction(0)) for vec in basis] for row in ineq_a]

    def point(t: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(x0[i] + sum((tk * vec[i] for tk, vec in zip(t, basis)), Fraction(0)) for i in range(nvars))

    def feasible(t: Sequence[Fraction]) -> bool:
        return all(c + sum((g * tk for g, tk in zip(gr, t)), Fraction(0)) >= 0 for c, gr in zip(consts, grads))

    if d == 0:
        return [point(())] if feasible(()) else None
    found = set()
    for tight in itertools.combinations(range(len(consts)), d):
        sub = solve_affine([grads[k] for k in tight], [-consts[k] for k in tight], d)
        if sub is None or sub[1]:
            continue
        t = sub[0]
        if feasible(t):
            found.add(point(t))
    return sorted(found) if found else None
