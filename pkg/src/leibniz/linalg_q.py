"""Rational eigen-data for operators over Q.

Used for the one-dimensional-ideal search over the rationals: a line ``Fv`` is
a two-sided ideal exactly when ``v`` is a common eigenvector of every left and
right multiplication by a basis vector.  Characteristic polynomials and their
rational roots come from sympy; everything else stays in ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy

from .field import FieldSpec
from .subspace import Subspace, Vector, left_kernel, rref


def mat_mul(F: FieldSpec, A: Sequence[Vector], B: Sequence[Vector]) -> list[Vector]:
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [F.zero] * n
        for k, a in enumerate(row):
            if a != 0:
                for j, b in enumerate(B[k]):
                    if b != 0:
                        acc[j] = acc[j] + a * b
        out.append(tuple(F.reduce(x) for x in acc))
    return out


def kernel(F: FieldSpec, T: Sequence[Vector]) -> Subspace:
    """{v : v·T = 0} for a square matrix T in the row-vector convention."""
    n = len(T)
    if n == 0:
        return Subspace.zero(F, 0)
    return Subspace(F, n, rref(F, left_kernel(F, T, len(T[0])), n))


def fitting_null_component(F: FieldSpec, T: Sequence[Vector]) -> Subspace:
    n = len(T)
    P = list(T)
    for _ in range(max(n - 1, 0)):
        P = mat_mul(F, P, T)
    return kernel(F, P)


def shifted(F: FieldSpec, T: Sequence[Vector], lam) -> list[Vector]:
    return [tuple(F.sub(x, lam) if i == j else x for j, x in enumerate(row)) for i, row in enumerate(T)]


def rational_eigenvalues(T: Sequence[Vector]) -> list[Fraction]:
    """Distinct rational roots of the characteristic polynomial, ascending."""
    n = len(T)
    if n == 0:
        return []
    M = sympy.Matrix(n, n, lambda i, j: sympy.Rational(Fraction(T[i][j]).numerator, Fraction(T[i][j]).denominator))
    x = sympy.Symbol("x")
    poly = sympy.Poly(M.charpoly(x).as_expr(), x, domain="QQ")
    roots = poly.ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def eigenvalues(F: FieldSpec, T: Sequence[Vector]) -> list:
    """Eigenvalues lying in F (brute force over GF(p), rational roots over Q)."""
    if F.is_finite:
        return [lam for lam in F.elements() if not kernel(F, shifted(F, T, lam)).is_zero()]
    return rational_eigenvalues(T)


def joint_eigenspaces(F: FieldSpec, ops: Sequence[Sequence[Vector]], n: int) -> list[tuple[Subspace, tuple]]:
    """Nonzero common eigenspaces of the given operators with their eigenvalue tuples."""
    spaces: list[tuple[Subspace, tuple]] = [(Subspace.full(F, n), ())]
    for T in ops:
        if all(not any(row) for row in T):
            spaces = [(W, lams + (F.zero,)) for W, lams in spaces]
            continue
        evs = eigenvalues(F, T)
        nxt = []
        for W, lams in spaces:
            for lam in evs:
                E = kernel(F, shifted(F, T, lam)).intersect(W)
                if not E.is_zero():
                    nxt.append((E, lams + (lam,)))
        spaces = nxt
        if not spaces:
            break
    return spaces
