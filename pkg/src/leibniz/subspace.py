"""Canonical subspaces of F^n and the exact linear algebra behind them.

A :class:`Subspace` always stores its basis in reduced row-echelon form, so
equal subspaces compare (and hash) equal.  Vectors are plain tuples of raw
field values (see :mod:`leibniz.field`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, Sequence

from .field import FieldSpec, FieldError, Raw

Vector = tuple


class AmbientMismatch(ValueError):
    pass


def _check_rows(rows, n):
    for r in rows:
        if len(r) != n:
            raise AmbientMismatch(f"vector of length {len(r)} in ambient dimension {n}")


def rref(F: FieldSpec, rows: Iterable[Sequence[Raw]], n: int) -> tuple[Vector, ...]:
    """Reduced row-echelon form, zero rows dropped."""
    p = F.modulus
    work = [list(r) for r in rows]
    _check_rows(work, n)
    out: list[list] = []
    for col in range(n):
        piv = None
        for idx, r in enumerate(work):
            if r[col] != 0:
                piv = idx
                break
        if piv is None:
            continue
        prow = work.pop(piv)
        c = prow[col]
        if c != 1:
            ci = F.inv(c)
            prow = [(x * ci) % p for x in prow] if p else [x * ci for x in prow]
        for bucket in (work, out):
            for r in bucket:
                f = r[col]
                if f != 0:
                    if p:
                        for k in range(col, n):
                            if prow[k]:
                                r[k] = (r[k] - f * prow[k]) % p
                    else:
                        for k in range(col, n):
                            if prow[k]:
                                r[k] = r[k] - f * prow[k]
        out.append(prow)
        if not work:
            break
    return tuple(tuple(r) for r in out)


def left_kernel(F: FieldSpec, matrix: Sequence[Sequence[Raw]], width: int) -> list[Vector]:
    """Basis of {t : sum_i t_i * matrix[i] = 0}, as vectors of length len(matrix)."""
    m = len(matrix)
    if m == 0:
        return []
    one, zero = F.one, F.zero
    aug = [list(matrix[i]) + [one if j == i else zero for j in range(m)] for i in range(m)]
    red = rref(F, aug, width + m)
    return [r[width:] for r in red if all(x == 0 for x in r[:width])]


def _pivot(row: Vector) -> int:
    for i, x in enumerate(row):
        if x != 0:
            return i
    raise ValueError("zero row")


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    n: int
    basis: tuple[Vector, ...] = ()
    pivots: tuple[int, ...] = dc_field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not self.pivots and self.basis:
            object.__setattr__(self, "pivots", tuple(_pivot(r) for r in self.basis))

    # -- constructors ----------------------------------------------------
    @classmethod
    def span(cls, F: FieldSpec, n: int, vectors: Iterable[Sequence[Raw]]) -> "Subspace":
        vectors = [tuple(F.coerce(x) for x in v) for v in vectors]
        return cls(F, n, rref(F, vectors, n))

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, ())

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, tuple(unit(F, n, i) for i in range(n)))

    # -- basic queries ---------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.n

    def reduce(self, v: Sequence[Raw]) -> Vector:
        """Remainder of v modulo this subspace (zero at every pivot column)."""
        p = self.field.modulus
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            f = v[pc]
            if f != 0:
                if p:
                    for k in range(pc, self.n):
                        if row[k]:
                            v[k] = (v[k] - f * row[k]) % p
                else:
                    for k in range(pc, self.n):
                        if row[k]:
                            v[k] = v[k] - f * row[k]
        return tuple(v)

    def contains(self, v: Sequence[Raw]) -> bool:
        if len(v) != self.n:
            raise AmbientMismatch("vector length differs from ambient dimension")
        return all(x == 0 for x in self.reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence[Raw]) -> Vector:
        """Coordinates of v (assumed in the subspace) w.r.t. the echelon basis."""
        return tuple(v[pc] for pc in self.pivots)

    def combine(self, coords: Sequence[Raw]) -> Vector:
        F = self.field
        acc = [F.zero] * self.n
        for c, row in zip(coords, self.basis):
            if c != 0:
                for k in range(self.n):
                    if row[k]:
                        acc[k] = acc[k] + c * row[k]
        return tuple(F.reduce(x) for x in acc)

    # -- lattice ---------------------------------------------------------
    def _same(self, other: "Subspace"):
        if self.n != other.n or self.field != other.field:
            raise AmbientMismatch(f"subspaces of {self.field}^{self.n} and {other.field}^{other.n}")

    def leq(self, other: "Subspace") -> bool:
        self._same(other)
        if self.dim > other.dim:
            return False
        return all(other.contains(r) for r in self.basis)

    __le__ = leq

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self.leq(other)

    def sum(self, other: "Subspace") -> "Subspace":
        self._same(other)
        if other.dim == 0 or other.leq(self):
            return self
        return Subspace(self.field, self.n, rref(self.field, self.basis + other.basis, self.n))

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: rows [u|u] and [v|0]; rows with zero left half span U ∩ V."""
        self._same(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.n)
        if self.leq(other):
            return self
        if other.leq(self):
            return other
        n, F = self.n, self.field
        z = (F.zero,) * n
        rows = [u + u for u in self.basis] + [v + z for v in other.basis]
        red = rref(F, rows, 2 * n)
        inter = [r[n:] for r in red if all(x == 0 for x in r[:n])]
        return Subspace(F, n, rref(F, inter, n))

    __and__ = intersect

    def complement_in(self, ambient: "Subspace") -> "Subspace":
        """Canonical complement of self inside ambient (self ≤ ambient assumed)."""
        rem = [self.reduce(r) for r in ambient.basis]
        return Subspace(self.field, self.n, rref(self.field, rem, self.n))

    def render(self) -> list[list[str]]:
        return [[self.field.render(x) for x in row] for row in self.basis]

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(r) for r in self.render())
        return f"Subspace({self.field}^{self.n}: [{rows}])"


def unit(F: FieldSpec, n: int, i: int) -> Vector:
    return tuple(F.one if k == i else F.zero for k in range(n))


def span(F: FieldSpec, n: int, vectors: Iterable[Sequence[Raw]]) -> Subspace:
    return Subspace.span(F, n, vectors)


# -- quotients -------------------------------------------------------------


@dataclass(frozen=True)
class QuotientMap:
    """Linear projection ambient -> ambient/A with an adapted section.

    The quotient basis is the canonical complement of A in ambient, so for
    ambient = F^n it is exactly the unit vectors at A's non-pivot columns.
    """

    ambient: Subspace
    kernel: Subspace
    complement: Subspace

    @property
    def dim(self) -> int:
        return self.complement.dim

    def project(self, v: Sequence[Raw]) -> Vector:
        if not self.ambient.contains(v):
            raise ValueError("vector outside the ambient space")
        r = self.kernel.reduce(v)
        return self.complement.coordinates(r)

    def section(self, coords: Sequence[Raw]) -> Vector:
        if len(coords) != self.dim:
            raise AmbientMismatch("quotient coordinates of wrong length")
        return self.complement.combine(coords)

    def image(self, U: Subspace) -> Subspace:
        """π(U) as a subspace of F^{dim quotient}."""
        return Subspace.span(self.field, self.dim, [self.project(u) for u in U.basis])

    def preimage(self, W: Subspace) -> Subspace:
        """π^{-1}(W) as a subspace of the original ambient."""
        return self.kernel.sum(Subspace.span(self.field, self.ambient.n, [self.section(w) for w in W.basis]))

    @property
    def field(self) -> FieldSpec:
        return self.ambient.field


def quotient(ambient: Subspace, A: Subspace) -> QuotientMap:
    if not A.leq(ambient):
        raise ValueError("quotient by a subspace not contained in the ambient space")
    return QuotientMap(ambient, A, A.complement_in(ambient))


# -- enumeration -----------------------------------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(F: FieldSpec, n: int, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of F^n once, lexicographic by pivot
    pattern and then by free entries."""
    if not F.is_finite:
        raise FieldError("subspace enumeration needs a finite field")
    if not 0 <= k <= n:
        raise ValueError(f"no {k}-dimensional subspaces of a {n}-dimensional space")
    elems = tuple(F.elements())
    for pivots in itertools.combinations(range(n), k):
        pset = set(pivots)
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pset]
        for values in itertools.product(elems, repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield Subspace(F, n, tuple(tuple(r) for r in rows), pivots)


def all_subspaces(F: FieldSpec, n: int) -> Iterator[Subspace]:
    for k in range(n + 1):
        yield from enumerate_subspaces(F, n, k)


def nonzero_vectors(F: FieldSpec, n: int) -> Iterator[Vector]:
    for v in itertools.product(tuple(F.elements()), repeat=n):
        if any(v):
            yield v


def line_representatives(F: FieldSpec, n: int) -> Iterator[Vector]:
    """One normalised (leading 1) vector per line of F^n, in enumeration order."""
    for S in enumerate_subspaces(F, n, 1):
        yield S.basis[0]
