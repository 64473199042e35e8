"""Leibniz algebras given by structure constants.

Convention: *right* Leibniz, ``[x,[y,z]] = [[x,y],z] - [[x,z],y]``, i.e. every
right multiplication ``R_z : y -> [y,z]`` is a derivation.  Left algebras are
brought over with :meth:`LeibnizAlgebra.opposite`, never implicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import FieldSpec, Raw, Scalar
from .subspace import QuotientMap, Subspace, Vector, left_kernel, quotient, rref, unit
from .verdict import Verdict


class NotLeibnizError(ValueError):
    """The table violates the right Leibniz identity; ``triple`` names a failing basis triple."""

    def __init__(self, msg: str, triple: tuple[int, int, int] | None = None):
        super().__init__(msg)
        self.triple = triple


class StructureError(ValueError):
    """A subspace handed in does not have the required closure property."""


class LeibnizAlgebra:
    """Finite-dimensional algebra with ``[e_i, e_j] = sum_k table[i][j][k] e_k``.

    Instances are immutable; derived data is memoised in ``_cache`` (the
    higher layers use it for subalgebra lists, cores, verdicts, ...).
    """

    def __init__(
        self,
        field: FieldSpec,
        table: Sequence[Sequence[Sequence]],
        labels: Sequence[str] | None = None,
        *,
        verify: bool = True,
        name: str | None = None,
    ):
        n = len(table)
        self.field = field
        self.dim = n
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(n))
        if len(self.labels) != n:
            raise ValueError("one label per basis vector")
        rows = []
        for i in range(n):
            if len(table[i]) != n:
                raise ValueError("structure table must be n x n x n")
            row = []
            for j in range(n):
                if len(table[i][j]) != n:
                    raise ValueError("structure table must be n x n x n")
                row.append(tuple(field.coerce(c) for c in table[i][j]))
            rows.append(tuple(row))
        self.table: tuple[tuple[Vector, ...], ...] = tuple(rows)
        self._cache: dict = {}
        if verify:
            bad = self.right_leibniz_violation()
            if bad is not None:
                i, j, k = bad
                lab = self.labels
                raise NotLeibnizError(
                    f"right Leibniz identity fails on ({lab[i]}, {lab[j]}, {lab[k]})", bad
                )

    # -- construction helpers -------------------------------------------
    @classmethod
    def from_products(
        cls,
        field: FieldSpec,
        labels: Sequence[str],
        products: Iterable[tuple],
        **kw,
    ) -> "LeibnizAlgebra":
        """Build from sparse entries ``(i, j, k, c)`` meaning ``[e_i,e_j] += c e_k``.

        Indices may be ints or labels; ``c`` may be an int, Fraction or scalar string.
        """
        n = len(labels)
        idx = {lab: i for i, lab in enumerate(labels)}
        t = [[[field.zero] * n for _ in range(n)] for _ in range(n)]

        def pos(a):
            return a if isinstance(a, int) else idx[a]

        for i, j, k, c in products:
            c = field.parse(c) if isinstance(c, str) else field.coerce(c)
            i, j, k = pos(i), pos(j), pos(k)
            t[i][j][k] = field.add(t[i][j][k], c)
        return cls(field, t, labels, **kw)

    def sparse_products(self) -> list[tuple[int, int, int, Raw]]:
        n = self.dim
        return [
            (i, j, k, self.table[i][j][k])
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if self.table[i][j][k] != 0
        ]

    def opposite(self, *, verify: bool = True) -> "LeibnizAlgebra":
        """Table with ``[x,y]' = [y,x]``: turns a left Leibniz algebra into a right one."""
        n = self.dim
        t = [[self.table[j][i] for j in range(n)] for i in range(n)]
        return LeibnizAlgebra(self.field, t, self.labels, verify=verify)

    def __repr__(self) -> str:
        nm = f"{self.name}, " if self.name else ""
        return f"LeibnizAlgebra({nm}dim={self.dim}, field={self.field})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LeibnizAlgebra)
            and self.field == other.field
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.field, self.table))

    # -- vectors ---------------------------------------------------------
    def vector(self, coords: Sequence) -> Vector:
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        F = self.field
        return tuple(F.parse(c) if isinstance(c, str) else F.coerce(c) for c in coords)

    def basis_vector(self, i: int | str) -> Vector:
        if isinstance(i, str):
            i = self.labels.index(i)
        return unit(self.field, self.dim, i)

    def zero_vector(self) -> Vector:
        return (self.field.zero,) * self.dim

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, [self.vector(v) for v in vectors])

    # -- products --------------------------------------------------------
    def bracket(self, x: Sequence[Raw], y: Sequence[Raw]) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError("dimension mismatch in bracket")
        acc = [0] * n
        tab = self.table
        for i in range(n):
            xi = x[i]
            if xi == 0:
                continue
            row = tab[i]
            for j in range(n):
                yj = y[j]
                if yj == 0:
                    continue
                c = xi * yj
                for k, t in enumerate(row[j]):
                    if t:
                        acc[k] += c * t
        F = self.field
        if F.p:
            return tuple(a % F.p for a in acc)
        return tuple(F.coerce(a) for a in acc)

    def square(self, x: Sequence[Raw]) -> Vector:
        return self.bracket(x, x)

    def bracket_scalars(self, x, y) -> tuple[Scalar, ...]:
        return tuple(Scalar(self.field, c) for c in self.bracket(self.vector(x), self.vector(y)))

    def right_operator(self, y: Sequence[Raw]) -> list[Vector]:
        """Rows of R_y in the row-vector convention: row i is [e_i, y]."""
        return [self.bracket(unit(self.field, self.dim, i), y) for i in range(self.dim)]

    def left_operator(self, x: Sequence[Raw]) -> list[Vector]:
        """Rows of L_x: row i is [x, e_i]."""
        return [self.bracket(x, unit(self.field, self.dim, i)) for i in range(self.dim)]

    def _b(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def _bv(self, i: int, v: Vector) -> Vector:
        """[e_i, v]"""
        return self.bracket(unit(self.field, self.dim, i), v)

    def _vb(self, v: Vector, j: int) -> Vector:
        """[v, e_j]"""
        return self.bracket(v, unit(self.field, self.dim, j))

    # -- identities ------------------------------------------------------
    def right_leibniz_violation(self) -> tuple[int, int, int] | None:
        """First basis triple (x,y,z) violating [x,[y,z]] = [[x,y],z] - [[x,z],y]."""
        F, n = self.field, self.dim
        for i, j, k in itertools.product(range(n), repeat=3):
            lhs = self._bv(i, self._b(j, k))
            r1 = self._vb(self._b(i, j), k)
            r2 = self._vb(self._b(i, k), j)
            if any(F.add(F.sub(a, b), c) != 0 for a, b, c in zip(lhs, r1, r2)):
                return (i, j, k)
        return None

    def left_leibniz_violation(self) -> tuple[int, int, int] | None:
        """First basis triple violating [x,[y,z]] = [[x,y],z] + [y,[x,z]]."""
        F, n = self.field, self.dim
        for i, j, k in itertools.product(range(n), repeat=3):
            lhs = self._bv(i, self._b(j, k))
            r1 = self._vb(self._b(i, j), k)
            r2 = self._bv(j, self._b(i, k))
            if any(F.sub(F.sub(a, b), c) != 0 for a, b, c in zip(lhs, r1, r2)):
                return (i, j, k)
        return None

    def check_right_leibniz(self) -> bool:
        if "right" not in self._cache:
            self._cache["right"] = self.right_leibniz_violation() is None
        return self._cache["right"]

    def check_left_leibniz(self) -> bool:
        if "left" not in self._cache:
            self._cache["left"] = self.left_leibniz_violation() is None
        return self._cache["left"]

    def check_symmetric(self) -> Verdict:
        """Left and right Leibniz; in characteristic 2 also [[x,y],[x,y]] = 0 for all x, y."""
        if "symmetric" in self._cache:
            return self._cache["symmetric"]
        if not (self.check_right_leibniz() and self.check_left_leibniz()):
            v = Verdict.false("not both left and right Leibniz", method="identity")
        elif self.field.characteristic() != 2:
            v = Verdict.true(None, method="identity")
        elif not self.field.is_finite:  # pragma: no cover - no such supported field
            v = Verdict.unknown("quadratic condition in infinite characteristic-2 field")
        else:
            v = Verdict.true(None, method="exhaustive")
            elems = tuple(self.field.elements())
            vecs = list(itertools.product(elems, repeat=self.dim))
            for x in vecs:
                for y in vecs:
                    w = self.bracket(x, y)
                    if any(self.square(w)):
                        v = Verdict.false(f"[[x,y],[x,y]] != 0 for x={x}, y={y}", method="exhaustive")
                        break
                else:
                    continue
                break
        self._cache["symmetric"] = v
        return v

    def is_symmetric(self) -> bool:
        return self.check_symmetric().is_true

    def is_lie(self) -> bool:
        """x^2 = 0 for every x (checked on e_i^2 and e_i e_j + e_j e_i)."""
        return self.leibniz_kernel().is_zero()

    # -- subspace products ---------------------------------------------
    def bracket_spaces(self, A: Subspace, B: Subspace) -> Subspace:
        if A.is_zero() or B.is_zero():
            return self.zero()
        vecs = [self.bracket(a, b) for a in A.basis for b in B.basis]
        return Subspace(self.field, self.dim, rref(self.field, vecs, self.dim))

    def lower_central_series(self, A: Subspace | None = None) -> list[Subspace]:
        """A^1 = A, A^{k+1} = [A^k, A] until it stabilises (A defaults to L)."""
        A = self.full() if A is None else A
        series = [A]
        for _ in range(self.dim + 1):
            nxt = self.bracket_spaces(series[-1], A)
            if nxt == series[-1]:
                break
            series.append(nxt)
        return series

    def derived_series(self, A: Subspace | None = None) -> list[Subspace]:
        """A^(0) = A, A^(k+1) = [A^(k), A^(k)] until it stabilises."""
        A = self.full() if A is None else A
        series = [A]
        for _ in range(self.dim + 1):
            nxt = self.bracket_spaces(series[-1], series[-1])
            if nxt == series[-1]:
                break
            series.append(nxt)
        return series

    def is_nilpotent(self, A: Subspace | None = None) -> bool:
        return self.lower_central_series(A)[-1].is_zero()

    def is_solvable(self, A: Subspace | None = None) -> bool:
        return self.derived_series(A)[-1].is_zero()

    def nilpotency_class(self) -> int | None:
        s = self.lower_central_series()
        if not s[-1].is_zero():
            return None
        return len(s) - 1

    def derived_length(self) -> int | None:
        s = self.derived_series()
        if not s[-1].is_zero():
            return None
        return len(s) - 1

    def power(self, k: int) -> Subspace:
        """L^k of the lower central series (L^1 = L)."""
        X = self.full()
        for _ in range(k - 1):
            X = self.bracket_spaces(X, self.full())
        return X

    def derived(self) -> Subspace:
        """L^2 = [L, L]."""
        if "L2" not in self._cache:
            self._cache["L2"] = self.bracket_spaces(self.full(), self.full())
        return self._cache["L2"]

    # -- Leibniz kernel, J --------------------------------------------
    def leibniz_kernel(self) -> Subspace:
        """span{x^2}, computed from e_i^2 and e_i e_j + e_j e_i (polarisation)."""
        if "kernel" in self._cache:
            return self._cache["kernel"]
        F, n = self.field, self.dim
        vecs = [self._b(i, i) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                vecs.append(tuple(F.add(a, b) for a, b in zip(self._b(i, j), self._b(j, i))))
        I = Subspace(F, n, rref(F, vecs, n))
        if not self.bracket_spaces(self.full(), I).is_zero():
            raise NotLeibnizError("[L, I] != 0: table is not right Leibniz")
        self._cache["kernel"] = I
        return I

    def in_J(self, x: Sequence[Raw]) -> bool:
        return not any(self.square(x))

    # -- centralisers / normalisers -------------------------------------
    def stabilizer(self, B: Subspace, S: Subspace, target: Subspace) -> Subspace:
        """{b in B : [b,s] and [s,b] lie in target for every s in S}."""
        if B.is_zero():
            return B
        if S.is_zero():
            return B
        rows = []
        for b in B.basis:
            row: list = []
            for s in S.basis:
                row.extend(target.reduce(self.bracket(b, s)))
                row.extend(target.reduce(self.bracket(s, b)))
            rows.append(tuple(row))
        ker = left_kernel(self.field, rows, len(rows[0]))
        return Subspace(self.field, self.dim, rref(self.field, [B.combine(t) for t in ker], self.dim))

    def centralizer(self, B: Subspace, A: Subspace) -> Subspace:
        """C_B(A) = {b in B : [b,A] + [A,b] = 0}."""
        return self.stabilizer(B, A, self.zero())

    def normalizer(self, B: Subspace, A: Subspace) -> Subspace:
        """N_B(A) = {b in B : [b,A] + [A,b] ⊆ A}."""
        return self.stabilizer(B, A, A)

    def center(self) -> Subspace:
        if "center" not in self._cache:
            self._cache["center"] = self.centralizer(self.full(), self.full())
        return self._cache["center"]

    # -- closure tests ---------------------------------------------------
    def is_subalgebra(self, B: Subspace) -> bool:
        return self.bracket_spaces(B, B).leq(B)

    def is_ideal(self, B: Subspace, within: Subspace | None = None) -> bool:
        """[B,W] + [W,B] ⊆ B, where W = within (default L)."""
        W = self.full() if within is None else within
        for b in B.basis:
            for w in W.basis:
                if not B.contains(self.bracket(b, w)) or not B.contains(self.bracket(w, b)):
                    return False
        return True

    def is_abelian(self, A: Subspace | None = None) -> bool:
        A = self.full() if A is None else A
        return self.bracket_spaces(A, A).is_zero()

    # -- sub and quotient algebras -------------------------------------
    def restrict(self, H: Subspace) -> tuple["LeibnizAlgebra", "Embedding"]:
        """Structure constants of the subalgebra H in its echelon basis."""
        if not self.is_subalgebra(H):
            raise StructureError("restrict: subspace is not closed under the bracket")
        m = H.dim
        t = [[H.coordinates(self.bracket(H.basis[i], H.basis[j])) for j in range(m)] for i in range(m)]
        labels = [f"h{i + 1}" for i in range(m)]
        sub = LeibnizAlgebra(self.field, t, labels, verify=False)
        return sub, Embedding(self, sub, H)

    def quotient_algebra(self, A: Subspace) -> tuple["LeibnizAlgebra", QuotientMap]:
        """L/A in the adapted basis given by the unit vectors off A's pivots."""
        if not self.is_ideal(A):
            raise StructureError("quotient_algebra: subspace is not a two-sided ideal")
        q = quotient(self.full(), A)
        basis = q.complement.basis
        m = len(basis)
        t = [[q.project(self.bracket(basis[i], basis[j])) for j in range(m)] for i in range(m)]
        labels = [self.labels[pc] for pc in q.complement.pivots]
        return LeibnizAlgebra(self.field, t, labels, verify=False), q


@dataclass(frozen=True)
class Embedding:
    """Inclusion of a restricted algebra back into its parent."""

    parent: LeibnizAlgebra
    sub: LeibnizAlgebra
    space: Subspace

    def __call__(self, coords: Sequence[Raw]) -> Vector:
        return self.space.combine(coords)

    def image(self, U: Subspace) -> Subspace:
        """Subspace of the parent spanned by the images of U's basis."""
        return Subspace(self.parent.field, self.parent.dim,
                        rref(self.parent.field, [self(u) for u in U.basis], self.parent.dim))

    def pullback(self, U: Subspace) -> Subspace:
        """U (inside the image) written in the subalgebra's coordinates."""
        if not U.leq(self.space):
            raise ValueError("subspace is not inside the embedded subalgebra")
        return Subspace.span(self.sub.field, self.sub.dim, [self.space.coordinates(u) for u in U.basis])


@dataclass(frozen=True)
class SubalgebraHandle:
    parent: LeibnizAlgebra
    space: Subspace
    verified_closed: bool = False

    @classmethod
    def checked(cls, L: LeibnizAlgebra, space: Subspace) -> "SubalgebraHandle":
        if not L.is_subalgebra(space):
            raise StructureError("subspace is not a subalgebra")
        return cls(L, space, True)
