"""Named algebras and table builders."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .algebra import LeibnizAlgebra, NotLeibnizError
from .field import QQ, FieldError, FieldSpec
from .ideals import LeviAnnotation, is_cartan


# -- builders -----------------------------------------------------------------


def _blank(F: FieldSpec, n: int):
    return [[[F.zero] * n for _ in range(n)] for _ in range(n)]


def direct_sum(L1: LeibnizAlgebra, L2: LeibnizAlgebra, *, name: str | None = None) -> LeibnizAlgebra:
    """Componentwise products, zero across the summands."""
    if L1.field != L2.field:
        raise FieldError("direct sum of algebras over different fields")
    F, n1, n = L1.field, L1.dim, L1.dim + L2.dim
    t = _blank(F, n)
    for i in range(n1):
        for j in range(n1):
            t[i][j][:n1] = L1.table[i][j]
    for i in range(L2.dim):
        for j in range(L2.dim):
            t[n1 + i][n1 + j][n1:] = L2.table[i][j]
    labels = list(L1.labels)
    for lab in L2.labels:
        while lab in labels:
            lab += "'"
        labels.append(lab)
    return LeibnizAlgebra(F, t, labels, name=name)


def one_dim_extension(
    L: LeibnizAlgebra,
    right_action: Sequence[Sequence],
    left_action: Sequence[Sequence],
    square_image: Sequence,
    *,
    label: str = "t",
    name: str | None = None,
) -> LeibnizAlgebra:
    """Adjoin t with [e_i, t] = right_action[i], [t, e_i] = left_action[i] and
    [t, t] = square_image, all inside L.  Raises NotLeibnizError on failure."""
    F, n = L.field, L.dim
    if len(right_action) != n or len(left_action) != n or len(square_image) != n:
        raise ValueError("actions must be n x n and the square a vector of length n")
    t = _blank(F, n + 1)
    for i in range(n):
        for j in range(n):
            t[i][j][:n] = L.table[i][j]
        t[i][n][:n] = [F.coerce(c) for c in right_action[i]]
        t[n][i][:n] = [F.coerce(c) for c in left_action[i]]
    t[n][n][:n] = [F.coerce(c) for c in square_image]
    while label in L.labels:
        label += "'"
    return LeibnizAlgebra(F, t, list(L.labels) + [label], name=name)


# -- families -------------------------------------------------------------------


def abelian(n: int, F: FieldSpec = QQ) -> LeibnizAlgebra:
    return LeibnizAlgebra(F, _blank(F, n), [f"e{i + 1}" for i in range(n)], name=f"abelian({n})")


def cyclic(n: int, lam: Sequence = (), F: FieldSpec = QQ) -> LeibnizAlgebra:
    """Basis x, x^2, ..., x^n with x^(n+1) = sum_{k>=2} lam[k-2] x^k.

    Only right multiplication by x is nonzero; the square part spans the
    Leibniz kernel.  ``lam`` defaults to zero (nilpotent case).
    """
    if n < 1:
        raise ValueError("cyclic algebras have dimension >= 1")
    lam = list(lam) + [0] * (n - 1 - len(lam))
    if len(lam) != n - 1:
        raise ValueError("need n-1 coefficients")
    labels = ["x"] + [f"x{k}" for k in range(2, n + 1)]
    prods = [(k, 0, k + 1, 1) for k in range(n - 1)]
    prods += [(n - 1, 0, k - 1, lam[k - 2]) for k in range(2, n + 1) if F.coerce(lam[k - 2]) != 0]
    tag = ",".join(str(c) for c in lam)
    return LeibnizAlgebra.from_products(F, labels, prods, name=f"cyclic({n};{tag})")


def example_5_6(F: FieldSpec = QQ) -> LeibnizAlgebra:
    """a^2 = b, [a,x] = -[x,a] = a/2, [b,x] = b: all lines are c-ideals, yet
    the algebra has neither Turner shape."""
    if F.characteristic() == 2:
        raise FieldError("this algebra needs characteristic different from 2")
    half = F.inv(F.coerce(2))
    return LeibnizAlgebra.from_products(
        F,
        ["a", "b", "x"],
        [("a", "a", "b", 1), ("a", "x", "a", half), ("x", "a", "a", F.neg(half)), ("b", "x", "b", 1)],
        name="example-5.6",
    )


def almost_abelian_lie(n: int, F: FieldSpec = QQ) -> LeibnizAlgebra:
    """D = span{d1..d_(n-1)} abelian, [d,x] = d, [x,d] = -d."""
    if n < 2:
        raise ValueError("almost abelian algebras have dimension >= 2")
    labels = [f"d{i + 1}" for i in range(n - 1)] + ["x"]
    x = n - 1
    prods = [(i, x, i, 1) for i in range(x)] + [(x, i, i, -1) for i in range(x)]
    return LeibnizAlgebra.from_products(F, labels, prods, name=f"almost-abelian-lie({n})")


def almost_abelian_nonlie(n: int, F: FieldSpec = QQ) -> LeibnizAlgebra:
    """D abelian, [d,x] = d, every other product zero."""
    if n < 2:
        raise ValueError("almost abelian algebras have dimension >= 2")
    labels = [f"d{i + 1}" for i in range(n - 1)] + ["x"]
    x = n - 1
    prods = [(i, x, i, 1) for i in range(x)]
    return LeibnizAlgebra.from_products(F, labels, prods, name=f"almost-abelian-nonlie({n})")


def _lie(F: FieldSpec, labels, brackets, name):
    prods = []
    for i, j, k, c in brackets:
        prods.append((i, j, k, c))
        prods.append((j, i, k, F.neg(F.coerce(c))))
    return LeibnizAlgebra.from_products(F, labels, prods, name=name)


def heisenberg(F: FieldSpec = QQ) -> LeibnizAlgebra:
    return _lie(F, ["x", "y", "z"], [("x", "y", "z", 1)], "heisenberg")


def solvable_lie_2(F: FieldSpec = QQ) -> LeibnizAlgebra:
    return _lie(F, ["x", "y"], [("x", "y", "y", 1)], "solvable-lie-2")


_SL2 = [("e", "f", "h", 1), ("h", "e", "e", 2), ("h", "f", "f", -2)]


def sl2(F: FieldSpec = QQ) -> LeibnizAlgebra:
    return _lie(F, ["e", "f", "h"], _SL2, "sl2")


def sl2_plus_abelian(k: int = 1, F: FieldSpec = QQ) -> LeibnizAlgebra:
    return direct_sum(sl2(F), abelian(k, F), name=f"sl2+abelian({k})")


# action of e, f, h on the natural module (v1, v2): rows are images of v1, v2
_NATURAL = {"e": ((0, 0), (1, 0)), "f": ((0, 1), (0, 0)), "h": ((1, 0), (0, -1))}


def sl2_natural(F: FieldSpec = QQ, *, form: str = "lie") -> LeibnizAlgebra:
    """sl2 ⋉ V, V the natural module.

    ``form="lie"`` is the semidirect Lie algebra ([s,v] = s.v = -[v,s]);
    ``form="leibniz"`` keeps only [v,s] = -s.v, giving V as Leibniz kernel.
    """
    if form not in ("lie", "leibniz"):
        raise ValueError("form is 'lie' or 'leibniz'")
    labels = ["e", "f", "h", "v1", "v2"]
    prods = []
    for i, j, k, c in _SL2:
        prods += [(i, j, k, c), (j, i, k, F.neg(F.coerce(c)))]
    for s, rows in _NATURAL.items():
        for vi, row in zip(("v1", "v2"), rows):
            for vk, c in zip(("v1", "v2"), row):
                if c:
                    if form == "lie":
                        prods.append((s, vi, vk, c))
                    prods.append((vi, s, vk, -c))
    return LeibnizAlgebra.from_products(F, labels, prods, name=f"sl2-natural-{form}")


def turner_case_ii(F: FieldSpec = QQ) -> LeibnizAlgebra:
    return direct_sum(abelian(1, F), almost_abelian_lie(3, F), name="abelian(1)+almost-abelian-lie(3)")


# -- catalog ---------------------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    algebra: LeibnizAlgebra
    levi: LeviAnnotation | None = None
    cartan: list = dc_field(default_factory=list)  # lists of basis-coordinate vectors
    facts: dict = dc_field(default_factory=dict)  # expected profile fields

    def verify(self) -> None:
        """Re-check identity and every annotation that has a verifier."""
        L = self.algebra
        bad = L.right_leibniz_violation()
        if bad is not None:
            raise NotLeibnizError(f"{self.name}: right Leibniz identity fails", bad)
        if self.levi is not None:
            err = self.levi.verify(L)
            if err:
                raise ValueError(f"{self.name}: Levi annotation fails: {err}")
        for vecs in self.cartan:
            if not is_cartan(L, L.span(vecs)):
                raise ValueError(f"{self.name}: annotated Cartan subalgebra fails")
        for key, want in self.facts.items():
            got = _FACTS[key](L)
            if got != want:
                raise ValueError(f"{self.name}: expected {key} = {want!r}, got {got!r}")


_FACTS: dict[str, Callable[[LeibnizAlgebra], object]] = {
    "lie": lambda L: L.is_lie(),
    "nilpotency_class": lambda L: L.nilpotency_class(),
    "derived_length": lambda L: L.derived_length(),
    "kernel_dim": lambda L: L.leibniz_kernel().dim,
}


def _levi(L: LeibnizAlgebra, s_dim: int) -> LeviAnnotation:
    n = L.dim
    units = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    return LeviAnnotation(L.span(units[:s_dim]), L.span(units[s_dim:]))


def _entries(F: FieldSpec) -> list[CatalogEntry]:
    out = [CatalogEntry(f"abelian-{n}", abelian(n, F), facts={"nilpotency_class": 1 if n else 0}) for n in range(1, 5)]
    cyc = [(1, ()), (2, (0,)), (2, (1,)), (3, (0, 0)), (3, (1, 0)), (4, (0, 0, 0)), (5, (0, 0, 0, 0))]
    for n, lam in cyc:
        L = cyclic(n, lam, F)
        out.append(CatalogEntry(L.name, L))
    if F.characteristic() != 2:
        E = example_5_6(F)
        out.append(CatalogEntry("example-5.6", E, cartan=[[(0, 0, 1)]], facts={"kernel_dim": 1, "derived_length": 3}))
    for n in range(2, 5):
        out.append(CatalogEntry(f"almost-abelian-lie-{n}", almost_abelian_lie(n, F), facts={"lie": True}))
        out.append(CatalogEntry(f"almost-abelian-nonlie-{n}", almost_abelian_nonlie(n, F), facts={"lie": False}))
    out.append(CatalogEntry("heisenberg", heisenberg(F), facts={"nilpotency_class": 2}))
    out.append(CatalogEntry("solvable-lie-2", solvable_lie_2(F), facts={"derived_length": 2}))
    out.append(CatalogEntry("turner-case-ii", turner_case_ii(F)))
    if F.characteristic() == 0:
        # the Levi annotations and Cartan claims are characteristic-zero facts
        S = sl2(F)
        out.append(CatalogEntry("sl2", S, cartan=[[(0, 0, 1)]], facts={"lie": True}))
        SA = sl2_plus_abelian(1, F)
        out.append(CatalogEntry("sl2+abelian-1", SA, levi=_levi(SA, 3), cartan=[[(0, 0, 1, 0), (0, 0, 0, 1)]]))
        for form in ("lie", "leibniz"):
            N = sl2_natural(F, form=form)
            out.append(CatalogEntry(f"sl2-natural-{form}", N, levi=_levi(N, 3), cartan=[[(0, 0, 1, 0, 0)]],
                                    facts={"kernel_dim": 0 if form == "lie" else 2}))
    else:
        out.append(CatalogEntry("sl2", sl2(F)))
        out.append(CatalogEntry("sl2+abelian-1", sl2_plus_abelian(1, F)))
    return out


def catalog(F: FieldSpec = QQ, *, verify: bool = True) -> list[CatalogEntry]:
    entries = _entries(F)
    if verify:
        for e in entries:
            e.verify()
    return entries


def get(name: str, F: FieldSpec = QQ) -> CatalogEntry:
    for e in catalog(F, verify=False):
        if e.name == name:
            e.verify()
            return e
    raise KeyError(f"no catalog entry named {name!r} over {F}")


def names(F: FieldSpec = QQ) -> list[str]:
    return [e.name for e in _entries(F)]
