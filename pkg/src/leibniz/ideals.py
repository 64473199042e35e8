"""Ideals, cores, subideal chains, minimal ideals, Frattini and Cartan subalgebras.

All ideals are two-sided.  Over finite fields the subalgebra and ideal
lattices are enumerated outright (and memoised on the algebra); over Q only
the linear fixpoint computations and the rational-eigenvector search apply.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import reduce
from typing import Iterable, Sequence

from .algebra import LeibnizAlgebra, StructureError, SubalgebraHandle
from .field import FieldError
from .linalg_q import fitting_null_component, joint_eigenspaces
from .subspace import Subspace, all_subspaces, left_kernel, rref, unit
from .verdict import Undecided, Verdict


def _cached(L: LeibnizAlgebra, key, fn):
    c = L._cache
    if key not in c:
        c[key] = fn()
    return c[key]


def _require_finite(L: LeibnizAlgebra, what: str):
    if not L.field.is_finite:
        raise Undecided(f"{what} needs a finite field (got {L.field})")


# -- lattices (finite fields) ------------------------------------------------


def subspaces(L: LeibnizAlgebra) -> list[Subspace]:
    _require_finite(L, "subspace enumeration")
    return _cached(L, "subspaces", lambda: list(all_subspaces(L.field, L.dim)))


def subalgebras(L: LeibnizAlgebra) -> list[Subspace]:
    return _cached(L, "subalgebras", lambda: [S for S in subspaces(L) if L.is_subalgebra(S)])


def ideals(L: LeibnizAlgebra) -> list[Subspace]:
    return _cached(L, "ideals", lambda: [S for S in subalgebras(L) if L.is_ideal(S)])


@dataclass
class IdealSet:
    algebra: LeibnizAlgebra
    ideals: list[Subspace]
    complete: bool
    # over Q: subspaces every line of which is a (minimal) one-dimensional ideal
    families: list[Subspace] = dc_field(default_factory=list)


def is_ideal(L: LeibnizAlgebra, B: Subspace) -> bool:
    return L.is_ideal(B)


def is_subalgebra(L: LeibnizAlgebra, B: Subspace) -> bool:
    return L.is_subalgebra(B)


# -- core and ideal closure -----------------------------------------------


def core(L: LeibnizAlgebra, B: Subspace) -> Subspace:
    """Largest ideal of L inside B: X <- {v in X : [v,L] + [L,v] ⊆ X} to a fixpoint."""
    key = ("core", B)
    if key in L._cache:
        return L._cache[key]
    full = L.full()
    X = B
    while True:
        Y = L.stabilizer(X, full, X)
        if Y == X:
            break
        X = Y
    L._cache[key] = X
    return X


def ideal_closure(L: LeibnizAlgebra, S: Subspace, within: Subspace | None = None) -> Subspace:
    """Smallest ideal of W (default L) containing S: X <- X + [X,W] + [W,X]."""
    W = L.full() if within is None else within
    X = S
    while True:
        Y = X.sum(L.bracket_spaces(X, W)).sum(L.bracket_spaces(W, X))
        if Y == X:
            return X
        X = Y


def subalgebra_closure(L: LeibnizAlgebra, S: Subspace) -> Subspace:
    X = S
    while True:
        Y = X.sum(L.bracket_spaces(X, X))
        if Y == X:
            return X
        X = Y


# -- subideals ---------------------------------------------------------------


@dataclass(frozen=True)
class SubidealChain:
    """B = links[0] ⊂ links[1] ⊂ ... ⊂ links[-1] = L, each an ideal of the next."""

    links: tuple[Subspace, ...]

    def validate(self, L: LeibnizAlgebra) -> str | None:
        """None when valid, else the first violated clause."""
        if not self.links:
            return "empty chain"
        if self.links[-1] != L.full():
            return "chain does not end at L"
        for lo, hi in zip(self.links, self.links[1:]):
            if not lo < hi:
                return "chain is not strictly increasing"
        for S in self.links:
            if not L.is_subalgebra(S):
                return "a link is not a subalgebra"
        for lo, hi in zip(self.links, self.links[1:]):
            if not L.is_ideal(lo, within=hi):
                return "a link is not an ideal of the next"
        return None


def idealizer_series(L: LeibnizAlgebra, B: Subspace) -> list[Subspace]:
    """N_0 = B, N_{k+1} = N_L(N_k), up to stabilisation."""
    series = [B]
    full = L.full()
    while True:
        N = L.normalizer(full, series[-1])
        if N == series[-1]:
            return series
        series.append(N)


def closure_series(L: LeibnizAlgebra, B: Subspace) -> list[Subspace]:
    """C_0 = L, C_{k+1} = ideal closure of B in C_k, up to stabilisation."""
    series = [L.full()]
    while True:
        C = ideal_closure(L, B, within=series[-1])
        if C == series[-1]:
            return series
        series.append(C)


def is_subideal(L: LeibnizAlgebra, B: Subspace, method: str = "closure") -> tuple[bool, SubidealChain | None]:
    """Decide whether the subalgebra B is a subideal of L, returning a chain when it is.

    ``method="closure"`` (default) runs the descending series of ideal
    closures, which is exact: any witnessing chain B_i satisfies
    C_i ⊆ B_i termwise.  ``method="idealizer"`` runs the ascending series of
    normalisers; it only certifies, and can miss subideals whose normaliser
    is self-normalising (e.g. a weight line of the natural module in
    sl2 ⋉ F^2).
    """
    if not L.is_subalgebra(B):
        raise StructureError("is_subideal: B is not a subalgebra")
    if method == "closure":
        key = ("subideal", B)
        if key in L._cache:
            return L._cache[key]
        s = closure_series(L, B)
        res = (True, SubidealChain(tuple(reversed(s)))) if s[-1] == B else (False, None)
        L._cache[key] = res
        return res
    if method == "idealizer":
        s = idealizer_series(L, B)
        if s[-1] == L.full():
            return True, SubidealChain(tuple(s))
        return False, None
    raise ValueError(f"unknown subideal method {method!r}")


def subideal_bruteforce(L: LeibnizAlgebra, B: Subspace) -> bool:
    """Search every chain of subalgebras B ⊂ ... ⊂ L (finite fields only)."""
    subs = subalgebras(L)
    full = L.full()
    memo: dict[Subspace, bool] = {}

    def reach(X: Subspace) -> bool:
        if X == full:
            return True
        if X in memo:
            return memo[X]
        memo[X] = False
        ok = any(X < K and L.is_ideal(X, within=K) and reach(K) for K in subs)
        memo[X] = ok
        return ok

    return reach(B)


def subideals(L: LeibnizAlgebra) -> list[Subspace]:
    return _cached(L, "subideals", lambda: [S for S in subalgebras(L) if is_subideal(L, S)[0]])


# -- minimal ideals, Asoc -----------------------------------------------------


def one_dim_ideal_families(L: LeibnizAlgebra) -> list[Subspace]:
    """Subspaces W such that every line in W is an ideal (joint eigenspaces of all
    left and right multiplications by basis vectors)."""

    def compute():
        n, F = L.dim, L.field
        ops = []
        for i in range(n):
            e = unit(F, n, i)
            ops.append(L.right_operator(e))
            ops.append(L.left_operator(e))
        return [W for W, _ in joint_eigenspaces(F, ops, n)]

    return _cached(L, "line-ideal-families", compute)


def _abelian_lines(L: LeibnizAlgebra, W: Subspace) -> Subspace:
    """{w in W : w^2 = 0} for a family W of ideal lines.

    On W every [w, e_k] = mu_k w with mu independent of w, so
    w^2 = (sum_k w_k mu_k) w and the condition is linear.
    """
    F = L.field
    w0, piv = W.basis[0], W.pivots[0]
    mus = [L.bracket(w0, unit(F, L.dim, k))[piv] for k in range(L.dim)]
    rows = [(F.reduce(sum(a * m for a, m in zip(b, mus))),) for b in W.basis]
    ker = left_kernel(F, rows, 1)
    return Subspace(F, L.dim, rref(F, [W.combine(t) for t in ker], L.dim))


def minimal_ideals(L: LeibnizAlgebra) -> IdealSet:
    if L.field.is_finite:
        def compute():
            ids = [I for I in ideals(L) if not I.is_zero()]
            mins = [I for I in ids if not any(J < I for J in ids)]
            return IdealSet(L, mins, True)

        return _cached(L, "minimal-ideals", compute)
    fams = one_dim_ideal_families(L)
    return IdealSet(L, [], False, fams)


@dataclass(frozen=True)
class AsocResult:
    space: Subspace
    complete: bool  # False: over Q this is only the contribution of 1-dim minimal ideals


def asoc_result(L: LeibnizAlgebra) -> AsocResult:
    def compute():
        if L.field.is_finite:
            mins = minimal_ideals(L).ideals
            ab = [M for M in mins if L.is_abelian(M)]
            return AsocResult(reduce(Subspace.sum, ab, L.zero()), True)
        total = L.zero()
        for W in one_dim_ideal_families(L):
            total = total.sum(_abelian_lines(L, W))
        complete = False
        from .structure import is_supersolvable, _simple_lie_q  # cycle-free at call time

        if _simple_lie_q(L) is True:
            complete = True  # only minimal ideal is L itself, which is not abelian
        else:
            ss = is_supersolvable(L)
            complete = ss.is_true  # in a supersolvable algebra all minimal ideals are lines
        return AsocResult(total, complete)

    return _cached(L, "asoc", compute)


def asoc(L: LeibnizAlgebra) -> Subspace:
    """Sum of the minimal abelian ideals.  Over Q this raises unless completeness is certified."""
    r = asoc_result(L)
    if not r.complete:
        raise Undecided("Asoc over Q: higher-dimensional minimal abelian ideals not excluded")
    return r.space


# -- maximal subalgebras, Frattini ----------------------------------------------


def maximal_subalgebras(L: LeibnizAlgebra) -> list[Subspace]:
    _require_finite(L, "maximal subalgebra enumeration")

    def compute():
        full = L.full()
        proper = [S for S in subalgebras(L) if S != full]
        return [S for S in proper if not any(S < T for T in proper)]

    return _cached(L, "maximal-subalgebras", compute)


def frattini(L: LeibnizAlgebra, *, fast_path: bool = True) -> tuple[Subspace, Subspace]:
    """(F(L), phi(L)): intersection of the maximal subalgebras and its core.

    For nilpotent L, F(L) = L^2 on any field; otherwise a finite field is needed.
    """
    key = ("frattini", fast_path)
    if key in L._cache:
        return L._cache[key]
    if fast_path and L.is_nilpotent():
        Fr = L.derived()
    elif L.field.is_finite:
        maxes = maximal_subalgebras(L)
        Fr = reduce(Subspace.intersect, maxes, L.full()) if maxes else L.zero()
        if L.dim == 0:
            Fr = L.zero()
    else:
        raise Undecided("Frattini subalgebra over Q is only available for nilpotent algebras")
    res = (Fr, core(L, Fr))
    L._cache[key] = res
    return res


def frattini_of_subalgebra(L: LeibnizAlgebra, C: Subspace) -> Subspace:
    """F(C) for a subalgebra C, as a subspace of L."""
    sub, emb = L.restrict(C)
    Fr, _ = frattini(sub)
    return emb.image(Fr)


# -- nilpotent and Cartan subalgebras --------------------------------------------


def is_nilpotent_subalgebra(L: LeibnizAlgebra, C: Subspace) -> bool:
    return L.is_subalgebra(C) and L.is_nilpotent(C)


def nilpotent_subalgebras(L: LeibnizAlgebra) -> list[Subspace]:
    return _cached(L, "nilpotent-subalgebras", lambda: [S for S in subalgebras(L) if L.is_nilpotent(S)])


def maximal_nilpotent_subalgebras(L: LeibnizAlgebra) -> list[Subspace]:
    _require_finite(L, "maximal nilpotent subalgebra enumeration")

    def compute():
        nil = nilpotent_subalgebras(L)
        return [S for S in nil if not any(S < T for T in nil)]

    return _cached(L, "maximal-nilpotent", compute)


def is_cartan(L: LeibnizAlgebra, C: Subspace) -> bool:
    return is_nilpotent_subalgebra(L, C) and L.normalizer(L.full(), C) == C


def _candidate_elements(L: LeibnizAlgebra, hints: Iterable[Sequence] = ()) -> Iterable[tuple]:
    n, F = L.dim, L.field
    for h in hints:
        yield L.vector(h)
    for i in range(n):
        yield unit(F, n, i)
    for i, j in itertools.combinations(range(n), 2):
        yield tuple(F.one if k in (i, j) else F.zero for k in range(n))
    for coeffs in itertools.product((1, 2, -1), repeat=n):
        yield tuple(F.coerce(c) for c in coeffs)


def cartan_subalgebras(L: LeibnizAlgebra, hints: Iterable[Sequence] = ()) -> tuple[list[Subspace], Verdict]:
    """Cartan subalgebras: all of them over a finite field, verified candidates over Q.

    Over Q candidates are Fitting null components of R_x for hinted elements,
    basis vectors and small integer combinations; each is fully verified.
    """
    if L.field.is_finite:
        found = [C for C in nilpotent_subalgebras(L) if L.normalizer(L.full(), C) == C]
        return found, Verdict.true(found, method="exhaustive")
    found: list[Subspace] = []
    for x in _candidate_elements(L, hints):
        C = fitting_null_component(L.field, L.right_operator(x))
        if C not in found and is_cartan(L, C):
            found.append(C)
    if found:
        return found, Verdict.true(found, method="certificate")
    return found, Verdict.unknown("no candidate Fitting null component is a Cartan subalgebra")


@dataclass(frozen=True)
class LeviAnnotation:
    S: Subspace  # Levi factor
    R: Subspace  # solvable radical

    def verify(self, L: LeibnizAlgebra) -> str | None:
        if not self.S.intersect(self.R).is_zero() or self.S.sum(self.R) != L.full():
            return "L is not R ∔ S"
        if not L.is_subalgebra(self.S):
            return "[S,S] ⊄ S"
        if not L.is_ideal(self.R):
            return "[R,L] + [L,R] ⊄ R"
        if not L.is_solvable(self.R):
            return "R is not solvable"
        return None


def cartan_compose(L: LeibnizAlgebra, levi: LeviAnnotation | None, H: Subspace, B: Subspace) -> tuple[SubalgebraHandle, Verdict]:
    """H + B for H Cartan in S and B Cartan in C_R(H); the result is re-verified in L.

    A failed verification is reported in the verdict, not raised.
    """
    if levi is None:
        raise ValueError("cartan_compose needs a Levi annotation (S, R)")
    bad = levi.verify(L)
    if bad:
        raise ValueError(f"invalid Levi annotation: {bad}")
    notes = []
    if not H.leq(levi.S) or not (L.is_nilpotent(H) and L.is_subalgebra(H) and L.normalizer(levi.S, H) == H):
        notes.append("H is not a Cartan subalgebra of S")
    CRH = L.centralizer(levi.R, H)
    if not B.leq(CRH) or not (L.is_subalgebra(B) and L.is_nilpotent(B) and L.normalizer(CRH, B) == B):
        notes.append("B is not a Cartan subalgebra of C_R(H)")
    HB = H.sum(B)
    handle = SubalgebraHandle(L, HB, L.is_subalgebra(HB))
    if not is_cartan(L, HB):
        notes.append("H + B is not a Cartan subalgebra of L")
    if notes:
        return handle, Verdict.false("; ".join(notes), method="certificate")
    return handle, Verdict.true(HB, method="certificate")
