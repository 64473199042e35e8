"""Global structural predicates and the classification shapes for
algebras whose one-dimensional subalgebras are all c-ideals."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field, asdict
from typing import Any

from .algebra import LeibnizAlgebra
from .cideals import all_one_dim_c_ideals, is_weak_c_ideal, quotient_by
from .ideals import (
    asoc_result,
    ideals,
    minimal_ideals,
    one_dim_ideal_families,
    subalgebra_closure,
    subalgebras,
)
from .linalg_q import mat_mul
from .subspace import Subspace, enumerate_subspaces, left_kernel, nonzero_vectors, rref, unit
from .verdict import Outcome, Undecided, Verdict


# -- supersolvability ------------------------------------------------------


def _one_dim_ideals(L: LeibnizAlgebra):
    """One-dimensional ideals in the fixed order (line enumeration / eigen-families)."""
    if L.field.is_finite:
        for S in enumerate_subspaces(L.field, L.dim, 1):
            if L.is_ideal(S):
                yield S
    else:
        for W in one_dim_ideal_families(L):
            yield Subspace(L.field, L.dim, (W.basis[0],))


def is_supersolvable(L: LeibnizAlgebra) -> Verdict:
    """Complete flag of ideals, found by peeling off a 1-dim ideal and recursing on L/A.

    The witness is the flag 0 ⊂ A_1 ⊂ ... ⊂ L.  Over Q the rational joint
    eigenvector search is exact, so the answer is never Unknown.
    """
    key = "supersolvable"
    if key in L._cache:
        return L._cache[key]
    if L.dim == 0:
        res = Verdict.true([L.zero()], method="recursion")
    else:
        res = Verdict.false("no one-dimensional ideal", method="recursion")
        for A in _one_dim_ideals(L):
            Q, q = quotient_by(L, A)
            sub = is_supersolvable(Q)
            if sub.is_true:
                flag = [L.zero()] + [q.preimage(S) for S in sub.witness]
                res = Verdict.true(flag, method="recursion")
                break
            # supersolvability passes to quotients, so one failed quotient settles it
            res = Verdict.false(f"L/A is not supersolvable for A = {A!r}", method="recursion")
            break
    L._cache[key] = res
    return res


def supersolvable_bruteforce(L: LeibnizAlgebra) -> bool:
    """Search all chains of ideals with one ideal in every dimension."""
    by_dim: dict[int, list[Subspace]] = {}
    for I in ideals(L):
        by_dim.setdefault(I.dim, []).append(I)

    def extend(X: Subspace) -> bool:
        if X.dim == L.dim:
            return True
        return any(X < Y and extend(Y) for Y in by_dim.get(X.dim + 1, []))

    return extend(L.zero())


# -- simplicity ---------------------------------------------------------------


CONVENTIONS = ("standard", "nondegenerate", "literal")


def _degeneracy_ok(L: LeibnizAlgebra, convention: str) -> bool:
    if convention == "standard":
        return L.derived() != L.leibniz_kernel()
    if convention == "nondegenerate":
        return not L.derived().is_zero() and L.dim > 1
    if convention == "literal":
        return True
    raise ValueError(f"unknown simplicity convention {convention!r}")


def killing_form(L: LeibnizAlgebra) -> list[list]:
    F, n = L.field, L.dim
    R = [L.right_operator(unit(F, n, i)) for i in range(n)]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            P = mat_mul(F, R[i], R[j])
            row.append(F.reduce(sum(P[k][k] for k in range(n))))
        out.append(row)
    return out


def centroid_dim(L: LeibnizAlgebra) -> int:
    """dim of {T : T[x,y] = [Tx,y] = [x,Ty]}."""
    F, n = L.field, L.dim
    rows = []
    for k in range(n):
        for l in range(n):
            # variable t_kl: T(e_k) has coefficient t_kl on e_l
            row = []
            for i in range(n):
                for j in range(n):
                    cij = L.table[i][j]
                    Te = [cij[k] if m == l else F.zero for m in range(n)]
                    left1 = L.table[l][j] if i == k else (F.zero,) * n
                    left2 = L.table[i][l] if j == k else (F.zero,) * n
                    row.extend(F.sub(a, b) for a, b in zip(Te, left1))
                    row.extend(F.sub(a, b) for a, b in zip(Te, left2))
            rows.append(tuple(row))
    return len(left_kernel(F, rows, len(rows[0]))) if rows else 0


def _rank(F, M) -> int:
    return len(rref(F, M, len(M[0]))) if M and M[0] else 0


def _simple_lie_q(L: LeibnizAlgebra) -> bool | None:
    """Over Q: True for a simple Lie algebra, False when provably not simple Lie,
    None when undecided."""
    if L.field.is_finite:
        raise ValueError("Q-only test")
    if not L.leibniz_kernel().is_zero() or L.dim == 0:
        return False
    if L.derived().is_zero():
        return False
    K = killing_form(L)
    if _rank(L.field, K) < L.dim:
        return False  # char 0: simple Lie algebras are semisimple
    if centroid_dim(L) == 1:
        return True
    return None


def simple_verdict(L: LeibnizAlgebra, convention: str = "standard") -> Verdict:
    """Only ideals 0, I, L (plus the degeneracy exclusion of ``convention``)."""
    key = ("simple", convention)
    if key in L._cache:
        return L._cache[key]
    I = L.leibniz_kernel()
    allowed = {L.zero(), I, L.full()}
    if not _degeneracy_ok(L, convention):
        v = Verdict.false(f"excluded by the {convention} convention", method="convention")
    elif L.field.is_finite:
        extra = [J for J in ideals(L) if J not in allowed]
        v = Verdict.of(not extra, extra[:1], method="exhaustive",
                       note="" if not extra else "found an ideal other than 0, I, L")
    else:
        from .cideals import known_ideals_q

        extra = [J for J in known_ideals_q(L) if J not in allowed]
        if extra:
            v = Verdict.false("found an ideal other than 0, I, L", method="certificate", witness=extra[0])
        elif I.is_zero():
            s = _simple_lie_q(L)
            v = Verdict.unknown("semisimple with centroid of dimension > 1") if s is None else Verdict.of(s, method="killing+centroid")
        else:
            v = Verdict.unknown("simplicity of a non-Lie Leibniz algebra over Q")
    L._cache[key] = v
    return v


def is_simple(L: LeibnizAlgebra, convention: str = "standard") -> bool:
    return simple_verdict(L, convention).decided()


def is_weakly_c_simple(L: LeibnizAlgebra, convention: str = "literal") -> Verdict:
    """No weak c-ideals besides L, 0 and I; exhaustive over GF(p).

    ``convention`` adds the same degeneracy exclusion that ``simple_verdict``
    uses, so both sides of the comparison read the definition alike.
    """
    if not _degeneracy_ok(L, convention):
        return Verdict.false(f"excluded by the {convention} convention", method="convention")
    I = L.leibniz_kernel()
    allowed = {L.zero(), I, L.full()}
    if L.field.is_finite:
        for B in subalgebras(L):
            if B in allowed:
                continue
            if is_weak_c_ideal(L, B, method="exhaustive").is_true:
                return Verdict.false(f"{B!r} is a weak c-ideal", method="exhaustive", witness=B)
        return Verdict.true(None, method="exhaustive")
    if I.is_zero() and _simple_lie_q(L) is True:
        return Verdict.true(None, method="simple-shortcut")
    return Verdict.unknown("weak c-simplicity over Q needs the simple-Lie shortcut")


# -- cyclic ---------------------------------------------------------------------


def is_cyclic(L: LeibnizAlgebra, height: int = 2) -> Verdict:
    """Is L generated by one element?  Exhaustive over GF(p); over Q small
    integer vectors are tried (True or Unknown)."""
    full = L.full()
    if L.dim == 0:
        return Verdict.true(L.zero_vector(), method="trivial")
    if L.field.is_finite:
        for v in nonzero_vectors(L.field, L.dim):
            if subalgebra_closure(L, L.span([v])) == full:
                return Verdict.true(v, method="exhaustive")
        return Verdict.false("no element generates L", method="exhaustive")
    for i in range(L.dim):
        e = unit(L.field, L.dim, i)
        if subalgebra_closure(L, L.span([e])) == full:
            return Verdict.true(e, method="sampling")
    rng = range(-height, height + 1)
    for v in itertools.product(rng, repeat=L.dim):
        if any(v) and subalgebra_closure(L, L.span([v])) == full:
            return Verdict.true(L.vector(v), method="sampling")
    if L.dim > 1 and L.derived().dim < L.dim - 1:
        # a generator x gives L = Fx + L^2
        return Verdict.false("codim of L^2 exceeds one", method="structural")
    return Verdict.unknown("no generator among sampled vectors")


# -- almost abelian -----------------------------------------------------------


class AAKind(enum.Enum):
    LIE = "LieType"
    NON_LIE = "NonLieType"
    NONE = "None"


def almost_abelian_kind(L: LeibnizAlgebra) -> AAKind:
    """Decide L = Fx ∔ D with D abelian, [d,x] = d and [x,d] = -d (Lie) or
    [x,d] = 0 (non-Lie), all other products zero; D ≠ 0.

    Both patterns force D = L^2, so the test is linear: D must be an abelian
    hyperplane, any x0 off D acts on D from the right by a nonzero scalar mu,
    and x0 may be shifted inside D to kill x^2.
    """
    F, n = L.field, L.dim
    D = L.derived()
    if n < 2 or D.dim != n - 1 or not L.is_abelian(D):
        return AAKind.NONE
    x0 = D.complement_in(L.full()).basis[0]
    right = [L.bracket(d, x0) for d in D.basis]
    left = [L.bracket(x0, d) for d in D.basis]
    mu = right[0][D.pivots[0]]
    if mu == 0 or any(r != tuple(F.mul(mu, c) for c in d) for r, d in zip(right, D.basis)):
        return AAKind.NONE
    sq = L.square(x0)
    if all(l == tuple(F.neg(F.mul(mu, c)) for c in d) for l, d in zip(left, D.basis)):
        # [x0 + d', x0 + d'] = x0^2 + [x0,d'] + [d',x0] = x0^2
        return AAKind.LIE if not any(sq) else AAKind.NONE
    if all(not any(l) for l in left):
        return AAKind.NON_LIE  # x = x0 - x0^2/mu squares to zero
    return AAKind.NONE


def almost_abelian_bruteforce(L: LeibnizAlgebra) -> AAKind:
    """Enumerate hyperplanes D and vectors x (finite fields)."""
    F, n = L.field, L.dim
    if n < 2:
        return AAKind.NONE
    for D in enumerate_subspaces(F, n, n - 1):
        if not L.is_abelian(D):
            continue
        for x in nonzero_vectors(F, n):
            if D.contains(x) or any(L.square(x)):
                continue
            if not all(L.bracket(d, x) == d for d in D.basis):
                continue
            if all(L.bracket(x, d) == tuple(F.neg(c) for c in d) for d in D.basis):
                return AAKind.LIE
            if all(not any(L.bracket(x, d)) for d in D.basis):
                return AAKind.NON_LIE
    return AAKind.NONE


# -- Turner's shape ---------------------------------------------------------------


class TurnerCase(enum.Enum):
    CASE_I = "Case_i"
    CASE_II = "Case_ii"
    NEITHER = "Neither"


@dataclass(frozen=True)
class TurnerForm:
    case: TurnerCase
    A: Subspace | None = None
    B: Subspace | None = None
    kind: AAKind | None = None  # almost-abelian flavour of B in Case_ii

    def __str__(self) -> str:
        if self.case is TurnerCase.CASE_II:
            return f"Case_ii(A={self.A!r}, B={self.B!r}, {self.kind.value})"
        return self.case.value


def _direct_sum_decompositions(L: LeibnizAlgebra, *, require_lie: bool = False):
    full = L.full()
    ids = ideals(L)
    for A in ids:
        if not L.is_abelian(A):
            continue
        for B in ids:
            if A.sum(B) != full or not A.intersect(B).is_zero():
                continue
            if not (L.bracket_spaces(A, B).is_zero() and L.bracket_spaces(B, A).is_zero()):
                continue
            if B.dim < 2:
                continue
            kind = almost_abelian_kind(L.restrict(B)[0])
            if kind is AAKind.NONE or (require_lie and kind is not AAKind.LIE):
                continue
            yield A, B, kind


def turner_form(L: LeibnizAlgebra) -> TurnerForm:
    """Case_i if L^3 = 0; Case_ii if L = A ⊕ B (ideals, zero cross products)
    with A abelian and B almost abelian; otherwise Neither.

    The Case_ii search enumerates ideals, so over Q it raises Undecided.
    """
    if L.power(3).is_zero():
        return TurnerForm(TurnerCase.CASE_I)
    if not L.field.is_finite:
        raise Undecided("Case_ii search over Q")
    for A, B, kind in _direct_sum_decompositions(L):
        return TurnerForm(TurnerCase.CASE_II, A, B, kind)
    return TurnerForm(TurnerCase.NEITHER)


def symmetric_classification_check(L: LeibnizAlgebra) -> TurnerForm:
    """For symmetric L with every line a c-ideal: Case_i, or Case_ii with an
    almost abelian *Lie* ideal B.  Neither signals a falsified prediction."""
    if not L.is_symmetric():
        raise ValueError("precondition: L must be symmetric")
    if not all_one_dim_c_ideals(L).is_true:
        raise ValueError("precondition: every one-dimensional subalgebra must be a c-ideal")
    return lie_turner_form(L)


def lie_turner_form(L: LeibnizAlgebra) -> TurnerForm:
    if L.power(3).is_zero():
        return TurnerForm(TurnerCase.CASE_I)
    for A, B, kind in _direct_sum_decompositions(L, require_lie=True):
        return TurnerForm(TurnerCase.CASE_II, A, B, kind)
    return TurnerForm(TurnerCase.NEITHER)


# -- structure of algebras with all lines c-ideals ----------------------------------


@dataclass
class AsocProfile:
    minimal_abelian_dims: list[int]
    center: Subspace
    D: Subspace
    functional: tuple | None  # Λ(e_k), k = 0..n-1, when D ≠ 0
    violations: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def lemma_5_7_profile(L: LeibnizAlgebra) -> AsocProfile:
    """Split Asoc into centre and the eigen-part D and check the predicted shape:

    (i) minimal abelian ideals are lines; (ii) each such line is central or
    x -> [a, x] = Λ(x) a with one common nonzero functional Λ; (iii) if D ≠ 0
    then Ker Λ is an ideal containing Z ⊕ D, whose part centralising D
    supplements Z ⊕ D, and some x has Λ(x) = 1.
    """
    if not L.field.is_finite:
        raise Undecided("profile needs the full minimal-ideal list (finite field)")
    if not all_one_dim_c_ideals(L).is_true:
        raise ValueError("hypothesis false: some one-dimensional subalgebra is not a c-ideal")
    F, n = L.field, L.dim
    viol: list[str] = []
    mins = [M for M in minimal_ideals(L).ideals if L.is_abelian(M)]
    dims = [M.dim for M in mins]
    if any(d != 1 for d in dims):
        viol.append("(i) a minimal abelian ideal has dimension > 1")
    Z = L.center()
    functionals = []
    for M in mins:
        if M.dim != 1 or Z.leq(M) and M.leq(Z):
            continue
        a = M.basis[0]
        if M.leq(Z):
            continue
        piv = M.pivots[0]
        lam = tuple(L.bracket(a, unit(F, n, k))[piv] for k in range(n))
        functionals.append(lam)
    distinct = sorted(set(functionals))
    if any(not any(lam) for lam in distinct):
        viol.append("(ii) a non-central minimal abelian ideal has zero right functional")
    if len(distinct) > 1:
        viol.append("(ii) non-central minimal abelian ideals carry different functionals")
    asoc = asoc_result(L).space
    Lam = distinct[0] if len(distinct) == 1 and any(distinct[0]) else None
    if Lam is None:
        D = L.zero()
    else:
        # D = {a in Asoc : [a, e_k] = Λ_k a for all k}
        rows = []
        for b in asoc.basis:
            row = []
            for k in range(n):
                img = L.bracket(b, unit(F, n, k))
                row.extend(F.sub(c, F.mul(Lam[k], bb)) for c, bb in zip(img, b))
            rows.append(tuple(row))
        ker = left_kernel(F, rows, len(rows[0])) if rows else []
        D = Subspace(F, n, rref(F, [asoc.combine(t) for t in ker], n))
        if Z.sum(D) != asoc or not Z.intersect(D).is_zero():
            viol.append("(iii) Asoc != Z(L) ⊕ D")
        kerL = Subspace(F, n, rref(F, left_kernel(F, [(c,) for c in Lam], 1), n))
        if not L.is_ideal(kerL):
            viol.append("(iii) Ker Λ is not an ideal")
        if not Z.sum(D).leq(kerL):
            viol.append("(iii) Z ⊕ D ⊄ Ker Λ")
        CD = L.centralizer(kerL, D)
        if Z.sum(D).sum(CD) != kerL:
            viol.append("(iii) no complement C of Z ⊕ D in Ker Λ with [D,C] = [C,D] = 0")
    if D.is_zero() and Lam is not None:
        viol.append("(iii) nonzero functional but D = 0")
    return AsocProfile(dims, Z, D, Lam, viol)


# -- profile ------------------------------------------------------------------


@dataclass
class StructureProfile:
    lie: bool
    right: bool
    left: bool
    symmetric: str
    nilpotency_class: int | None
    derived_length: int | None
    supersolvable: str
    simple: str
    cyclic_generator: Any
    almost_abelian: str
    turner: str

    def to_dict(self) -> dict:
        return asdict(self)


def profile(L: LeibnizAlgebra) -> StructureProfile:
    F = L.field

    def outcome(v: Verdict) -> str:
        return v.outcome.value

    cyc = is_cyclic(L)
    try:
        turner = str(turner_form(L))
    except Undecided:
        turner = "Unknown"
    gen = None
    if cyc.is_true:
        gen = [F.render(c) for c in cyc.witness]
    return StructureProfile(
        lie=L.is_lie(),
        right=L.check_right_leibniz(),
        left=L.check_left_leibniz(),
        symmetric=outcome(L.check_symmetric()),
        nilpotency_class=L.nilpotency_class(),
        derived_length=L.derived_length(),
        supersolvable=outcome(is_supersolvable(L)),
        simple=outcome(simple_verdict(L)),
        cyclic_generator=gen if cyc.is_true else outcome(cyc),
        almost_abelian=almost_abelian_kind(L).value,
        turner=turner,
    )
