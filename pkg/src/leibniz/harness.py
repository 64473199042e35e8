"""Executable statement suites over corpora, with text and JSON reports."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .algebra import LeibnizAlgebra
from .catalog import CatalogEntry, catalog, example_5_6, get
from .cideals import (
    OneDimCase,
    all_one_dim_c_ideals,
    classify_one_dim,
    has_subideal_complement,
    is_c_ideal,
    is_weak_c_ideal,
    known_ideals_q,
    make_certificate,
    one_dim_c_ideals_criterion,
    one_dim_c_ideals_direct,
    one_dim_c_ideals_lines,
    one_dim_subalgebra_lines,
    quotient_by,
    verify_weak_c,
    weak_c_unreduced,
)
from .corpus import Corpus, enumerate_corpus
from .field import GF, QQ, FieldSpec
from .ideals import (
    cartan_compose,
    cartan_subalgebras,
    core,
    frattini,
    frattini_of_subalgebra,
    ideals,
    is_subideal,
    maximal_nilpotent_subalgebras,
    maximal_subalgebras,
    subalgebras,
    subideals,
)
from .structure import (
    TurnerCase,
    is_cyclic,
    is_supersolvable,
    is_weakly_c_simple,
    lemma_5_7_profile,
    lie_turner_form,
    simple_verdict,
    symmetric_classification_check,
    turner_form,
)
from .subspace import Subspace, enumerate_subspaces, unit
from .verdict import Undecided


class ApplicabilityError(ValueError):
    pass


# -- reports ------------------------------------------------------------------


def dump_algebra(L: LeibnizAlgebra) -> dict:
    F = L.field
    return {
        "name": L.name,
        "field": str(F),
        "basis": list(L.labels),
        "products": [[i, j, k, F.render(c)] for i, j, k, c in L.sparse_products()],
    }


def _jsonable(x):
    if isinstance(x, Subspace):
        return x.render()
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "value") and hasattr(x, "name") and not isinstance(x, (int, str)):
        return x.value  # enums
    if isinstance(x, (int, str, bool, float)) or x is None:
        return x
    return str(x)


@dataclass
class Tally:
    """Per-algebra outcome of one suite."""

    scanned: int = 0
    hypothesis: int = 0
    undecided: int = 0
    violations: list = dc_field(default_factory=list)
    findings: list = dc_field(default_factory=list)
    observed: dict = dc_field(default_factory=dict)

    def observe(self, key: str, value):
        """Record a computed value worth showing in the report."""
        self.observed[key] = _jsonable(value)

    def violate(self, what: str, **witness):
        self.violations.append({"what": what, "witness": _jsonable(witness)})

    def find(self, what: str, **witness):
        self.findings.append({"what": what, "witness": _jsonable(witness)})


@dataclass
class TheoremReport:
    suite: str
    corpus: str
    mode: str
    scanned: int = 0
    algebras: int = 0
    hypothesis: int = 0
    undecided: int = 0
    violations: list = dc_field(default_factory=list)
    findings: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)
    observed: list = dc_field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.mode != "assert" or not self.violations

    def comparable(self) -> dict:
        return {
            "suite": self.suite,
            "corpus": self.corpus,
            "mode": self.mode,
            "algebras": self.algebras,
            "scanned": self.scanned,
            "hypothesis": self.hypothesis,
            "undecided": self.undecided,
            "violations": self.violations,
            "findings": self.findings,
            "notes": self.notes,
            "observed": self.observed,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps({"report": self.comparable(), "timing": {"wall_time": round(self.wall_time, 3)}},
                          indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self, *, timing: bool = False) -> str:
        head = f"{self.suite} [{self.mode}] on {self.corpus}: "
        head += "PASS" if self.passed else "FAIL"
        lines = [head, f"  algebras {self.algebras}, instances {self.scanned}, hypothesis held {self.hypothesis}, "
                       f"violations {len(self.violations)}, findings {len(self.findings)}, undecided {self.undecided}"]
        lines += [f"  note: {n}" for n in self.notes]
        for ob in self.observed:
            lines += [f"  observed: {ob['algebra']}: {k} = {v}" for k, v in sorted(ob["values"].items())]
        for tag, items in (("violation", self.violations), ("finding", self.findings)):
            for v in items[:5]:
                lines.append(f"  {tag}: {v['algebra']['name']}: {v['what']}")
            if len(items) > 5:
                lines.append(f"  ... {len(items) - 5} more {tag}s")
        if timing:
            lines.append(f"  wall time {self.wall_time:.2f}s")
        return "\n".join(lines)


# -- suite registry ---------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    id: str
    applicability: str  # any-field | char-0-only | forward-only-any-field
    check: Callable[[LeibnizAlgebra, CatalogEntry | None, Tally], None]
    justification: str
    statement: str
    finite_only: bool = True  # needs exhaustive enumeration over GF(p)
    explore: bool = False  # always explore mode, whatever the field
    auto_downgrade: bool = False

    def mode_for(self, F: FieldSpec) -> str:
        if self.explore:
            return "explore"
        if self.applicability == "char-0-only":
            return "assert" if F.characteristic() == 0 else "explore"
        return "assert"


SUITES: dict[str, Suite] = {}


def suite(id, applicability, justification, statement, **kw):
    def deco(fn):
        SUITES[id] = Suite(id, applicability, fn, justification, statement, **kw)
        return fn

    return deco


def weak(L, B):
    return is_weak_c_ideal(L, B).is_true


def _units(L: LeibnizAlgebra, idx) -> Subspace:
    return L.span([unit(L.field, L.dim, i) for i in idx])


def _q_candidate_subalgebras(L: LeibnizAlgebra) -> list[Subspace]:
    out = []
    for k in range(L.dim + 1):
        for idx in combinations(range(L.dim), k):
            S = _units(L, idx)
            if L.is_subalgebra(S) and S not in out:
                out.append(S)
    for S in known_ideals_q(L):
        if S not in out:
            out.append(S)
    return out


def _q_maximal_candidates(L: LeibnizAlgebra) -> list[Subspace]:
    # a proper subalgebra of codimension one is automatically maximal
    return [S for S in _q_candidate_subalgebras(L) if S.dim == L.dim - 1]


# ---- Lemma 2.5 ----


@suite("Lem2.5.1", "any-field", "a c-ideal certificate is already a weak c-ideal certificate (ideals are subideals)",
       "c-ideal implies weak c-ideal", finite_only=False)
def _lem251(L, entry, t: Tally):
    cands = subalgebras(L) if L.field.is_finite else _q_candidate_subalgebras(L)
    for B in cands:
        t.scanned += 1
        c = is_c_ideal(L, B)
        if c.is_unknown:
            t.undecided += 1
            continue
        if not c.is_true:
            continue
        t.hypothesis += 1
        if not verify_weak_c(L, c.witness):
            t.violate("c-ideal certificate fails as weak c-ideal certificate", B=B)
        if L.field.is_finite and not weak(L, B):
            t.violate("c-ideal judged not a weak c-ideal", B=B)


@suite("Lem2.5.2", "forward-only-any-field",
       "the argument only uses cores and subideal chains; asserted on finite corpora under the L^2 != I convention",
       "weakly c-simple iff simple")
def _lem252(L, entry, t: Tally):
    t.scanned += 1
    s = simple_verdict(L, "standard")
    w = is_weakly_c_simple(L, "standard")
    if s.is_unknown or w.is_unknown:
        t.undecided += 1
        return
    if s.is_true or w.is_true:
        t.hypothesis += 1
    if s.is_true != w.is_true:
        t.violate("weakly c-simple and simple disagree", simple=s.is_true, weakly_c_simple=w.is_true)


@suite("Lem2.5.2-conventions", "any-field",
       "records where other readings of simplicity break the equivalence",
       "weakly c-simple iff simple, nondegenerate and literal readings", explore=True)
def _lem252_conv(L, entry, t: Tally):
    t.scanned += 1
    for conv in ("nondegenerate", "literal"):
        s = simple_verdict(L, conv)
        w = is_weakly_c_simple(L, conv)
        if s.is_unknown or w.is_unknown:
            t.undecided += 1
        elif s.is_true != w.is_true:
            t.find(f"{conv} convention: simple={s.is_true}, weakly c-simple={w.is_true}")


@suite("Lem2.5.3", "any-field", "intersecting the subideal chain with K gives a chain in K (no characteristic used)",
       "weak c-ideals are inherited by intermediate subalgebras")
def _lem253(L, entry, t: Tally):
    subs = subalgebras(L)
    for K in subs:
        inside = [B for B in subs if B.leq(K)]
        if not inside:
            continue
        sub, emb = L.restrict(K)
        for B in inside:
            t.scanned += 1
            if not weak(L, B):
                continue
            t.hypothesis += 1
            if not weak(sub, emb.pullback(B)):
                t.violate("weak c-ideal of L but not of K", B=B, K=K)


@suite("Lem2.5.4", "any-field", "subideal chains and cores correspond through L -> L/A",
       "B weak c-ideal of L iff B/A weak c-ideal of L/A")
def _lem254(L, entry, t: Tally):
    subs = subalgebras(L)
    for A in ideals(L):
        Q, q = quotient_by(L, A)
        for B in subs:
            if not A.leq(B):
                continue
            t.scanned += 1
            t.hypothesis += 1
            a, b = weak(L, B), weak(Q, q.image(B))
            if a != b:
                t.violate("correspondence fails", A=A, B=B, in_L=a, in_quotient=b)


# ---- Frattini, complements ----


@suite("Prop2.8", "any-field", "lattice argument with F(C) plus the Frattini-ideal lemma; no characteristic used",
       "B <= F(C) weak c-ideal implies B ideal and B <= phi(L)")
def _prop28(L, entry, t: Tally):
    phi = frattini(L, fast_path=False)[1]
    subs = subalgebras(L)
    for C in subs:
        FC = frattini_of_subalgebra(L, C)
        for B in subs:
            if not B.leq(FC):
                continue
            t.scanned += 1
            if not weak(L, B):
                continue
            t.hypothesis += 1
            if not L.is_ideal(B):
                t.violate("B is not an ideal", B=B, C=C)
            elif not B.leq(phi):
                t.violate("B is not inside phi(L)", B=B, C=C, phi=phi)


@suite("Lem2.10", "any-field", "pure lattice bookkeeping modulo the core",
       "weak c-ideal iff B/B_L has a subideal complement in L/B_L")
def _lem210(L, entry, t: Tally):
    for B in subalgebras(L):
        t.scanned += 1
        t.hypothesis += 1
        BL = core(L, B)
        Q, q = quotient_by(L, BL)
        Bq = q.image(B)
        w = weak_c_unreduced(L, B)
        s = has_subideal_complement(Q, Bq)
        if w.is_true != s.is_true:
            t.violate("definition and quotient characterisation disagree", B=B, weak=w.is_true, complement=s.is_true)
            continue
        if w.is_true:
            Cq = q.image(w.witness.C.sum(BL))
            ok = (Q.is_subalgebra(Cq) and is_subideal(Q, Cq)[0] and Cq.intersect(Bq).is_zero()
                  and Cq.sum(Bq) == Q.full())
            if not ok:
                t.violate("(C + B_L)/B_L is not a subideal complement", B=B, C=w.witness.C)
            K = q.preimage(s.witness)
            if not verify_weak_c(L, make_certificate(L, B, K)):
                t.violate("lifted complement is not a weak c-ideal certificate", B=B, K=K)


# ---- solvability ----


@suite("Thm3.1-fwd", "forward-only-any-field",
       "the derived-series step B^(k) gives an ideal complement; no characteristic used",
       "B solvable ideal: maximal subalgebras not containing B are weak c-ideals")
def _thm31_fwd(L, entry, t: Tally):
    maxes = maximal_subalgebras(L)
    for B in ideals(L):
        if not L.is_solvable(B):
            continue
        series = L.derived_series(B)
        for M in maxes:
            if B.leq(M):
                continue
            t.scanned += 1
            t.hypothesis += 1
            if not weak(L, M):
                t.violate("maximal subalgebra is not a weak c-ideal", B=B, M=M)
                continue
            k = max(i for i, S in enumerate(series) if not S.leq(M))
            K = series[k]
            if not (L.is_ideal(K) and M.sum(K) == L.full() and M.intersect(K).leq(core(L, M))):
                t.find("the derived-series term does not certify M as a c-ideal", B=B, M=M, K=K)


def _solvable(L, S=None):
    return L.is_solvable(S)


@suite("Thm3.1-conv", "char-0-only", "the converse passes through Lie quotients and characteristic-zero Lie theory",
       "all maximal subalgebras not containing B weak c-ideals implies B solvable", finite_only=False)
def _thm31_conv(L, entry, t: Tally):
    if L.field.is_finite:
        maxes = maximal_subalgebras(L)
        for B in ideals(L):
            t.scanned += 1
            if all(weak(L, M) for M in maxes if not B.leq(M)):
                t.hypothesis += 1
                if not L.is_solvable(B):
                    t.violate("B is not solvable", B=B)
        return
    maxes = _q_maximal_candidates(L)
    for B in known_ideals_q(L):
        t.scanned += 1
        _q_converse(L, t, [M for M in maxes if not B.leq(M)], L.is_solvable(B), B=B)


def _q_converse(L, t: Tally, objects, conclusion: bool, **ctx):
    """Over Q: the hypothesis 'every object is a weak c-ideal' is refuted by a
    single decided False; otherwise the instance stays undecided."""
    if conclusion:
        return
    verdicts = [is_weak_c_ideal(L, M) for M in objects]
    if any(v.is_false for v in verdicts):
        return
    if verdicts and all(v.is_true for v in verdicts):
        t.hypothesis += 1
        t.violate("hypothesis holds on the candidates but the conclusion fails", **ctx)
    else:
        t.undecided += 1


@suite("Cor3.2-conv", "char-0-only", "special case B = L of the converse",
       "every maximal subalgebra weak c-ideal implies L solvable", finite_only=False)
def _cor32(L, entry, t: Tally):
    t.scanned += 1
    if L.field.is_finite:
        if all(weak(L, M) for M in maximal_subalgebras(L)):
            t.hypothesis += 1
            if not L.is_solvable():
                t.violate("L is not solvable")
        return
    _q_converse(L, t, _q_maximal_candidates(L), L.is_solvable())


@suite("Thm3.4", "char-0-only", "minimal counterexample argument through Levi factors",
       "a solvable maximal subalgebra that is a weak c-ideal exists iff L is solvable", finite_only=False)
def _thm34(L, entry, t: Tally):
    t.scanned += 1
    if L.field.is_finite:
        good = [M for M in maximal_subalgebras(L) if L.is_solvable(M) and weak(L, M)]
        if good:
            t.hypothesis += 1
        if bool(good) != (L.is_solvable() and L.dim > 0):
            t.violate("existence of a solvable weak c-ideal maximal subalgebra does not match solvability",
                      witness=good[:1])
        return
    cands = [M for M in _q_maximal_candidates(L) if L.is_solvable(M)]
    verdicts = [(M, is_weak_c_ideal(L, M)) for M in cands]
    if L.is_solvable():
        if L.dim and not any(v.is_true for _, v in verdicts):
            t.undecided += 1
        return
    for M, v in verdicts:
        if v.is_true:
            t.hypothesis += 1
            t.violate("non-solvable L has a solvable maximal weak c-ideal", M=M)
        elif v.is_unknown:
            t.undecided += 1


def _q_cartans(L, entry):
    hints = []
    if entry is not None:
        hints = [v for vecs in entry.cartan for v in vecs]
    found, _ = cartan_subalgebras(L, hints)
    return found


@suite("Thm3.5", "char-0-only", "needs a semisimple Levi factor",
       "all maximal nilpotent subalgebras weak c-ideals implies L solvable", finite_only=False)
def _thm35(L, entry, t: Tally):
    t.scanned += 1
    if L.field.is_finite:
        if all(weak(L, N) for N in maximal_nilpotent_subalgebras(L)):
            t.hypothesis += 1
            if not L.is_solvable():
                t.violate("L is not solvable")
        return
    # Cartan subalgebras are maximal nilpotent
    _q_converse(L, t, _q_cartans(L, entry), L.is_solvable())


@suite("Thm3.8", "char-0-only", "uses Cartan subalgebras of a Levi factor; existence needs characteristic zero",
       "every Cartan subalgebra a weak c-ideal implies L solvable", finite_only=False)
def _thm38(L, entry, t: Tally):
    t.scanned += 1
    if L.field.is_finite:
        cartans, _ = cartan_subalgebras(L)
        if cartans and all(weak(L, H) for H in cartans):
            t.hypothesis += 1
            if not L.is_solvable():
                t.violate("L is not solvable", cartans=cartans)
        return
    _q_converse(L, t, _q_cartans(L, entry), L.is_solvable())


@suite("Lem3.3", "forward-only-any-field",
       "the cited argument works with derived series only; downgraded to explore if a counterexample appears",
       "L = U + C, U solvable, C subideal implies L^(n) <= C for some n", auto_downgrade=True)
def _lem33(L, entry, t: Tally):
    bottom = L.derived_series()[-1]
    solv = [U for U in subalgebras(L) if L.is_solvable(U)]
    full = L.full()
    for C in subideals(L):
        for U in solv:
            if U.sum(C) != full:
                continue
            t.scanned += 1
            t.hypothesis += 1
            if not bottom.leq(C):
                t.violate("the derived series never enters C", U=U, C=C)


def _cartan_in(L, S: Subspace):
    """A Cartan subalgebra of the subalgebra S (as a subspace of L), or None."""
    if S.is_zero():
        return S
    sub, emb = L.restrict(S)
    if sub.is_nilpotent():
        return S
    found, _ = cartan_subalgebras(sub)
    return emb.image(found[0]) if found else None


@suite("Lem3.7", "char-0-only", "Levi factors and Cartan subalgebras of S need characteristic zero",
       "H Cartan in S and B Cartan in C_R(H) give H + B Cartan in L", finite_only=False)
def _lem37(L, entry, t: Tally):
    if entry is None or entry.levi is None or L.field.is_finite:
        return
    t.scanned += 1
    levi = entry.levi
    H = _cartan_in(L, levi.S)
    B = _cartan_in(L, L.centralizer(levi.R, H)) if H is not None else None
    if H is None or B is None:
        t.undecided += 1
        return
    t.hypothesis += 1
    _, v = cartan_compose(L, levi, H, B)
    if not v.is_true:
        t.violate(f"composition fails: {v.note}", H=H, B=B)


# ---- supersolvability ----


@suite("Lem4.1", "any-field", "cited lemma stated over any field",
       "U/A maximal nilpotent in L/A gives U = C + A with C maximal nilpotent")
def _lem41(L, entry, t: Tally):
    mn = maximal_nilpotent_subalgebras(L)
    for A in ideals(L):
        Q, q = quotient_by(L, A)
        for Uq in maximal_nilpotent_subalgebras(Q):
            U = q.preimage(Uq)
            t.scanned += 1
            t.hypothesis += 1
            if not any(C.sum(A) == U for C in mn):
                t.violate("no maximal nilpotent C with U = C + A", A=A, U=U)


def _thm42_hypothesis(L) -> bool:
    for N in maximal_nilpotent_subalgebras(L):
        sub, emb = L.restrict(N)
        for Bs in maximal_subalgebras(sub):
            if not weak(L, emb.image(Bs)):
                return False
    return True


@suite("Thm4.2", "any-field", "stated over any field; the induction only quotients by 1-dim ideals inside I",
       "solvable symmetric L with the maximal-nilpotent hypothesis is supersolvable")
def _thm42(L, entry, t: Tally):
    t.scanned += 1
    if not (L.is_solvable() and L.is_symmetric()):
        return
    if not _thm42_hypothesis(L):
        return
    t.hypothesis += 1
    if not is_supersolvable(L).is_true:
        t.violate("L is not supersolvable")


def _q_refute_42(L, entry) -> bool | None:
    """True if some Cartan (hence maximal nilpotent) subalgebra has a
    coordinate hyperplane subalgebra that is decided not to be a weak c-ideal."""
    for N in _q_cartans(L, entry):
        sub, emb = L.restrict(N)
        for idx in combinations(range(sub.dim), sub.dim - 1):
            Bs = _units(sub, idx)
            if sub.is_subalgebra(Bs) and is_weak_c_ideal(L, emb.image(Bs)).is_false:
                return True
    return None


@suite("Cor4.3", "char-0-only", "removes solvability through Levi factors",
       "symmetric, maximal nilpotents of dim >= 2 and the hypothesis imply supersolvable", finite_only=False)
def _cor43(L, entry, t: Tally):
    if not L.is_symmetric():
        return
    t.scanned += 1
    if L.field.is_finite:
        mn = maximal_nilpotent_subalgebras(L)
        if all(N.dim >= 2 for N in mn) and _thm42_hypothesis(L):
            t.hypothesis += 1
            if not is_supersolvable(L).is_true:
                t.violate("L is not supersolvable")
        return
    if is_supersolvable(L).is_true:
        return
    if any(N.dim < 2 for N in _q_cartans(L, entry)) or _q_refute_42(L, entry):
        return
    t.undecided += 1


@suite("Cor4.4", "char-0-only", "removes solvability through Levi factors and the Lie case",
       "symmetric with the hypothesis implies supersolvable or three-dimensional simple", finite_only=False)
def _cor44(L, entry, t: Tally):
    if not L.is_symmetric():
        return
    t.scanned += 1
    if L.field.is_finite:
        if _thm42_hypothesis(L):
            t.hypothesis += 1
            if not (is_supersolvable(L).is_true or (L.dim == 3 and simple_verdict(L).is_true)):
                t.violate("neither supersolvable nor three-dimensional simple")
        return
    if is_supersolvable(L).is_true or (L.dim == 3 and simple_verdict(L).is_true):
        return
    if _q_refute_42(L, entry):
        return
    t.undecided += 1


# ---- one-dimensional subalgebras ----


def _condition_iii(L, x) -> bool:
    Fx = L.span([x])
    if L.is_ideal(Fx):
        return True
    if L.derived().contains(x):
        return False
    return any(L.is_ideal(B) and not B.contains(x) for B in enumerate_subspaces(L.field, L.dim, L.dim - 1))


@suite("Prop5.1", "any-field", "codimension-one subideals are ideals; no characteristic used",
       "for lines: weak c-ideal iff c-ideal iff ideal-or-complemented")
def _prop51(L, entry, t: Tally):
    for x in one_dim_subalgebra_lines(L):
        Fx = L.span([x])
        t.scanned += 1
        t.hypothesis += 1
        w, c, iii = weak(L, Fx), is_c_ideal(L, Fx).is_true, _condition_iii(L, x)
        if not (w == c == iii):
            t.violate("the three conditions disagree", x=[x], weak=w, c=c, iii=iii)
        kind = classify_one_dim(L, x).kind
        expect = (OneDimCase.IDEAL if L.is_ideal(Fx) else
                  OneDimCase.COMPLEMENTED if iii else OneDimCase.NOT_C_IDEAL)
        if kind is not expect:
            t.violate("trichotomy misclassified", x=[x], got=kind, expected=expect)


@suite("Cor5.3", "any-field", "follows from the line trichotomy over any field",
       "all lines c-ideals iff L^2 ∩ J <= Asoc(L)")
def _cor53(L, entry, t: Tally):
    t.scanned += 1
    d, c = one_dim_c_ideals_direct(L), one_dim_c_ideals_criterion(L)
    if d.is_true:
        t.hypothesis += 1
    if d.is_true != c.is_true:
        t.violate("direct enumeration and the L^2 ∩ J criterion disagree", direct=d.is_true, criterion=c.is_true)


@suite("Cor5.3-lines", "any-field", "the necessary half of the criterion plus the exact ideal-lines test",
       "all lines c-ideals implies L^2 ∩ J <= Asoc(L); all lines c-ideals iff every v in L^2 ∩ J spans an ideal")
def _cor53_lines(L, entry, t: Tally):
    t.scanned += 1
    d = one_dim_c_ideals_direct(L)
    c, ln = one_dim_c_ideals_criterion(L), one_dim_c_ideals_lines(L)
    if d.is_true:
        t.hypothesis += 1
        if not c.is_true:
            t.violate("all lines are c-ideals but L^2 ∩ J ⊄ Asoc(L)", witness=[c.witness])
    if d.is_true != ln.is_true:
        t.violate("direct enumeration and the ideal-lines test disagree", direct=d.is_true, lines=ln.is_true)
    if c.is_true and not d.is_true:
        t.find("L^2 ∩ J <= Asoc(L) yet some line is not a c-ideal", line=[d.witness])


@suite("Prop5.5", "any-field", "elementwise computation in Fx + Fx^2",
       "cyclic L has all lines c-ideals iff dim L <= 2")
def _prop55(L, entry, t: Tally):
    t.scanned += 1
    cyc = is_cyclic(L)
    if not cyc.is_true:
        return
    t.hypothesis += 1
    if one_dim_c_ideals_direct(L).is_true != (L.dim <= 2):
        t.violate("cyclic algebra contradicts the dimension bound", generator=[cyc.witness])


@suite("Lem5.7", "any-field", "linear algebra on minimal abelian ideals; no characteristic used",
       "structure of Asoc when all lines are c-ideals")
def _lem57(L, entry, t: Tally):
    t.scanned += 1
    if not one_dim_c_ideals_direct(L).is_true:
        return
    t.hypothesis += 1
    prof = lemma_5_7_profile(L)
    for v in prof.violations:
        t.violate(v, D=prof.D, functional=prof.functional)


@suite("Thm5.8", "any-field", "stated over any field for symmetric algebras",
       "symmetric L: all lines c-ideals iff L^3 = 0 or abelian ⊕ almost abelian Lie")
def _thm58(L, entry, t: Tally):
    if not L.is_symmetric():
        return
    t.scanned += 1
    hyp = one_dim_c_ideals_direct(L).is_true
    form = lie_turner_form(L)
    if hyp:
        t.hypothesis += 1
        form = symmetric_classification_check(L)
    if hyp != (form.case is not TurnerCase.NEITHER):
        t.violate("classification mismatch", all_lines_c=hyp, form=str(form))


@suite("Thm5.4", "any-field", "the claimed general classification; expected to fail",
       "all lines c-ideals iff L^3 = 0 or abelian ⊕ almost abelian", explore=True)
def _thm54(L, entry, t: Tally):
    t.scanned += 1
    hyp = one_dim_c_ideals_direct(L).is_true
    form = turner_form(L)
    if hyp:
        t.hypothesis += 1
    if hyp != (form.case is not TurnerCase.NEITHER):
        t.find("counterexample to the claimed classification", all_lines_c=hyp, form=str(form))


_QQ_PAIRS = [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(-3)), (Fraction(-1, 3), Fraction(5, 7)),
             (Fraction(4), Fraction(1, 2))]


@suite("RefuteThm5.4", "any-field", "explicit counterexample with exact certificates",
       "the counterexample algebra has all lines c-ideals and neither Turner shape", finite_only=False)
def _refute(L, entry, t: Tally):
    F = L.field
    if F.characteristic() == 2 or L != example_5_6(F):
        return
    t.scanned += 1
    t.hypothesis += 1
    if F.is_finite:
        d, c = one_dim_c_ideals_direct(L), one_dim_c_ideals_criterion(L)
        if not (d.is_true and c.is_true):
            t.violate("some line is not a c-ideal", direct=d.is_true, criterion=c.is_true)
        form = turner_form(L)
        t.observe("all_one_dim_c_ideals.direct", d.outcome.value)
        t.observe("all_one_dim_c_ideals.criterion", c.outcome.value)
        t.observe("turner_form", str(form))
        if form.case is not TurnerCase.NEITHER:
            t.violate("a Turner shape was found", form=str(form))
        return
    AB = L.span([(1, 0, 0), (0, 1, 0)])
    if not L.is_ideal(L.span([(0, 1, 0)])):
        t.violate("Fb is not an ideal")
    if not L.is_ideal(AB):
        t.violate("span{a,b} is not an ideal")
    lines = [(0, 0, 1)] + [(al, be, -al * al / be) for al, be in _QQ_PAIRS]
    for v in lines:
        B = L.span([v])
        if not L.is_subalgebra(B):
            t.violate("certificate line is not a subalgebra", v=[L.vector(v)])
            continue
        if not verify_weak_c(L, make_certificate(L, B, AB)):
            t.violate("certificate fails", v=[L.vector(v)])
    for al, be in _QQ_PAIRS:
        v = L.vector((al, be, al * al / be))
        if not L.is_subalgebra(L.span([v])):
            t.find("with the +alpha^2/beta sign the line is not a subalgebra", v=[v])
    if not all_one_dim_c_ideals(L).is_true:
        t.violate("some line of L^2 ∩ J is not an ideal over Q")
    if L.power(3).is_zero():
        t.violate("L^3 = 0")
    t.observe("certified_lines", len(lines))
    t.observe("all_one_dim_c_ideals", all_one_dim_c_ideals(L).outcome.value)
    t.observe("dim L^3", L.power(3).dim)


# statements and the suites that cover them; definitions are library predicates
STATEMENTS: dict[str, tuple[str, ...]] = {
    "Def2.1": ("definition",), "Def2.2": ("definition",), "Def2.3": ("definition",), "Def2.4": ("definition",),
    "Lem2.5": ("Lem2.5.1", "Lem2.5.2", "Lem2.5.3", "Lem2.5.4"),
    "Prop2.8": ("Prop2.8",), "Def2.9": ("definition",), "Lem2.10": ("Lem2.10",),
    "Thm3.1": ("Thm3.1-fwd", "Thm3.1-conv"), "Cor3.2": ("Cor3.2-conv", "Thm3.1-fwd"), "Lem3.3": ("Lem3.3",),
    "Thm3.4": ("Thm3.4",), "Thm3.5": ("Thm3.5",), "Def3.6": ("definition",), "Lem3.7": ("Lem3.7",),
    "Thm3.8": ("Thm3.8",),
    "Lem4.1": ("Lem4.1",), "Thm4.2": ("Thm4.2",), "Cor4.3": ("Cor4.3",), "Cor4.4": ("Cor4.4",),
    "Prop5.1": ("Prop5.1",), "Def5.2": ("definition",), "Cor5.3": ("Cor5.3", "Cor5.3-lines"), "Thm5.4": ("Thm5.4", "RefuteThm5.4"),
    "Prop5.5": ("Prop5.5",), "Ex5.6": ("RefuteThm5.4",), "Lem5.7": ("Lem5.7",), "Thm5.8": ("Thm5.8",),
}


# -- running ------------------------------------------------------------------------


def _check_one(suite_id: str, L: LeibnizAlgebra, entry: CatalogEntry | None) -> Tally:
    t = Tally()
    s = SUITES[suite_id]
    try:
        s.check(L, entry, t)
    except Undecided as exc:
        t.undecided += 1
        t.findings.append({"what": f"undecided: {exc}", "witness": {}})
    return t


def _worker(args):
    suite_id, kind, p, table, labels, name, entry_name = args
    F = QQ if kind == "Q" else GF(p)
    if entry_name is not None:
        entry = get(entry_name, F)
        return _check_one(suite_id, entry.algebra, entry)
    L = LeibnizAlgebra(F, table, labels, verify=False, name=name)
    return _check_one(suite_id, L, None)


def run_suite(suite_id: str, corpus: Corpus, *, jobs: int = 1) -> TheoremReport:
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}")
    s = SUITES[suite_id]
    F = corpus.field
    if s.finite_only and not F.is_finite:
        raise ApplicabilityError(f"{suite_id} needs exhaustive enumeration and cannot run over {F}")
    start = time.perf_counter()
    entries = corpus.params.get("entries") or [None] * len(corpus.algebras)
    if jobs > 1:
        args = [(suite_id, F.kind, F.p, L.table, L.labels, L.name, e.name if e else None)
                for L, e in zip(corpus.algebras, entries)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            tallies = list(ex.map(_worker, args, chunksize=max(1, len(args) // (4 * jobs))))
    else:
        tallies = [_check_one(suite_id, L, e) for L, e in zip(corpus.algebras, entries)]
    rep = TheoremReport(suite_id, corpus.descriptor, s.mode_for(F), algebras=len(tallies))
    for L, tl in zip(corpus.algebras, tallies):  # corpus order is the deterministic order
        rep.scanned += tl.scanned
        rep.hypothesis += tl.hypothesis
        rep.undecided += tl.undecided
        for v in tl.violations:
            rep.violations.append({"algebra": dump_algebra(L), **v})
        for v in tl.findings:
            rep.findings.append({"algebra": dump_algebra(L), **v})
        if tl.observed:
            rep.observed.append({"algebra": L.name, "values": tl.observed})
    if rep.mode == "explore" and rep.violations:
        rep.findings = rep.violations + rep.findings
        rep.violations = []
    if s.auto_downgrade and rep.violations:
        rep.notes.append("counterexample found: suite downgraded to explore; flagged for review")
        rep.mode = "explore"
        rep.findings = rep.violations + rep.findings
        rep.violations = []
    rep.wall_time = time.perf_counter() - start
    return rep


# -- standard corpora ------------------------------------------------------------------


def catalog_corpus(F: FieldSpec = QQ, names: list[str] | None = None, max_dim: int | None = None) -> Corpus:
    entries = [e for e in catalog(F) if (names is None or e.name in names)
               and (max_dim is None or e.algebra.dim <= max_dim)]
    return Corpus(F, max((e.algebra.dim for e in entries), default=0), "catalog",
                  [e.algebra for e in entries], {"entries": entries})


def standard_corpora(spec: str = "small", *, jobs: int = 1) -> list[Corpus]:
    """'small': dim <= 2 over GF(2), GF(3), GF(5) and dim 3 over GF(2)."""
    out = []
    if spec in ("small", "all"):
        for p in (2, 3, 5):
            for n in (1, 2):
                out.append(enumerate_corpus(n, GF(p), jobs=jobs))
        out.append(enumerate_corpus(3, GF(2), jobs=jobs))
    if spec in ("catalog", "all"):
        out.append(catalog_corpus(QQ))
        # exhaustive suites over GF(p)^n: keep the subspace lattices small
        for p, cap in ((2, 4), (3, 4), (5, 3), (7, 3)):
            out.append(catalog_corpus(GF(p), max_dim=cap))
    return out


def corpus_from_spec(spec: str, *, jobs: int = 1, seed: int = 0) -> list[Corpus]:
    """Parse 'small', 'catalog', 'all', 'exhaustive:DIM:P', 'catalog:Q', 'catalog:P',
    'example:P' or 'random:DIM:P:COUNT'."""
    parts = spec.split(":")
    head = parts[0]
    if head in ("small", "all") and len(parts) == 1:
        return standard_corpora(head, jobs=jobs)
    if head == "catalog":
        if len(parts) == 1:
            return standard_corpora("catalog")
        F = _field(parts[1])
        return [catalog_corpus(F, max_dim=None if not F.is_finite else (4 if F.p <= 3 else 3))]
    if head == "exhaustive" and len(parts) == 3:
        return [enumerate_corpus(int(parts[1]), GF(int(parts[2])), jobs=jobs)]
    if head == "example" and len(parts) == 2:
        F = _field(parts[1])
        return [catalog_corpus(F, ["example-5.6"])]
    if head == "random" and len(parts) == 4:
        from .corpus import random_extension_corpus

        return [random_extension_corpus(seed, int(parts[1]), GF(int(parts[2])), int(parts[3]))]
    raise ValueError(f"bad corpus spec {spec!r}")


def _field(tok: str) -> FieldSpec:
    return QQ if tok in ("Q", "QQ") else GF(int(tok))


def applicable(suite_id: str, corpus: Corpus) -> bool:
    return corpus.field.is_finite or not SUITES[suite_id].finite_only
