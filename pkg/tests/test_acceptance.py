"""Acceptance criteria 1-10.  Each criterion records one PASS/FAIL line;
conftest prints them in the terminal summary."""

import json
import time
from fractions import Fraction

import pytest

from leibniz import GF, QQ, FieldError
from leibniz.catalog import catalog, example_5_6, get, sl2
from leibniz.cideals import (
    all_one_dim_c_ideals, is_weak_c_ideal, make_certificate, one_dim_c_ideals_criterion,
    one_dim_c_ideals_direct, verify_weak_c,
)
from leibniz.corpus import random_extension_corpus
from leibniz.harness import catalog_corpus, run_suite
from leibniz.ideals import (
    cartan_compose, cartan_subalgebras, core, ideals, is_cartan, is_subideal, subalgebras,
    subideal_bruteforce,
)
from leibniz.structure import TurnerCase, is_supersolvable, is_weakly_c_simple, simple_verdict, turner_form

from conftest import exhaustive

SEED = 3
LINES: dict[int, str] = {}

# criterion 3 corpora: every dim <= 2 algebra over GF(2), GF(3), GF(5), and dim 3 over GF(2)
SMALL = [(1, 2), (2, 2), (1, 3), (2, 3), (1, 5), (2, 5), (3, 2)]


def record(n: int, ok: bool, detail: str, seconds: float | None = None, limit: float | None = None):
    timing = f" [{seconds:.2f}s" + (f" < {limit:g}s]" if limit else "]") if seconds is not None else ""
    LINES[n] = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}{timing}"


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def suite_reports(suite_ids, corpora=SMALL):
    return {f"{s} @ {exhaustive(n, p).descriptor}": run_suite(s, exhaustive(n, p)).comparable()
            for s in suite_ids for n, p in corpora}


def zero_violations(reports, ids=None):
    bad = {k: len(r["violations"]) for k, r in reports.items()
           if r["violations"] and (ids is None or k.split(" @ ")[0] in ids)}
    return not bad, bad


# -- the computations, each returning a comparable dict ------------------------------


def compute_2():
    out = {"a": 0, "b": 0, "c": 0, "pairs": {"a": 0, "b": 0, "c": 0}}
    for n in (1, 2, 3):
        for L in exhaustive(n, 2):
            for B in subalgebras(L):
                out["pairs"]["a"] += 1
                out["a"] += is_subideal(L, B, method="idealizer")[0] != subideal_bruteforce(L, B)
                out["pairs"]["b"] += 1
                reduced = is_weak_c_ideal(L, B).outcome
                out["b"] += reduced != is_weak_c_ideal(L, B, method="unreduced").outcome
    core_algebras = [L for n, p in ((1, 2), (2, 2), (3, 2), (1, 3), (2, 3)) for L in exhaustive(n, p)]
    core_algebras += list(random_extension_corpus(SEED, 3, GF(3), 25))
    for L in core_algebras:
        ids = ideals(L)
        for B in subalgebras(L):
            out["pairs"]["c"] += 1
            best = max((I for I in ids if I.leq(B)), key=lambda I: I.dim)
            out["c"] += core(L, B) != best
    return out


def compute_1():
    results = {}
    for F in (QQ, GF(2), GF(3), GF(5), GF(7)):
        results[str(F)] = all(e.algebra.check_right_leibniz() for e in catalog(F))
    for F in (QQ, GF(5), GF(7)):
        results[f"example-5.6/{F}"] = example_5_6(F).check_right_leibniz()
    try:
        example_5_6(GF(2))
        results["example-5.6/GF(2) rejected"] = False
    except FieldError:
        results["example-5.6/GF(2) rejected"] = True
    return results


def compute_3():
    return suite_reports(["Lem2.5.1", "Lem2.5.2", "Lem2.5.3", "Lem2.5.4"])


def compute_4():
    return suite_reports(["Prop2.8", "Lem2.10"])


def compute_5():
    return suite_reports(["Thm3.1-fwd", "Lem3.3"])


def compute_6():
    return suite_reports(["Thm4.2"], [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)])


def compute_7():
    return suite_reports(["Prop5.1", "Cor5.3", "Cor5.3-lines", "Prop5.5", "Lem5.7", "Thm5.8"])


# three sample lines per certificate family over Q
_PAIRS = [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(-3)), (Fraction(-1, 3), Fraction(5, 7))]


def compute_8():
    out = {}
    for F in (GF(5), GF(7)):
        L = example_5_6(F)
        form = turner_form(L)
        out[str(F)] = {
            "direct": one_dim_c_ideals_direct(L).outcome.value,
            "criterion": one_dim_c_ideals_criterion(L).outcome.value,
            "turner_form": form.case.value,
        }
    L = example_5_6(QQ)
    AB = L.span([(1, 0, 0), (0, 1, 0)])
    fam = {"Fb ideal": L.is_ideal(L.span([(0, 1, 0)])),
           "Fx": verify_weak_c(L, make_certificate(L, L.span([(0, 0, 1)]), AB))}
    for sign, name in ((-1, "minus"), (1, "plus")):
        ok = True
        for al, be in _PAIRS:
            B = L.span([(al, be, sign * al * al / be)])
            ok = ok and L.is_subalgebra(B) and verify_weak_c(L, make_certificate(L, B, AB))
        fam[f"F(aa+bb{'-' if sign < 0 else '+'}(a^2/b)x)"] = ok
    out["Q"] = fam
    out["refute"] = run_suite("RefuteThm5.4", catalog_corpus(QQ, ["example-5.6"])).comparable()
    return out


def compute_9():
    out = {}
    L = example_5_6(QQ)
    ss = is_supersolvable(L)
    cartans, complete = cartan_subalgebras(L)
    out["example"] = {
        "kernel": L.leibniz_kernel() == L.span([(0, 1, 0)]),
        "derived_length": L.derived_length(),
        "supersolvable": ss.outcome.value,
        "chain": ss.witness == [L.zero(), L.span([(0, 1, 0)]), L.span([(1, 0, 0), (0, 1, 0)]), L.full()],
        "cartan_x": L.span([(0, 0, 1)]) in cartans,
    }
    S = sl2(QQ)
    borel = S.span([S.basis_vector("e"), S.basis_vector("h")])
    S5 = sl2(GF(5))
    short = [is_weak_c_ideal(S5, B).outcome for B in subalgebras(S5)]
    full = [is_weak_c_ideal(S5, B, method="exhaustive").outcome for B in subalgebras(S5)]
    out["sl2"] = {
        "simple": simple_verdict(S).outcome.value,
        "weakly_c_simple": is_weakly_c_simple(S).outcome.value,
        "shortcut_eq_exhaustive_GF5": short == full and is_weakly_c_simple(S5).is_true,
        "borel_weak_c": is_weak_c_ideal(S, borel).outcome.value,
    }
    for name in ("sl2+abelian-1", "sl2-natural-lie"):
        e = get(name, QQ)
        A = e.algebra
        H = A.span([A.basis_vector("h")])
        handle, v = cartan_compose(A, e.levi, H, A.centralizer(e.levi.R, H))
        out[name] = v.outcome.value == "True" and is_cartan(A, handle.space)
    return out


COMPUTE = {1: compute_1, 2: compute_2, 3: compute_3, 4: compute_4, 5: compute_5,
           6: compute_6, 7: compute_7, 8: compute_8, 9: compute_9}
FIRST_RUN: dict[int, dict] = {}


def first(n):
    if n not in FIRST_RUN:
        FIRST_RUN[n], secs = timed(COMPUTE[n])
        FIRST_RUN[n] = (FIRST_RUN[n], secs)
    return FIRST_RUN[n]


# -- the criteria ----------------------------------------------------------------------


def test_criterion_1_identity_gate():
    res, secs = first(1)
    ok = all(res.values()) and secs < 1.0
    record(1, ok, f"{sum(res.values())}/{len(res)} identity checks", secs, 1)
    assert all(res.values()), res
    assert secs < 1.0


def test_criterion_2_oracle_equivalences():
    res, secs = first(2)
    ok = res["a"] == res["b"] == res["c"] == 0 and secs < 900
    record(2, ok, f"disagreements a={res['a']} b={res['b']} c={res['c']} over pairs {res['pairs']}"
                  f" (dim-3 GF(3) via {25} random seed-{SEED} extensions)", secs, 900)
    assert res["a"] == res["b"] == res["c"] == 0
    assert secs < 900


@pytest.mark.parametrize("n", [3, 4, 5])
def test_criteria_3_to_5_suites(n):
    reports, secs = first(n)
    ok, bad = zero_violations(reports)
    notes = sorted({note for r in reports.values() for note in r["notes"]})
    record(n, ok, f"{len(reports)} suite runs, violations {bad or 0}" + (f"; notes {notes}" if notes else ""), secs)
    assert ok, bad


def test_criterion_6_thm_4_2():
    reports, secs = first(6)
    ok, bad = zero_violations(reports)
    held = sum(r["hypothesis"] for r in reports.values())
    ok = ok and secs < 1800
    record(6, ok, f"{held} solvable symmetric members meet the hypothesis, "
                  f"{held - sum(len(r['violations']) for r in reports.values())} supersolvable", secs, 1800)
    assert zero_violations(reports)[0], bad
    assert secs < 1800


OTHER_7 = {"Prop5.1", "Cor5.3-lines", "Prop5.5", "Lem5.7", "Thm5.8"}


def _record_7():
    reports, secs = first(7)
    ok, bad = zero_violations(reports)
    record(7, ok, f"violations {bad or 0}" + ("" if ok else "; Cor5.3's sufficiency direction has "
                  "counterexamples, so its two routes cannot agree"), secs)
    return reports


def test_criterion_7_section_five_suites():
    reports = _record_7()
    ok, bad = zero_violations(reports, OTHER_7)
    assert ok, bad


@pytest.mark.xfail(strict=True, reason="L^2 ∩ J <= Asoc(L) does not force every line to be a c-ideal: "
                                      "[e2,e3] = e2, [e3,e3] = e1 over GF(2) is a counterexample")
def test_criterion_7_cor_5_3_routes_agree():
    reports = _record_7()
    ok, bad = zero_violations(reports, {"Cor5.3"})
    assert ok, bad


def test_criterion_8_turner_refutation():
    res, secs = first(8)
    fin = all(r["direct"] == r["criterion"] == "True" and r["turner_form"] == "Neither" for k, r in res.items() if k.startswith("GF"))
    q = res["Q"]
    corrected = q["Fb ideal"] and q["Fx"] and q["F(aa+bb-(a^2/b)x)"]
    ok = fin and corrected and res["refute"]["passed"] and secs < 10
    record(8, ok, f"GF(5)/GF(7) both routes True, Turner form Neither; Q families {q}"
                  " (the third family holds with the sign -a^2/b only)", secs, 10)
    assert fin and corrected and res["refute"]["passed"], res
    assert secs < 10


def test_criterion_8_third_family_needs_the_minus_sign():
    """(aa + bb + gx)^2 = (a^2 + bg) b, so the line is a subalgebra exactly when g = -a^2/b."""
    res, _ = first(8)
    assert res["Q"]["F(aa+bb+(a^2/b)x)"] is False


def test_criterion_9_q_spot_checks():
    res, secs = first(9)
    ex, s = res["example"], res["sl2"]
    ok = (ex == {"kernel": True, "derived_length": 3, "supersolvable": "True", "chain": True, "cartan_x": True}
          and s == {"simple": "True", "weakly_c_simple": "True", "shortcut_eq_exhaustive_GF5": True,
                    "borel_weak_c": "False"}
          and res["sl2+abelian-1"] and res["sl2-natural-lie"] and secs < 5)
    record(9, ok, f"{res}", secs, 5)
    assert ok, res


def test_criterion_10_determinism():
    mismatched = []
    for n in range(2, 10):
        a = json.dumps(first(n)[0], sort_keys=True, default=str)
        b = json.dumps(COMPUTE[n](), sort_keys=True, default=str)
        if a != b:
            mismatched.append(n)
    record(10, not mismatched, "second run of criteria 2-9 identical" if not mismatched
           else f"criteria {mismatched} differ between runs")
    assert not mismatched
