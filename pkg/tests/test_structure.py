import pytest

from leibniz import GF, QQ, Undecided
from leibniz.catalog import (
    abelian,
    almost_abelian_lie,
    almost_abelian_nonlie,
    cyclic,
    example_5_6,
    heisenberg,
    sl2,
    turner_case_ii,
)
from leibniz.cideals import all_one_dim_c_ideals
from leibniz.ideals import ideals, minimal_ideals
from leibniz.structure import (
    AAKind,
    TurnerCase,
    almost_abelian_bruteforce,
    almost_abelian_kind,
    is_cyclic,
    is_simple,
    is_supersolvable,
    is_weakly_c_simple,
    lemma_5_7_profile,
    profile,
    simple_verdict,
    supersolvable_bruteforce,
    symmetric_classification_check,
    turner_form,
)

from conftest import catalog_entries, exhaustive


def _flag_ok(L, flag):
    assert [S.dim for S in flag] == list(range(L.dim + 1))
    assert all(L.is_ideal(S) for S in flag)
    assert all(a < b for a, b in zip(flag, flag[1:]))


def test_supersolvable_examples():
    L = example_5_6(QQ)
    v = is_supersolvable(L)
    assert v.is_true
    assert v.witness == [L.zero(), L.span([(0, 1, 0)]), L.span([(1, 0, 0), (0, 1, 0)]), L.full()]
    _flag_ok(L, v.witness)
    assert is_supersolvable(abelian(3, QQ)).is_true
    assert is_supersolvable(sl2(QQ)).is_false


def test_supersolvable_matches_brute_force():
    for p, n in ((2, 1), (2, 2), (3, 2), (5, 2), (2, 3)):
        for L in exhaustive(n, p):
            v = is_supersolvable(L)
            assert v.is_true == supersolvable_bruteforce(L)
            if v.is_true:
                _flag_ok(L, v.witness)
                assert L.is_solvable()


def test_simplicity_examples():
    S = sl2(GF(5))
    assert is_simple(S) and is_weakly_c_simple(S).is_true
    assert not is_simple(example_5_6(GF(5)))
    assert not is_simple(abelian(2, GF(3)))
    assert simple_verdict(abelian(1, GF(3)), "literal").is_true
    assert simple_verdict(sl2(QQ)).is_true
    assert is_weakly_c_simple(sl2(QQ)).method == "simple-shortcut"
    with pytest.raises(ValueError):
        simple_verdict(S, "bogus")


def test_conventions_on_the_cyclic_plane():
    """x^3 = x^2: ideals 0, I = Fx^2, L.  Simple once L^2 != 0 is all that is
    asked, yet F(x - x^2) is a weak c-ideal."""
    L = cyclic(2, (1,), GF(3))
    assert simple_verdict(L, "nondegenerate").is_true
    assert simple_verdict(L, "standard").is_false
    assert is_weakly_c_simple(L).is_false
    assert is_weakly_c_simple(L, "standard").is_false


def test_weakly_c_simple_matches_simple_on_corpus():
    for p, n in ((2, 1), (2, 2), (3, 2), (5, 2), (2, 3)):
        for L in exhaustive(n, p):
            assert is_weakly_c_simple(L, "standard").is_true == simple_verdict(L, "standard").is_true


def test_cyclic_examples():
    for F in (QQ, GF(3)):
        C = cyclic(3, (0, 0), F)
        v = is_cyclic(C)
        assert v.is_true and v.witness == C.basis_vector("x")
    assert is_cyclic(abelian(2, GF(3))).is_false
    assert is_cyclic(abelian(3, QQ)).is_false
    assert is_cyclic(example_5_6(GF(5))).is_false


def test_almost_abelian_examples():
    for F in (QQ, GF(3), GF(5)):
        assert almost_abelian_kind(almost_abelian_lie(3, F)) is AAKind.LIE
        assert almost_abelian_kind(almost_abelian_nonlie(3, F)) is AAKind.NON_LIE
    assert almost_abelian_kind(example_5_6(QQ)) is AAKind.NONE
    assert almost_abelian_bruteforce(example_5_6(GF(5))) is AAKind.NONE


def test_almost_abelian_matches_brute_force():
    algebras = [L for p, n in ((2, 2), (3, 2), (5, 2), (2, 3)) for L in exhaustive(n, p)]
    algebras += [e.algebra for p in (2, 3) for e in catalog_entries(p) if e.algebra.dim <= 3]
    for L in algebras:
        assert almost_abelian_kind(L) is almost_abelian_bruteforce(L)


def test_turner_examples():
    assert turner_form(heisenberg(QQ)).case is TurnerCase.CASE_I
    for F in (GF(3), GF(5)):
        t = turner_case_ii(F)
        form = turner_form(t)
        assert form.case is TurnerCase.CASE_II and form.kind is AAKind.LIE
        assert form.A.dim == 1 and form.B.dim == 3
    for F in (GF(5), GF(7)):
        L = example_5_6(F)
        assert turner_form(L).case is TurnerCase.NEITHER
        assert all_one_dim_c_ideals(L).is_true
    with pytest.raises(Undecided):
        turner_form(example_5_6(QQ))


def test_symmetric_classification():
    t = turner_case_ii(GF(3))
    assert symmetric_classification_check(t).case is TurnerCase.CASE_II
    assert symmetric_classification_check(heisenberg(GF(3))).case is TurnerCase.CASE_I
    with pytest.raises(ValueError):
        symmetric_classification_check(example_5_6(GF(5)))
    for p, n in ((2, 2), (3, 2), (5, 2), (2, 3)):
        for L in exhaustive(n, p):
            if L.is_symmetric() and all_one_dim_c_ideals(L).is_true:
                assert symmetric_classification_check(L).case is not TurnerCase.NEITHER


def test_lemma_5_7_profile():
    L = example_5_6(GF(5))
    prof = lemma_5_7_profile(L)
    assert prof.ok and prof.D == L.span([(0, 1, 0)])
    assert prof.functional == (0, 0, 1)
    A = abelian(3, GF(3))
    prof = lemma_5_7_profile(A)
    assert prof.ok and prof.D.is_zero()
    for p, n in ((2, 2), (3, 2), (5, 2), (2, 3)):
        for L in exhaustive(n, p):
            if all_one_dim_c_ideals(L).is_true:
                prof = lemma_5_7_profile(L)
                assert prof.ok, (L.name, prof.violations)
                mins = [M for M in minimal_ideals(L).ideals if L.is_abelian(M)]
                assert all(M.dim == 1 for M in mins)


def test_cyclic_algebras_and_dimension_bound():
    for F in (GF(2), GF(3), QQ):
        for n, lam in ((1, ()), (2, (0,)), (2, (1,)), (3, (0, 0)), (3, (1, 0)), (4, (0, 0, 0))):
            L = cyclic(n, lam, F)
            assert all_one_dim_c_ideals(L).is_true == (n <= 2)


def test_profile_consistency():
    for p, n in ((2, 2), (3, 2), (2, 3)):
        for L in exhaustive(n, p):
            pr = profile(L)
            if pr.nilpotency_class is not None:
                assert pr.derived_length is not None
            if pr.supersolvable == "True":
                assert pr.derived_length is not None
            if pr.lie:
                assert pr.symmetric == "True"
            assert set(pr.to_dict()) >= {"turner", "almost_abelian", "simple"}
    pr = profile(example_5_6(QQ))
    assert pr.turner == "Unknown" and pr.supersolvable == "True" and pr.derived_length == 3
