import itertools
from fractions import Fraction

import pytest

from leibniz import GF, QQ, StructureError
from leibniz.catalog import abelian, cyclic, example_5_6, get, sl2
from leibniz.cideals import (
    OneDimCase,
    WeakCCertificate,
    all_one_dim_c_ideals,
    classify_one_dim,
    has_subideal_complement,
    is_c_ideal,
    is_weak_c_ideal,
    make_certificate,
    one_dim_c_ideals_criterion,
    one_dim_c_ideals_direct,
    one_dim_c_ideals_lines,
    one_dim_subalgebra_lines,
    quotient_by,
    verify_weak_c,
    weak_c_violation,
)
from leibniz.ideals import SubidealChain, core, frattini, frattini_of_subalgebra, ideals, subalgebras

from conftest import exhaustive


def _borel(S):
    return S.span([S.basis_vector("e"), S.basis_vector("h")])


@pytest.mark.parametrize("F", [QQ, GF(3), GF(5)])
def test_certificate_for_cyclic_plane(F):
    L = cyclic(2, (1,), F)  # x^3 = x^2
    B, C = L.span([(1, -1)]), L.span([(0, 1)])
    assert verify_weak_c(L, make_certificate(L, B, C))
    assert verify_weak_c(L, make_certificate(L, L.full(), L.zero()))


def test_certificate_rejections():
    S = sl2(QQ)
    cert = make_certificate(S, _borel(S), S.full())
    assert not verify_weak_c(S, cert)
    assert weak_c_violation(S, cert) == "B ∩ C ⊄ B_L"
    L = example_5_6(QQ)
    x, AB = L.span([(0, 0, 1)]), L.span([(1, 0, 0), (0, 1, 0)])
    good = make_certificate(L, x, AB)
    assert verify_weak_c(L, good)
    wrong_core = WeakCCertificate(x, AB, good.chain, AB)
    assert "core" in weak_c_violation(L, wrong_core)
    broken = WeakCCertificate(x, AB, SubidealChain((L.full(),)), good.core)
    assert "chain" in weak_c_violation(L, broken)
    short = WeakCCertificate(x, L.span([(1, 0, 0)]), good.chain, good.core)
    assert weak_c_violation(L, short) is not None
    with pytest.raises(StructureError):
        make_certificate(L, x, L.span([(0, 0, 1)]))


def test_certificate_roundtrip_through_dict():
    L = example_5_6(QQ)
    cert = make_certificate(L, L.span([(0, 0, 1)]), L.span([(1, 0, 0), (0, 1, 0)]))
    back = WeakCCertificate.from_dict(L, cert.to_dict())
    assert back == cert and verify_weak_c(L, back)


def test_c_ideal_examples():
    L = example_5_6(GF(5))
    assert is_c_ideal(L, L.span([(0, 1, 0)])).is_true
    for x in one_dim_subalgebra_lines(L):
        v = is_c_ideal(L, L.span([x]))
        assert v.is_true and verify_weak_c(L, v.witness)
    C = cyclic(3, (0, 0), GF(3))
    assert is_c_ideal(C, C.span([(0, 1, 0)])).is_false
    with pytest.raises(StructureError):
        is_c_ideal(C, C.span([(1, 0, 0)]))


def test_weak_c_examples():
    L = cyclic(2, (1,), QQ)
    v = is_weak_c_ideal(L, L.span([(1, -1)]))
    assert v.is_true and verify_weak_c(L, v.witness)
    S = sl2(GF(5))
    short = is_weak_c_ideal(S, _borel(S))
    full = is_weak_c_ideal(S, _borel(S), method="exhaustive")
    assert short.method == "simple-shortcut" and short.is_false and full.is_false
    assert is_weak_c_ideal(sl2(QQ), _borel(sl2(QQ))).is_false


def test_weak_c_over_q_example():
    L = example_5_6(QQ)
    for v in [(0, 0, 1), (0, 1, 0), (1, 1, -1), (2, -1, 4)]:
        B = L.span([v])
        assert L.is_subalgebra(B)
        r = is_weak_c_ideal(L, B)
        assert r.is_true and verify_weak_c(L, r.witness)


def test_shortcut_matches_exhaustive_on_simple_members():
    for F in (GF(5), GF(7)):
        S = sl2(F)
        for B in subalgebras(S):
            assert is_weak_c_ideal(S, B).outcome == is_weak_c_ideal(S, B, method="exhaustive").outcome


def test_classify_one_dim():
    L = example_5_6(QQ)
    r = classify_one_dim(L, (0, 0, 1))
    assert r.kind is OneDimCase.COMPLEMENTED and r.complement == L.span([(1, 0, 0), (0, 1, 0)])
    assert classify_one_dim(L, (0, 1, 0)).kind is OneDimCase.IDEAL
    C = cyclic(3, (0, 0), GF(3))
    assert classify_one_dim(C, (0, 1, 0)).kind is OneDimCase.NOT_C_IDEAL
    with pytest.raises(StructureError):
        classify_one_dim(C, (1, 0, 0))
    with pytest.raises(ValueError):
        classify_one_dim(C, (0, 0, 0))


def test_all_one_dim_examples():
    for F in (GF(5), GF(7)):
        L = example_5_6(F)
        v = all_one_dim_c_ideals(L)
        assert v.is_true
        assert one_dim_c_ideals_direct(L).is_true and one_dim_c_ideals_criterion(L).is_true
    assert all_one_dim_c_ideals(abelian(3, GF(2))).is_true
    assert all_one_dim_c_ideals(abelian(3, QQ)).is_true
    assert all_one_dim_c_ideals(cyclic(3, (0, 0), GF(3))).is_false
    assert all_one_dim_c_ideals(example_5_6(QQ)).is_true


def test_asoc_criterion_is_only_necessary():
    """[e2,e3] = e2, [e3,e3] = e1 over GF(2): L^2 ∩ J = Asoc(L) = <e1, e2>,
    yet F(e1 + e2) lies in L^2 and is not an ideal."""
    from leibniz import LeibnizAlgebra

    L = LeibnizAlgebra.from_products(GF(2), ["e1", "e2", "e3"], [(1, 2, 1, 1), (2, 2, 0, 1)])
    assert one_dim_c_ideals_criterion(L).is_true
    assert one_dim_c_ideals_direct(L).is_false
    assert one_dim_c_ideals_lines(L).is_false
    assert classify_one_dim(L, (1, 1, 0)).kind is OneDimCase.NOT_C_IDEAL
    assert all_one_dim_c_ideals(L).is_false
    Lq = cyclic(3, (1, 0), QQ)
    assert one_dim_c_ideals_lines(Lq).is_false and all_one_dim_c_ideals(Lq).is_false


def _pairs(corpora):
    for n, p in corpora:
        for L in exhaustive(n, p):
            for B in subalgebras(L):
                yield L, B


SMALL = [(1, 2), (2, 2), (1, 3), (2, 3), (2, 5)]


def test_c_implies_weak_c_and_lines_agree():
    for L, B in _pairs(SMALL + [(3, 2)]):
        c, w = is_c_ideal(L, B), is_weak_c_ideal(L, B)
        if c.is_true:
            assert w.is_true
        if B.dim == 1:
            assert c.outcome == w.outcome
        for v in (c, w):
            if v.is_true:
                assert verify_weak_c(L, v.witness)


def test_reduced_matches_unreduced_small():
    for L, B in _pairs(SMALL):
        assert is_weak_c_ideal(L, B).outcome == is_weak_c_ideal(L, B, method="unreduced").outcome
        assert is_c_ideal(L, B).outcome == is_c_ideal(L, B, method="unreduced").outcome


def test_heredity_to_intermediate_subalgebras():
    for n, p in SMALL + [(3, 2)]:
        for L in exhaustive(n, p):
            subs = subalgebras(L)
            for K in subs:
                sub, emb = L.restrict(K)
                for B in subs:
                    if B.leq(K) and is_weak_c_ideal(L, B).is_true:
                        assert is_weak_c_ideal(sub, emb.pullback(B)).is_true


def test_quotient_correspondence():
    for L, B in _pairs(SMALL + [(3, 2)]):
        for A in ideals(L):
            if A.leq(B):
                Q, q = quotient_by(L, A)
                assert is_weak_c_ideal(L, B).outcome == is_weak_c_ideal(Q, q.image(B)).outcome


def test_lemma_2_10_round_trip():
    for L, B in _pairs(SMALL + [(3, 2)]):
        Q, q = quotient_by(L, core(L, B))
        assert is_weak_c_ideal(L, B).is_true == has_subideal_complement(Q, q.image(B)).is_true


def test_frattini_weak_c_ideals_are_ideals():
    for L, C in _pairs(SMALL + [(3, 2)]):
        FC = frattini_of_subalgebra(L, C)
        _, phi = frattini(L, fast_path=False)
        for B in subalgebras(L):
            if B.leq(FC) and is_weak_c_ideal(L, B).is_true:
                assert L.is_ideal(B) and B.leq(phi)


def test_levi_factor_is_weak_c_ideal_in_simple_leibniz_algebra():
    """In sl2 acting on its natural module with only [v, s] nonzero, the
    ideals are 0, I = V and L, so L is simple; yet sl2 itself is a weak
    c-ideal, complemented by the ideal V.  The simple-implies-weakly-c-simple
    direction fails here."""
    from leibniz.catalog import sl2_natural
    from leibniz.structure import is_weakly_c_simple, simple_verdict

    e = get("sl2-natural-leibniz", QQ)
    L = e.algebra
    I = L.leibniz_kernel()
    assert I == e.levi.R
    S = e.levi.S
    assert verify_weak_c(L, make_certificate(L, S, I))
    assert S not in (L.zero(), I, L.full())
    assert is_weakly_c_simple(L).is_unknown

    L5 = sl2_natural(GF(5), form="leibniz")
    assert [K.dim for K in ideals(L5)] == [0, 2, 5]
    assert simple_verdict(L5, "standard").is_true
    S5 = L5.span([L5.basis_vector(c) for c in "efh"])
    assert verify_weak_c(L5, make_certificate(L5, S5, L5.leibniz_kernel()))
