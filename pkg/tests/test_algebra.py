import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leibniz import GF, QQ, LeibnizAlgebra, NotLeibnizError, StructureError
from leibniz.catalog import abelian, cyclic, example_5_6, sl2
from leibniz.subspace import Subspace

from conftest import catalog_entries, exhaustive

half = Fraction(1, 2)


@pytest.fixture
def ex():
    return example_5_6(QQ)


def test_example_products(ex):
    a, b, x = (ex.basis_vector(c) for c in "abx")
    assert ex.bracket(a, x) == (half, 0, 0)
    assert ex.bracket(x, a) == (-half, 0, 0)
    assert ex.square(a) == (0, 1, 0)
    assert abelian(3).bracket((1, 2, 3), (4, 5, 6)) == (0, 0, 0)


rat = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


@given(rat, rat, rat)
def test_example_square_formula(al, be, ga):
    L = example_5_6(QQ)
    assert L.square((al, be, ga)) == (0, al * al + be * ga, 0)


def test_identity_checks(ex):
    assert ex.check_right_leibniz()
    s = sl2(QQ)
    assert s.check_right_leibniz() and s.check_left_leibniz() and s.check_symmetric().is_true
    with pytest.raises(NotLeibnizError) as err:
        LeibnizAlgebra.from_products(QQ, ["e1", "e2"], [("e1", "e1", "e2", 1), ("e2", "e1", "e1", 1)])
    assert err.value.triple is not None


def test_non_leibniz_by_hand():
    # the failing triples come from a direct expansion of the identity
    L = LeibnizAlgebra.from_products(QQ, ["e1", "e2"], [(0, 0, 1, 1), (1, 0, 0, 1)], verify=False)
    bad = []
    for a, b, c in itertools.product(range(2), repeat=3):
        ea, eb, ec = (L.basis_vector(i) for i in (a, b, c))
        lhs = L.bracket(ea, L.bracket(eb, ec))
        rhs = tuple(u - v for u, v in zip(L.bracket(L.bracket(ea, eb), ec), L.bracket(L.bracket(ea, ec), eb)))
        if lhs != rhs:
            bad.append((a, b, c))
    assert bad and not L.check_right_leibniz()
    assert L.right_leibniz_violation() in bad


def test_bracket_spaces(ex):
    assert ex.bracket_spaces(ex.full(), ex.zero()).is_zero()
    assert ex.derived() == ex.span([(1, 0, 0), (0, 1, 0)])
    assert abelian(3).derived().is_zero()


def test_series(ex):
    dims = [S.dim for S in ex.derived_series()]
    assert dims[:4] == [3, 2, 1, 0]
    assert ex.derived_series()[2] == ex.span([(0, 1, 0)])
    assert ex.is_solvable() and ex.derived_length() == 3
    assert sl2(QQ).derived() == sl2(QQ).full() and not sl2(QQ).is_solvable()
    assert abelian(2).is_nilpotent() and abelian(2).nilpotency_class() == 1


def test_kernel_and_J(ex):
    assert ex.leibniz_kernel() == ex.span([(0, 1, 0)])
    assert sl2(QQ).leibniz_kernel().is_zero()
    c = cyclic(3, (0, 0), QQ)
    assert c.leibniz_kernel() == c.span([(0, 1, 0), (0, 0, 1)])
    assert ex.in_J((0, 1, 0)) and not ex.in_J((1, 0, 0)) and ex.in_J((0, 0, 0))


def test_center_normalizer(ex):
    assert ex.centralizer(ex.full(), ex.zero()) == ex.full()
    assert ex.normalizer(ex.full(), ex.span([(0, 0, 1)])) == ex.span([(0, 0, 1)])
    assert abelian(3).center() == abelian(3).full()


def test_restrict_and_quotient(ex):
    sub, emb = ex.restrict(ex.full())
    assert sub.table == ex.table
    Q, q = ex.quotient_algebra(ex.span([(0, 1, 0)]))
    assert Q.labels == ("a", "x")
    assert Q.bracket((1, 0), (0, 1)) == (half, 0)
    assert Q.bracket((0, 1), (1, 0)) == (-half, 0)
    assert Q.square((1, 0)) == (0, 0)
    assert Q.check_right_leibniz()
    A = abelian(3, GF(3))
    Qa, _ = A.quotient_algebra(A.span([(1, 1, 0)]))
    assert Qa.is_abelian()
    with pytest.raises(StructureError):
        ex.restrict(ex.span([(1, 0, 0)]))
    with pytest.raises(StructureError):
        ex.quotient_algebra(ex.span([(0, 0, 1)]))


def test_opposite_turns_right_into_left():
    c = cyclic(3, (1, 0), QQ)
    assert not c.check_left_leibniz()
    assert c.opposite(verify=False).check_left_leibniz()


def _corpus_algebras():
    for p, n in ((2, 1), (2, 2), (3, 2), (5, 2), (2, 3)):
        yield from exhaustive(n, p)
    for p in (None, 2, 3):
        for e in catalog_entries(p):
            if e.algebra.dim <= 4:
                yield e.algebra


def test_kernel_properties_on_corpus():
    for L in _corpus_algebras():
        I = L.leibniz_kernel()
        assert L.bracket_spaces(L.full(), I).is_zero()
        assert L.is_ideal(I)
        Q, q = L.quotient_algebra(I)
        assert Q.leibniz_kernel().is_zero()
        assert Q.check_right_leibniz()
        if L.field.is_finite and L.dim <= 2:
            squares = L.span([L.square(v) for v in itertools.product(range(L.field.p), repeat=L.dim)])
            assert squares == I


def test_derived_series_of_quotients():
    for L in _corpus_algebras():
        if not L.field.is_finite or L.dim > 3:
            continue
        for A in [L.leibniz_kernel(), L.derived(), L.center()]:
            if not L.is_ideal(A):
                continue
            Q, q = L.quotient_algebra(A)
            images = [q.image(S) for S in L.derived_series()]
            for k, S in enumerate(Q.derived_series()):
                assert S == images[min(k, len(images) - 1)]


def test_symmetric_members_cube_to_zero():
    for L in _corpus_algebras():
        if not L.field.is_finite or not L.is_symmetric():
            continue
        for v in itertools.product(range(L.field.p), repeat=L.dim):
            sq = L.square(v)
            assert not any(L.bracket(sq, v)) and not any(L.bracket(v, sq))


def test_nilpotent_implies_solvable():
    for L in _corpus_algebras():
        if L.is_nilpotent():
            assert L.is_solvable()


def test_right_leibniz_all_corpus_tables():
    for L in _corpus_algebras():
        assert L.check_right_leibniz()
        for a, b, c in itertools.product(range(L.dim), repeat=3):
            ea, eb, ec = (L.basis_vector(i) for i in (a, b, c))
            lhs = L.bracket(ea, L.bracket(eb, ec))
            rhs = L.bracket(L.bracket(ea, eb), ec)
            rhs = tuple(L.field.sub(u, v) for u, v in zip(rhs, L.bracket(L.bracket(ea, ec), eb)))
            assert lhs == rhs
