import pytest
from hypothesis import given, strategies as st

from leibniz import GF, QQ
from leibniz.catalog import catalog
from leibniz.fileformat import FileFormatError, dump, dump_many, load_one, parse_text

EXAMPLE = """\
# the counterexample algebra
name example-5.6
field Q
basis a b x
a a b 1
a x a 1/2
b x b 1
x a a -1/2
"""


def test_example_is_four_product_lines():
    (af,) = parse_text(EXAMPLE)
    L = af.to_algebra()
    assert af.field == QQ and af.dim == 3 and len(af.entries) == 4
    assert L.name == "example-5.6"
    assert dump(L) == "\n".join(l for l in EXAMPLE.splitlines() if not l.startswith("#")) + "\n"


@pytest.mark.parametrize("F", [QQ, GF(2), GF(3), GF(5)])
def test_catalog_round_trip(F):
    entries = catalog(F)
    for e in entries:
        notes = {"levi.S": e.levi.S} if e.levi else {}
        (af,) = parse_text(dump(e.algebra, notes))
        back = af.to_algebra()
        assert back.table == e.algebra.table and back.labels == e.algebra.labels
        if e.levi:
            assert af.subspace("levi.S", back) == e.levi.S
    docs = parse_text(dump_many([e.algebra for e in entries]))
    assert [d.to_algebra().table for d in docs] == [e.algebra.table for e in entries]


def test_field_and_index_forms():
    text = "field GF(5)\ndim 2\n0 0 1 1/2\n"
    (af,) = parse_text(text)
    assert af.labels == ["e1", "e2"]
    assert af.to_algebra().table[0][0] == (0, 3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("field Q\nbasis a b\na a c 1\n", 3),
        ("field Q\nbasis a b\na a b 1.5\n", 3),
        ("field GF 5\nbasis a b\na a b 1/5\n", 3),
        ("field Q\nbasis a a\n", 2),
        ("basis a b\na a b 1\n", 2),
        ("field Q\nbasis a b\na a b\n", 3),
        ("field R\nbasis a\n", 1),
        ("field Q\nbasis a b\nannotation S 1 x\n", 3),
    ],
)
def test_malformed_files(text, line):
    with pytest.raises(FileFormatError) as err:
        parse_text(text)
    assert err.value.line == line


def test_structural_errors():
    with pytest.raises(FileFormatError):
        parse_text("basis a b\n")
    with pytest.raises(FileFormatError):
        parse_text("field Q\n")
    with pytest.raises(FileFormatError):
        parse_text("field Q\ndim 3\nbasis a b\n")
    with pytest.raises(FileFormatError):
        parse_text("field Q\nbasis a b\nannotation S 1 0 0\n")


def test_load_one_requires_single_document(tmp_path):
    p = tmp_path / "two.alg"
    p.write_text("field Q\nbasis a\n---\nfield Q\nbasis b\n")
    with pytest.raises(FileFormatError):
        load_one(str(p))


entry = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2),
                  st.integers(-20, 20), st.integers(1, 9))


@given(st.lists(entry, max_size=8))
def test_random_tables_round_trip(entries):
    text = "field Q\nbasis u v w\n" + "".join(f"{i} {j} {k} {a}/{b}\n" for i, j, k, a, b in entries)
    (af,) = parse_text(text)
    L = af.to_algebra(verify=False)
    (again,) = parse_text(dump(L))
    assert again.to_algebra(verify=False).table == L.table
