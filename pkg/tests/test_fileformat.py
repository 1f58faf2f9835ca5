import pytest
from hypothesis import given, settings, strategies as st

from qtbrauer.fileformat import Block, Document, ParseError, documents_equal, dump, load, parse, serialize
from qtbrauer.library import data_names, data_text
from qtbrauer.linalg import GF, QQ, Matrix, field_from_spec

TINY = """format qtbrauer 1
field rational
kind hopf
dim 1
mul 0 0 0 1
unit 0 1
comul 0 0 0 1
counit 0 1
antipode 0 0 1
"""


@pytest.mark.parametrize("name", data_names())
def test_bundled_files_round_trip(name, tmp_path):
    text = data_text(name)
    doc = parse(text)
    assert serialize(doc) == text
    dump(doc, tmp_path / "x.qtb")
    assert documents_equal(load(tmp_path / "x.qtb"), doc)


def test_comments_blank_lines_and_default_labels():
    doc = parse("# leading comment\n" + TINY.replace("unit 0 1", "unit 0 1   # the unit\n\n"))
    assert doc.labels == ["e0"]
    assert doc.maps["unit"][0, 0] == QQ.one


@pytest.mark.parametrize("mutate, line, what", [
    (lambda t: t.replace("format qtbrauer 1", "format other 2"), 1, "header"),
    (lambda t: t.replace("kind hopf", "kind monoid"), 3, "kind"),
    (lambda t: t.replace("dim 1", "dim 0"), 4, "dim"),
    (lambda t: t + "frobnicate 1\n", 10, "frobnicate"),
    (lambda t: t + "  r 0 0 1\n", 10, "r"),
    (lambda t: t + "rmatrix a\n  r 0 0 1\nmodule a dim 1\n", 12, "module"),
    (lambda t: t.replace("mul 0 0 0 1", "mul 0 0 1"), 5, "mul"),
])
def test_parse_errors_carry_line_numbers(mutate, line, what):
    with pytest.raises(ParseError) as exc:
        parse(mutate(TINY))
    assert exc.value.line == line
    assert exc.value.what == what
    assert str(exc.value).startswith(f"line {line}:")


def test_field_override_reduces_rationals():
    doc = parse(data_text("sweedler"), GF(7))
    assert doc.field == GF(7)
    r = doc.block("t0", "rmatrix").maps["r"]
    # 1/2 = 4 mod 7
    assert r[0, 0] == GF(7)(4)


def test_field_override_rejects_other_mismatch():
    text = serialize(parse(TINY, GF(5)))
    assert "field gf 5" in text
    with pytest.raises(ParseError, match="document is over"):
        parse(text, GF(7))
    with pytest.raises(ParseError, match="document is over"):
        parse(text, QQ)


def test_char_2_cannot_hold_a_half():
    with pytest.raises((ParseError, ValueError, ZeroDivisionError)):
        parse(data_text("sweedler"), GF(2))


def test_field_specs():
    assert field_from_spec("rational") == QQ
    assert field_from_spec("gf7") == GF(7) == field_from_spec("gf 7")
    with pytest.raises(ValueError):
        field_from_spec("gf 6")


coeffs = st.fractions(max_denominator=9).filter(lambda x: x != 0)


@st.composite
def documents(draw):
    fld = draw(st.sampled_from([QQ, GF(5), GF(7)]))
    n = draw(st.integers(1, 3))

    def mat(rows, cols):
        entries = draw(st.dictionaries(st.tuples(st.integers(0, rows - 1), st.integers(0, cols - 1)),
                                       coeffs, max_size=5))
        triples = [(i, j, fld(c.numerator) / fld(c.denominator)) for (i, j), c in entries.items()
                   if fld.characteristic == 0 or c.denominator % fld.characteristic]
        return Matrix.from_sparse(fld, rows, cols, triples)

    maps = {"mul": mat(n, n * n), "unit": mat(n, 1), "comul": mat(n * n, n), "counit": mat(1, n),
            "antipode": mat(n, n)}
    doc = Document(fld, "hopf", n, [f"b{i}" for i in range(n)], maps)
    m = draw(st.integers(1, 3))
    doc.blocks.append(Block("rmatrix", "R", n, None, {"r": mat(n * n, 1)}))
    doc.blocks.append(Block("module", "M", m, [f"m{i}" for i in range(m)], {"action": mat(m, n * m)}))
    return doc


@settings(max_examples=40, deadline=None)
@given(documents())
def test_random_documents_round_trip(doc):
    text = serialize(doc)
    back = parse(text)
    assert documents_equal(back, doc)
    assert serialize(back) == text
