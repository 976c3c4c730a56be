import io

import pytest
from hypothesis import given, strategies as st

from aktangent.closed_forms import nt_closed
from aktangent.profiles import SingularityProfile as P
from aktangent.tangency_recursion import (
    BaseValueTable,
    MissingEntry,
    TableError,
    invert_for_conditioned,
    load_table,
    nt_recursive,
    parse_table,
    starter_table,
)

A1, A2 = P.of(1), P.of(2)


def table(**kw):
    return BaseValueTable(kw.get("plain", {}), kw.get("cond", {}))


def test_cusp_example():
    t = table(plain={(3, A2): 24}, cond={(3, A2, 2): 12})
    assert nt_recursive(3, A2, t).value == 60


def test_empty_profile():
    assert nt_recursive(5, P(), table()).value == 8


def test_identity_with_arbitrary_inputs():
    t = table(plain={(4, A1): 27}, cond={(4, A1, 1): 6})
    assert nt_recursive(4, A1, t).value == 2 * 3 * 27 - 2 * 6


def test_multi_index_profile():
    p = P.parse("A1^2 A3")
    t = table(plain={(9, p): 1000}, cond={(9, p, 1): 10, (9, p, 3): 7})
    assert nt_recursive(9, p, t).value == 16 * 1000 - 2 * 2 * 10 - 4 * 7


def test_missing_entry_names_key():
    t = table(plain={(3, A2): 24})
    with pytest.raises(MissingEntry, match="NL d=3 profile=A2 cond=A2"):
        nt_recursive(3, A2, t)
    with pytest.raises(MissingEntry, match="N d=4 profile=A2"):
        nt_recursive(4, A2, t)
    with pytest.raises(ValueError):
        nt_recursive(0, A2, t)


def test_inversion():
    assert invert_for_conditioned(3, A2, 24, 60) == 12
    assert invert_for_conditioned(3, A1, 12, 36) == 6
    assert invert_for_conditioned(5, A2, 10, 80) == 0
    with pytest.raises(ArithmeticError):
        invert_for_conditioned(3, A2, 24, 61)
    with pytest.raises(ArithmeticError):
        invert_for_conditioned(3, A1, 1, 36)
    with pytest.raises(ValueError):
        invert_for_conditioned(3, P.of(1, 1), 1, 1)


@given(st.integers(2, 40), st.integers(1, 8), st.integers(0, 10**6), st.integers(0, 10**4))
def test_inversion_roundtrip(d, k, n, nl):
    prof = P.of(k)
    t = table(plain={(d, prof): n}, cond={(d, prof, k): nl})
    nt = nt_recursive(d, prof, t).value
    assert nt <= 2 * (d - 1) * n
    assert invert_for_conditioned(d, prof, n, nt) == nl


def test_starter_table_agrees_with_closed_forms():
    t = starter_table()
    for d, prof in t.keys():
        assert nt_recursive(d, prof, t).value == nt_closed(d, prof).value


def test_starter_node_values_follow_net_degree():
    t = starter_table()
    for d in range(3, 8):
        assert t.n(d, A1) == 3 * (d - 1) ** 2
        assert t.n_line(d, A1, 1) == 3 * (d - 1)


def test_parse_and_dump_roundtrip():
    text = """
    # comment
    N  d=3 profile=A2 value=24   # trailing
    NL d=3 profile=A2 cond=A2 value=12
    N d=7 profile="A1^2, A3" value=5
    """
    t = parse_table(text.splitlines())
    assert len(t) == 3
    assert t.n(7, P.parse("A1^2 A3")) == 5
    again = load_table(io.StringIO(t.dumps()))
    assert again == t
    assert again.dumps() == t.dumps()


@pytest.mark.parametrize("bad, msg", [
    ("X d=3 profile=A1 value=1", "unknown record tag"),
    ("N d=3 profile=A1 value=1\nN d=3 profile=A1 value=2", "duplicate"),
    ("N d=3 profile=A1", "missing field 'value'"),
    ("N d=3 profile=A1 value=x", "not an integer"),
    ("N d=3 profile=B1 value=1", "bad profile token"),
    ("NL d=3 profile=A1 cond=A2 value=1", "needs A2"),
    ("N d=3 profile=A1 value=-1", "non-negative"),
    ("N d=0 profile=A1 value=1", "degree"),
    ("N d=3 profile=A1 value=1 extra=2", "unexpected"),
    ("NL d=3 profile=A1^2 cond=A1^2 value=1", "single"),
])
def test_parse_errors(bad, msg):
    with pytest.raises(TableError, match=msg):
        parse_table(bad.splitlines())


def test_load_from_path(tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("N d=3 profile=A2 value=24\nNL d=3 profile=A2 cond=A2 value=12\n")
    assert nt_recursive(3, A2, load_table(str(f))).value == 60
