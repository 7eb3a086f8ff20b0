import pytest
from hypothesis import given
from hypothesis import strategies as st

from fusiontransfer.catalog import (
    CATALOG,
    ParseError,
    catalog,
    catalog_group,
    dihedral,
    parse_cycles,
    parse_group,
    serialize_group,
)
from fusiontransfer.groups import GroupError, find_isomorphism


def test_catalog_names_resolve():
    orders = {name: catalog_group(name).order for name in CATALOG}
    assert max(orders.values()) <= 400
    assert orders["wreath:3"] == 81 and orders["alternating:6"] == 360
    assert [n for n, _ in catalog(10)] == [n for n in CATALOG if orders[n] <= 10]


def test_inline_permutations():
    G = parse_group("perm 3; (1 2); (1 2 3)")
    assert G.order == 6 and not G.is_abelian


def test_inline_table():
    G = parse_group("table 2; 0 1 1 0")
    assert G.order == 2


def test_wreath_is_d8():
    assert find_isomorphism(catalog_group("wreath:2"), dihedral(8)) is not None


def test_cycles_compose_left_to_right():
    # (1 2) then (1 3): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
    assert parse_cycles("(1 2)(1 3)", 3) == [1, 2, 0]


@pytest.mark.parametrize(
    "bad",
    ["perm 3; (1 4)", "perm 3; (1 2", "table 2; 0 1 1", "table 3; 0 1 2 1 0 2 2 1 0", "nonsense:5", "cyclic:x"],
)
def test_malformed_inputs(bad):
    with pytest.raises(GroupError):
        parse_group(bad)


def test_parse_error_is_group_error():
    assert issubclass(ParseError, GroupError)


@given(st.sampled_from([n for n in CATALOG if catalog_group(n).order <= 60]))
def test_round_trip(name):
    G = catalog_group(name)
    H = parse_group(serialize_group(G))
    assert H.mul == G.mul


def test_file_source(tmp_path):
    path = tmp_path / "s3.txt"
    path.write_text("perm 3;\n(1 2);\n(1 2 3)\n")
    assert parse_group(str(path)).order == 6
