import pytest

from helpers import CATALOG_SAMPLES

from quiverdims.algebra import BuildError, build_algebra, is_ordered, radical_degree, word
from quiverdims.catalog import CATALOG_NAMES, catalog, dynkin, intro_family
from quiverdims.quiver import Quiver, classify_underlying, coxeter_number, enumerate_paths, quiver_length, reflect
from quiverdims.textformat import FormatError, dump_algebra, parse_algebra_text

ALL = CATALOG_SAMPLES

DIMS = {"linear_A:3": 6, "dynkin:D4": 9, "b_power:2,2": 9, "b_power:2,3": 27, "b_power:3,2": 36,
        "b_grid:3,2": 18, "kronecker": 4, "canonical:2,2,2": 13, "canonical:2,3,4": 26,
        "example_8_1": 6, "example_8_2": 7, "example_8_3": 5, "intro_family:1": 6,
        "reoriented_b3_square": 25}


@pytest.mark.parametrize("entry", ALL)
def test_associative_with_idempotents(entry):
    a = catalog(entry)
    assert a.check_associative()
    one = {i: 1 for i in a.idem.values()}
    for b in range(a.dim):
        assert a.mul(one, {b: 1}) == {b: 1} == a.mul({b: 1}, one)
    for v in a.vertices:
        e = {a.idem[v]: 1}
        assert a.mul(e, e) == e


@pytest.mark.parametrize("entry,dim", sorted(DIMS.items()))
def test_dimensions(entry, dim):
    assert catalog(entry).dim == dim


def test_path_convention():
    a = catalog("example_8_1")
    assert word("yx") == ("x", "y")
    assert a.element([(1, "yx")]) == {}
    assert len(a.piece(2, 0)) == 1      # z only
    b = intro_family(1)
    assert b.element([(1, "yx")]) == b.element([(1, "z")])


def test_cycle_needs_cap():
    q = Quiver([0, 1], [("x", 0, 1), ("y", 1, 0)])
    with pytest.raises(BuildError):
        build_algebra(q, [[(1, ("x", "y"))]])
    a = build_algebra(q, [[(1, ("y", "x"))]], cap=3)
    assert a.dim == 5


def test_cap_too_small_is_detected():
    q = Quiver([0], [("t", 0, 0)])
    with pytest.raises(BuildError):
        build_algebra(q, [], cap=3)


def test_dynkin_classification():
    for kind, n in [("A", 5), ("D", 5), ("E", 6), ("E", 7), ("E", 8)]:
        r = classify_underlying(dynkin(kind, n).quiver)
        assert r.name == f"{kind}{n}" and r.coxeter == coxeter_number(kind, n)
    assert not classify_underlying(catalog("kronecker").quiver).is_dynkin
    assert not classify_underlying(catalog("canonical:2,2,2").quiver).is_dynkin


def test_reflection_keeps_underlying_graph():
    q = dynkin("D", 4).quiver
    r = reflect(q, 0, "source")
    assert classify_underlying(r).name == "D4"
    with pytest.raises(ValueError):
        reflect(q, 3, "source")


def test_paths_and_length():
    q = catalog("b_power:2,2").quiver
    assert quiver_length(q) == 2
    paths = enumerate_paths(q)
    assert len(paths[("00", "11", 2)]) == 2


def test_ordered_and_radical_degree():
    assert is_ordered(catalog("b_power:2,2"))
    assert radical_degree(catalog("example_8_1")) == 1
    assert radical_degree(catalog("example_8_2")) == 2
    assert radical_degree(catalog("linear_A:4")) == 3


def test_canonical_points_must_be_distinct():
    from quiverdims.catalog import INF, canonical
    assert canonical([2, 2, 2], points=[INF, 0, 5]).dim == 13
    with pytest.raises(ValueError):
        canonical([2, 2, 2], points=[INF, 0, 0])


@pytest.mark.parametrize("entry", ALL)
def test_text_format_round_trip(entry):
    a = catalog(entry)
    b = parse_algebra_text(dump_algebra(a))
    assert b.dim == a.dim and b.vertices == a.vertices
    for u in a.vertices:
        for v in a.vertices:
            assert len(a.piece(v, u)) == len(b.piece(v, u))


def test_text_format_composition_convention():
    text = "# paths: composition\n[quiver]\nvertices = 0 1 2\nx = 0 -> 1\ny = 1 -> 2\n[relations]\n1 y x\n"
    assert parse_algebra_text(text).dim == 5


def test_text_format_errors():
    with pytest.raises(FormatError):
        parse_algebra_text("[quiver]\nvertices = 0 1\nx = 0 1\n")
    with pytest.raises(FormatError):
        parse_algebra_text("[bogus]\n")


def test_catalog_names_listed():
    assert any(n.startswith("b_power") for n in CATALOG_NAMES)
    with pytest.raises(KeyError):
        catalog("no_such_algebra")
