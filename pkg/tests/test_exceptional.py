import pytest
from hypothesis import given, settings, strategies as st

from quiverdims.catalog import catalog
from quiverdims.complexes import PerfectComplex, direct_sum_complexes
from quiverdims.exceptional import (SCRIPT_NAMES, ExcCollection, MutationError, ScriptError, block_left,
                                    ddim_bounds, end_algebra, hom_complex, is_exceptional, iterated_left_object,
                                    kronecker_certificate, left_mutate, left_mutation_object,
                                    projective_collection, rdim_bounds, right_mutate, run_named_script,
                                    run_script, shift_object)


def same_object(x, y):
    """Isomorphic exceptional objects: Hom in both directions is k in degree 0 and the shapes agree."""
    return x.shape() == y.shape() and hom_complex(x, y) == {0: 1} == hom_complex(y, x)


def test_projectives_form_strong_collection():
    a = catalog("linear_A:3")
    c = projective_collection(a)
    assert c.is_strong()
    e = end_algebra(c)
    assert e.shape == "A3" and e.dim == 6 and e.dynkin_hereditary


def test_reversed_order_is_reported():
    a = catalog("linear_A:2")
    c = projective_collection(a)
    r = ExcCollection(c.objects[::-1], c.labels[::-1])
    assert r.violations() == [(2, 1, 0)]
    assert not r.is_exceptional()


def test_simples_are_exceptional():
    a = catalog("b_power:2,2")
    c = run_script("start S00 S11 P01\n", a)
    assert all(is_exceptional(x) for x in c.collection.objects)


def test_orthogonal_swap():
    a = catalog("b_power:2,2")
    c = projective_collection(a, ["00", "01", "10", "11"])
    assert c.is_block(2, 3)
    m = left_mutate(c, 3)
    assert m.labels[1:3] == ["L(P01;P10)", "P01"]
    assert same_object(m.objects[1], c.objects[2])


def test_mixed_degree_hom_is_rejected():
    a = catalog("linear_A:2")
    u, v = a.vertices
    P = {w: PerfectComplex.stalk(a, w) for w in a.vertices}
    F = direct_sum_complexes([P[v], P[v].shift(1)])
    E = P[u] if hom_complex(P[u], P[v]) else P[v]
    assert len(hom_complex(E, F)) == 2
    with pytest.raises(MutationError):
        left_mutation_object([E], F)


def test_out_of_range_and_non_block():
    c = projective_collection(catalog("linear_A:3"))
    with pytest.raises(MutationError):
        left_mutate(c, 1)
    with pytest.raises(MutationError):
        right_mutate(c, 3)
    with pytest.raises(MutationError):
        block_left(c, 1, 2)    # P0 and P1 are not orthogonal


@pytest.mark.parametrize("entry", ["linear_A:3", "b_power:2,2", "example_8_1", "dynkin:D4"])
def test_right_then_left_returns(entry):
    c = projective_collection(catalog(entry))
    for i in range(1, len(c)):
        back = left_mutate(right_mutate(c, i), i + 1)
        assert same_object(back.objects[i - 1], c.objects[i - 1])
        assert back.is_exceptional()


def test_block_agrees_with_iterated():
    a = catalog("b_power:2,2")
    c = projective_collection(a, ["00", "01", "10", "11"])
    blk = block_left(c, 2, 3).objects[1]
    it = iterated_left_object(c.objects[1:3], c.objects[3])
    assert same_object(blk, it)


@given(st.lists(st.tuples(st.sampled_from("LR"), st.integers(1, 4)), max_size=5),
       st.sampled_from(["linear_A:4", "b_power:2,2"]))
@settings(max_examples=40, deadline=None)
def test_mutations_keep_exceptional(moves, entry):
    c = projective_collection(catalog(entry))
    for side, i in moves:
        try:
            c = left_mutate(c, i) if side == "L" else right_mutate(c, i)
        except MutationError:
            continue
        assert c.is_exceptional()


def test_shift_keeps_exceptional_but_not_strong():
    c = projective_collection(catalog("linear_A:3"))
    s = shift_object(c, 2, 1)
    assert s.is_exceptional() and not s.is_strong()


@pytest.mark.parametrize("name", SCRIPT_NAMES)
def test_named_scripts(name):
    rep = run_named_script(name)
    assert rep.ok, [s for s in rep.steps if not s.ok]
    assert rep.collection.is_strong()


def test_script_end_algebras():
    assert run_named_script("d4").end.matches("D4", 9)
    e6 = run_named_script("e6").end
    assert e6.shape == "E6" and e6.dynkin_hereditary
    assert run_named_script("kronecker-in-b2cubed").kronecker == (1, 6)


def test_script_failures_are_reported():
    a = catalog("linear_A:3")
    rep = run_script("start P0 P1 P2\nexpect-hom 1 2 = 0:2\n", a)
    assert not rep.ok and "Hom" in rep.steps[-1].detail
    rep = run_script("start P2 P1\n", a)
    assert not rep.ok
    rep = run_script("start P0 P1 P2\nfrobnicate 1\n", a)
    assert not rep.ok
    with pytest.raises(ScriptError):
        run_script("# nothing\n", a)


def test_kronecker_certificates():
    assert kronecker_certificate(catalog("kronecker")) is not None
    assert kronecker_certificate(catalog("linear_A:3")) is None
    assert kronecker_certificate(catalog("canonical:2,2,2")) is not None


@pytest.mark.parametrize("entry,rd,dd", [("b_power:2,1", "0", "1"), ("b_power:2,2", "0", "1"),
                                        ("b_power:2,3", "1", "[1, 3]"), ("example_8_1", "1", "1"),
                                        ("kronecker", "1", "1"), ("linear_A:1", "0", "0")])
def test_bounds(entry, rd, dd):
    from quiverdims.report import bound_hints, ddim_bounds_for
    a = catalog(entry)
    r = rdim_bounds(a, bound_hints(a))
    d = ddim_bounds_for(a)
    assert r.interval() == rd and d.interval() == dd
    assert r.upper <= d.upper and r.lower <= r.upper


def test_slices_are_validated():
    a = catalog("b_power:2,2")
    with pytest.raises(ValueError):
        rdim_bounds(a, {"slices": [["11", "01"], ["00", "10"]]})


def test_script_over_wrong_algebra_is_refused():
    with pytest.raises(ValueError):
        rdim_bounds(catalog("b_power:2,3"), {"scripts": ["d4"]})


def test_declared_blocks_are_checked():
    a = catalog("linear_A:2")
    P = [PerfectComplex.stalk(a, v) for v in a.vertices]
    with pytest.raises(ValueError):
        ddim_bounds(a, blocks=[[("A", P[0]), ("B", P[1])]])
