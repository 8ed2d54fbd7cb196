import os

import pytest

import _propkit as pk

FIXTURES = os.environ.get("PROPKIT_FIXTURES", "tests/fixtures")

BINARY_MG = "colors c\ngen m : c,c -> c\n"
ASSOC = (
    "colors c\n"
    "gen m : c,c -> c\n"
    "rel vcomp(gen(m),hcomp(gen(m),id(c))) = vcomp(gen(m),hcomp(id(c),gen(m)))\n"
)


def read_fixture(name):
    with open(os.path.join(FIXTURES, name)) as handle:
        return handle.read()


def test_permutations():
    p = pk.Perm([2, 1, 3])
    q = pk.Perm([1, 3, 2])
    assert (p * q) == pk.Perm([2, 3, 1])
    assert pk.sigma_xy(2, 3) == pk.Perm([3, 4, 5, 1, 2])
    assert pk.block_transpose(2, 2) == pk.Perm([1, 3, 2, 4])
    assert (p * p.inverse()).is_identity()
    with pytest.raises(pk.PropkitError):
        pk.Perm([1, 1])


def test_free_prop_counts():
    mg = pk.Megagraph.parse(BINARY_MG)
    fp = pk.FreeProp(mg, 3)
    assert len(fp.enumerate(["c"], ["c"], 2)) == 1
    assert len(fp.enumerate(["c", "c"], ["c"], 1)) == 2
    assert len(fp.enumerate(["c", "c", "c"], ["c"], 2)) == 12


def test_normalize_and_term_equality():
    fp = pk.FreeProp(pk.Megagraph.parse(BINARY_MG), 3)
    info = fp.normalize("vcomp(gen(m),hcomp(gen(m),id(c)))")
    assert info["source"] == "c,c,c"
    assert info["target"] == "c"
    assert info["vertices"] == 2
    assert fp.equal_terms("gen(m)", "gen(m)")
    assert not fp.equal_terms("gen(m)", "act((2 1),(1),gen(m))")
    with pytest.raises(pk.PropkitError):
        fp.normalize("vcomp(gen(m),gen(m))")  # profile mismatch


def test_word_problem():
    assoc = pk.PresentedProp(pk.Presentation.parse(ASSOC), 3, 4)
    left = "vcomp(gen(m),hcomp(gen(m),id(c)))"
    right = "vcomp(gen(m),hcomp(id(c),gen(m)))"
    assert assoc.word_equal(left, right) == "equal"
    assert assoc.word_equal("gen(m)", "act((2 1),(1),gen(m))") == "distinct"
    assert assoc.hom_count(["c", "c", "c"], ["c"]) == 6


def test_tensor_and_sharp():
    r = pk.Presentation.parse("colors a\ngen m : a,a -> a\n")
    s = pk.Presentation.parse("colors c\ngen beta : c -> c\n")
    sharp = pk.sharp(r, s)
    assert sharp.generators == 2
    assert sharp.relations == 0
    tens = pk.tensor(r, s)
    assert tens.generators == 2
    assert tens.relations == 1
    bv = pk.bv_tensor(pk.Presentation.parse("colors a\ngen alpha : a -> a\n"), s)
    assert bv.relations == 1
    # Hom counts into End(2) agree for the two tensor constructions:
    # commuting pairs of unary functions on a 2-element set.
    unary = pk.Presentation.parse("colors a\ngen alpha : a -> a\n")
    both = pk.tensor(unary, s), pk.bv_tensor(unary, s)
    counts = [pk.count_prop_maps_end(pk.PresentedProp(p, 2, 3), 2) for p in both]
    assert counts[0] == counts[1] == 10


def test_table_prop_fixture_and_evaluate():
    table = pk.TableProp.parse(read_fixture("end2u.tprop"))
    report = table.check_axioms()
    assert report["ok"]
    mg = pk.Megagraph.parse("colors a\ngen alpha : a -> a\n")
    value = pk.evaluate(
        mg,
        "vcomp(gen(alpha),gen(alpha))",
        table,
        {"alpha": "m6"},
        {"a": "x"},
    )
    assert value == "m5"  # swap composed with swap is the identity

    bad = pk.TableProp.parse(read_fixture("star_corrupt.tprop"))
    assert not bad.check_axioms()["ok"]
