import pytest

import endoring as er


def test_koszul_cycles_sequence_and_locality():
    z1 = er.koszul_cycles(5, 1)
    assert z1.num_generators == 10
    report = er.verify_ausbr0(z1)
    assert report["pass"] is True
    assert sum(report["spots"][0]["hf_left"]) == 1
    assert er.is_local_module(z1)


def test_hom_matches_small_cases():
    r = er.free_module(["x", "y"], [0])
    k = er.cyclic_module(["x", "y"], ["x", "y"])
    assert er.hom(r, k).hilbert_function(0, 2) == [1, 0, 0]
    assert er.hom(k, r).num_generators == 0
    assert er.dual(er.free_module(["x"], [0, 0])).num_generators == 2


def test_json_round_trip():
    e = er.one_relation_module(["x", "y", "z"], ["x", "y", "z"])
    d = er.module_to_dict(e)
    assert d["generator_degrees"] == [0, 0, 0]
    back = er.module_from_dict(d)
    assert back.hilbert_function(0, 4) == e.hilbert_function(0, 4)


def test_schema_error_names_field():
    with pytest.raises(ValueError, match="generator_degrees"):
        er.module_from_dict({"ring": {"prime": 32003, "vars": ["x"]}, "relations": []})


def test_invariants():
    z1 = er.koszul_cycles(3, 1)
    assert er.rank(z1) == 2
    assert er.trace_of_identity(z1) == 2
    assert er.depth(z1) == 2
    assert er.projective_dimension(z1) == 1
    assert not er.has_free_summand(z1)
    assert er.betti(z1) == [3, 1]


def test_split_module_is_not_local():
    s = er.direct_sum(er.cyclic_module(["x", "y"], ["x"]), er.cyclic_module(["x", "y"], ["y"]))
    profile = er.radical_profile(s)
    assert profile["is_local"] is False
    assert profile["num_blocks"] == 2


def test_perfect_syzygy_and_adual():
    m = er.cyclic_module(["x", "y", "z"], ["x", "y", "z"])
    assert er.verify_perfect_syzygy_sequence(m, 1)["status"] == "pass"
    e = er.perfect_syzygy(m, 2)
    assert er.verify_adual(e, m)["pass"] is True


def test_precondition_error():
    with pytest.raises(ValueError):
        er.perfect_syzygy(er.free_module(["x"], [0]), 1)


def test_determinantal_bounds():
    e = er.generic_determinantal(2, 3)
    assert e.num_generators == 3
    b = er.generator_bound_report(e)
    assert b["upper_holds"] is True
