import pytest

import toriccohom as tc


def test_p2_series():
    engine = tc.Engine(tc.bundled("P2"))
    assert engine.cohomology([2]) == [6, 0, 0]
    assert engine.cohomology([-3]) == [0, 0, 1]
    assert engine.cohomology_all([[-1], [0], [1]]) == [[0, 0, 0], [1, 0, 0], [3, 0, 0]]


def test_p1xp1_and_oracle():
    model = tc.bundled("P1xP1")
    assert tc.cohomology(model, [-2, 3]) == [0, 4, 0]
    assert tc.cohomology_via_fan(model, [-2, 3]) == [0, 4, 0]
    report = tc.Engine(model).report([-2, 3])
    assert report["h"] == [0, 4, 0]
    assert {"degree", "count", "factors", "contrib"} <= set(report["breakdown"][0])


def test_model_construction():
    model = tc.Model(["x", "y", "z"], 2, [[1], [1], [1]], max_cones=[[1, 2], [2, 3], [1, 3]])
    assert model.sr_ideal == [[1, 2, 3]]
    assert model.canonical_class() == [-3]
    assert model.appears_smooth() is True
    assert tc.Model.from_json(model.to_json()).sr_ideal == [[1, 2, 3]]
    with pytest.raises(ValueError):
        tc.Engine(model).cohomology([1, 2])
    with pytest.raises(ValueError):
        tc.Model(["x", "y"], 1, [[1], [1]], sr_ideal=[[1, 3]])


def test_sr_from_cones():
    assert tc.sr_from_max_cones([[1, 2], [2, 3], [3, 4], [1, 4]], 4) == [[1, 3], [2, 4]]


def test_serre_and_hochster():
    engine = tc.Engine(tc.bundled("dP2"))
    ok, _ = engine.serre_check([1, -2, 0])
    assert ok
    assert tc.hochster_check(tc.bundled("dP3"))["mismatches"] == []


def test_truncated_fan_is_non_finite():
    engine = tc.Engine(tc.bundled("P2_truncated"))
    assert not engine.filter_sound
    with pytest.raises(tc.NonFiniteCohomology):
        engine.cohomology([2])
    assert engine.cohomology_all([[2]]) == [None]


def test_homology_and_duality():
    circle = [[], [1], [2], [3], [1, 2], [2, 3], [1, 3]]
    assert tc.reduced_homology(3, circle) == {1: 1}
    assert tc.alexander_dual(3, circle) == [[]]
    assert tc.reduced_homology(3, [[]]) == {-1: 1}


def test_large_class():
    assert tc.Engine(tc.bundled("P2")).cohomology([2000]) == [(2000 + 2) * (2000 + 1) // 2, 0, 0]
