import pytest

import liftcover


def test_twist_images():
    assert liftcover.psi("a2", 2) == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]]
    assert liftcover.psi("", 1) == [[1, 0], [0, 1]]
    assert liftcover.psi_k("b1", 1, 5) == [[1, 0], [4, 1]]
    assert liftcover.format_word("a1^1  b2^-2 c1^0", 2) == "a1 b2^-2"


def test_bad_index_raises():
    with pytest.raises(liftcover.LiftcoverError, match="index out of range"):
        liftcover.psi("c2", 2)


def test_lift_report():
    r = liftcover.lift_report("a1", 2, 5)
    assert r["in_lmod"] and r["in_stab_e1"] and r["quotient_class"] == 1
    r = liftcover.lift_report("b1", 2, 5)
    assert not r["in_lmod"] and r["witness"] == (2, 1, 4)
    assert liftcover.lift_report("iota", 2, 2)["in_stab_e1"]


def test_orbit_counts():
    r = liftcover.orbit(3, 2)
    assert r["orbit_size"] == 40 and r["expected"] == 40 and r["transitive"]
    assert liftcover.orbit(4, 1, mode="vector")["orbit_size"] == liftcover.count_primitive(4, 2) == 12


def test_reduce():
    r = liftcover.reduce([1, 3, 1, 2, 0, 1, 0, 0, 0, 4, 0, 1, 0, 3, 4, 0], 5)
    assert r["verified"] and r["round_trip"]
    assert (r["alpha"], r["beta"]) == (2, 4)


def test_penner():
    r = liftcover.penner("1;1:1,1:1", 2, 2)
    assert r["word"] == "c1^-1 a1^-1 b1 a2^-1 b2"
    assert r["liftable"] is False
    assert r["perron_size"] == 5
    assert abs(r["stretch"] - r["hom_dilatation"]) < 1e-6
    assert liftcover.penner("1;2:4,1:1", 2, 4)["liftable"] is True
