from fractions import Fraction

import pytest

import youngschur as ys


def test_doubling():
    assert ys.double([4, 2]) == [5, 4, 2, 1]
    assert ys.double([1]) == [2]
    assert ys.undouble([5, 4, 2, 1]) == [4, 2]
    assert ys.undouble([3, 2, 1]) is None
    assert ys.is_d_symmetric([3, 3])
    assert ys.frobenius([5, 4, 2, 1]) == ([4, 2], [3, 1])


def test_dimensions():
    assert ys.dim_f([3, 2]) == 5
    assert ys.dim_g([3, 1]) == 2
    assert ys.count_d_paths([3]) == 4
    assert len(ys.partitions(4)) == 5
    assert len(ys.strict_partitions(8)) == 6
    assert sum(ys.dim_f(p) ** 2 for p in ys.partitions(20)) == 2432902008176640000


def test_kerov():
    assert ys.kerov_coords([4, 4, 1]) == ([-3, -1, 4], [-2, 2])
    assert ys.shifted_kerov_coords([5, 3, 2]) == ([3, 5], [1, 4])
    assert ys.r_up_shifted([2]) == "(v - 2) / (v^2 - 6*v)"
    assert ys.up_residues_shifted([2]) == [(Fraction(0), Fraction(1, 3)), (Fraction(6), Fraction(2, 3))]
    assert sum(r for _, r in ys.up_residues([4, 4, 1])) == 1


def test_measures():
    alpha = ys.measure("alpha", 3, alpha="3/16")
    assert alpha == {(3,): Fraction(66, 67), (2, 1): Fraction(1, 67)}
    z = ys.measure("z", 2, s=-1, p=Fraction(3, 16))
    assert z[(2,)] == Fraction(3, 38)
    assert sum(ys.measure("plancherel-shifted", 9).values()) == 1


def test_errors():
    with pytest.raises(ys.Error, match="InadmissibleParams"):
        ys.measure("z", 2, s=0, p=0)
    with pytest.raises(ValueError):
        ys.measure("alpha", 2)
    with pytest.raises(ys.Error, match="CapExceeded"):
        ys.partitions(60)


def test_verify():
    assert "down-equality" in ys.verification_names()
    report = ys.verify("down-equality", 8)
    assert report["status"] == "pass"
    assert report["witnesses"] == []


def test_sampling_is_seeded():
    a = ys.sample("schur", "alpha", 6, 4000, seed=3, alpha="3/16")
    b = ys.sample("schur", "alpha", 6, 4000, seed=3, alpha="3/16", threads=2)
    assert a == b
    assert sum(a.values()) == 4000
    forced = ys.sample("schur", "alpha", 6, 4000, seed=4, method="forced-sym", alpha="3/16")
    exact = ys.measure("alpha", 6, alpha="3/16")
    assert ys.total_variation(forced, exact) < Fraction(1, 20)
    trace = ys.forced_trace(3, "5", seed=1)
    assert len(trace) == 7
    assert all(ys.is_d_symmetric(d) for d in trace[::2])
