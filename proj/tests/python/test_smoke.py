import math

import pytest

import invharm


def test_worked_example_path():
    outer, inner = [10, 9, 6, 4, 4, 3], [10, 6, 4, 4, 4, 2]
    assert invharm.lattice_path(outer, inner) == "SSNSNNNNNS"
    assert invharm.reflection_pairs(outer, inner) == [
        (3, 4), (5, 14), (6, 13), (7, 12), (8, 11), (9, 10)]
    assert invharm.width(outer, inner) == 14


def test_phi_round_trip():
    outer = [17, 14, 13, 8, 3, 2]
    image = invharm.phi(outer, [14, 14, 12, 6, 2], 57, 9, 24)
    assert image == [14, 14, 10, 6, 2]
    assert invharm.phi_inverse(outer, image, 57, 9, 24) == [14, 14, 12, 6, 2]
    with pytest.raises(invharm.DomainViolation):
        invharm.phi([2, 1], [2], 3, 1, 1)


def test_shadows():
    assert invharm.left_shadow([4], [], 4, 2, 0) == [2]
    assert invharm.right_shadow([4], [2], 4, 2, 0) == []


def test_grfrob_routes_agree():
    want = {(3,): [1], (2, 1): [0, 1]}
    for method in ("signed", "positive", "width", "oracle"):
        assert invharm.grfrob(3, 1, method) == want
    assert invharm.grfrob(4, 2) == {(4,): [1], (3, 1): [0, 1], (2, 2): [0, 1]}


def test_hilbert_and_mass():
    for n in range(1, 7):
        for a in range(n % 2, n + 1, 2):
            h = invharm.hilbert(n, a)
            assert h == invharm.hilbert(n, a, "oracle")
            k = (n - a) // 2
            expected = math.factorial(n) // (2**k * math.factorial(k) * math.factorial(a))
            assert sum(h) == expected == invharm.locus_size(n, a)
            assert len(invharm.enumerate_locus(n, a)) == expected


def hook_count(shape):
    cols = [sum(1 for r in shape if r > j) for j in range(shape[0])]
    hooks = 1
    for i, r in enumerate(shape):
        for j in range(r):
            hooks *= (r - j) + (cols[j] - i) - 1
    return math.factorial(sum(shape)) // hooks


def test_big_integers_come_back_as_python_ints():
    value = invharm.syt_count([20, 20, 20])
    assert isinstance(value, int)
    assert value > 2**64
    assert value == hook_count([20, 20, 20])


def test_errors():
    with pytest.raises(ValueError):
        invharm.grfrob(3, 0)
    with pytest.raises(invharm.ResourceLimit):
        invharm.hilbert(7, 1, "oracle")
    assert invharm.hilbert(7, 1, "oracle", max_n=7) == [1, 20, 70, 14]


def test_basis_and_dim():
    verdict = invharm.verify_basis(6, 0)
    assert verdict["passed"]
    assert verdict["profile"] == [1, 9, 5]
    q, outer, inner = invharm.dim_bijection([2, 1])
    assert (q, outer, inner) == ([[1, 2]], [2], [2])
    assert invharm.rsk_symmetric([[0, 1], [1, 0]]) == [[1], [2]]


def test_sweeps_pass():
    for report in (invharm.check_formulas(6), invharm.check_bijections(6),
                   invharm.check_width(8), invharm.check_dim_bijection(6)):
        assert report["passed"], report["failures"][:3]
        assert report["checks"] > 0
