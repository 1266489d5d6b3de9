import pytest

from sigmaroots import DimVector, RootClass, positive_roots_upto
from sigmaroots.oracle import (
    BRUTE_CAP,
    battery,
    brute_decompositions,
    brute_in_sigma,
    imaginary_roots_closure,
    weyl_real_roots,
)


def test_brute_decompositions_a2(a2):
    got = {d for d in brute_decompositions(a2, [0, 0], (1, 1))}
    assert got == {((1, 1),), ((0, 1), (1, 0))}


def test_brute_decompositions_jordan(jordan):
    got = {d for d in brute_decompositions(jordan, [0], (2,))}
    assert got == {((2,),), ((1,), (1,))}


def test_brute_decompositions_vertex_simple(a2):
    assert brute_decompositions(a2, [0, 0], (1, 0)) == [((1, 0),)]
    assert brute_decompositions(a2, [1, 0], (1, 0)) == []


def test_brute_cap(jordan):
    with pytest.raises(ValueError):
        brute_decompositions(jordan, [0], (BRUTE_CAP + 1,))


def test_brute_outputs_revalidate(kronecker):
    from sigmaroots import RootClass, Weight, classify_root

    lam = Weight.zeros(2)
    for d in brute_decompositions(kronecker, lam, (2, 2)):
        total = [0, 0]
        for b in d:
            assert classify_root(kronecker, b) is not RootClass.NOT_ROOT
            assert lam.pair(b) == 0
            total = [x + y for x, y in zip(total, b)]
        assert tuple(total) == (2, 2)


def test_weyl_real_roots_a2(a2):
    assert weyl_real_roots(a2, (2, 2)) == {(1, 0), (0, 1), (1, 1)}


def test_weyl_real_roots_a3_count(a3):
    assert len(weyl_real_roots(a3, (1, 1, 1))) == 6


def test_weyl_real_roots_d4_matches_enumeration(d4):
    bound = DimVector((2, 1, 1, 1))
    got = weyl_real_roots(d4, bound)
    expected = {a for a, c in positive_roots_upto(d4, bound) if c is RootClass.REAL}
    assert got == expected
    assert DimVector((2, 1, 1, 1)) in got  # the highest root


def test_imaginary_closure_affine(d4_tilde):
    bound = DimVector((2, 2, 4, 2, 2))
    got = imaginary_roots_closure(d4_tilde, bound)
    assert got == {(n, n, 2 * n, n, n) for n in (1, 2)}


def test_battery_shapes():
    qs = battery(3)
    assert all(q.k <= 3 for q in qs)
    assert len({q.arrows for q in qs}) == len(qs)
    # every battery quiver is connected
    for q in qs:
        assert q.support_connected(DimVector([1] * q.k))
    # multiplicities within the documented caps
    for q in qs:
        for i in range(q.k):
            assert q.loops(i) <= 2
            for j in range(q.k):
                if i != j:
                    assert q.mult(i, j) <= 2
