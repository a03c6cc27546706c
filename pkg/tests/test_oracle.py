import pytest

from monocurve import CurveSpec, GeneratorSet, RangeError, apery, first_cohomology
from monocurve.oracle import (
    bf_apery,
    bf_degree,
    bf_frobenius,
    bf_membership,
    bf_sigma,
    bf_sprime_minus_s,
)


def test_bf_membership():
    A = GeneratorSet((3, 5))
    assert not bf_membership(A, 7)
    assert bf_membership(A, 8)
    assert not bf_membership(A, -2)
    with pytest.raises(RangeError):
        bf_membership(A, 10**6 + 1)


def test_bf_degree():
    assert bf_degree(GeneratorSet((5, 9, 11, 20)), 24) == 4
    assert bf_degree(GeneratorSet((3, 5)), 0) == 0
    assert bf_degree(GeneratorSet((5, 11, 12)), 18) is None
    with pytest.raises(RangeError):
        bf_degree(GeneratorSet((3, 5)), 10**4 + 1)


def test_bf_apery_frobenius():
    A = GeneratorSet((3, 5), modulus=5)
    tab = bf_apery(A)
    assert tab.omega == (0, 6, 12, 3, 9)
    assert tab == apery(A)
    assert bf_frobenius(GeneratorSet((3, 5))) == 7
    tab = bf_apery(GeneratorSet((1, 8)))
    assert tab.omega == tuple(range(8)) and tab.deg == tuple(range(8))
    with pytest.raises(RangeError):
        bf_apery(GeneratorSet((3, 500)))


def test_bf_sprime_examples():
    assert bf_sprime_minus_s(CurveSpec((5, 9, 11, 20))) == {(24, 36)}
    assert bf_sprime_minus_s(CurveSpec((1, 2, 7))) == set()
    assert len(bf_sprime_minus_s(CurveSpec((2, 10, 22, 57)))) == 2
    with pytest.raises(RangeError):
        bf_sprime_minus_s(CurveSpec((1, 61)))


def test_bf_sigma():
    assert bf_sigma((0, 1, 2, 3, 4)) == 1
    assert bf_sigma((0, 1, 4)) == 2
    from monocurve import sigma_formula

    spec = CurveSpec((1, 3, 11, 13))
    assert bf_sigma((0,) + spec.a) == sigma_formula(spec) == 5
    with pytest.raises(RangeError):
        bf_sigma((0, 3, 50, 1001))


def test_bf_membership_agreement(small_corpus):
    import random

    from monocurve import membership

    rng = random.Random(5)
    for a in small_corpus[:10]:
        A = GeneratorSet(a)
        for _ in range(50):
            n = rng.randint(0, 500)
            assert membership(A, n) == bf_membership(A, n), (a, n)


def test_fast_paths_match_oracles_small_sample(small_corpus):
    for a in small_corpus[:15]:
        spec = CurveSpec(a)
        for gs in (spec.gen_set_1(), spec.gen_set_2()):
            assert apery(gs) == bf_apery(gs), a
        coh = first_cohomology(spec)
        assert set(coh.lattice_all) == bf_sprime_minus_s(spec), a
