from fractions import Fraction

from monocurve import CurveSpec, GeneratorSet, apery, first_cohomology
from monocurve.bounds import (
    a1_bounds,
    a2_bound,
    bd2_bound,
    bound_report,
    buchsbaum_reg_bounds,
    delta_omega_bound,
    frobsum_bound,
    glp_bound,
    lvovsky_bound,
    r1_values,
    schur_bound,
    selmer_bound,
    selmer_bound_weak,
    smooth_bound,
    double_residue_bound,
)


def test_schur():
    assert schur_bound(GeneratorSet((3, 5))) == 7 == apery(GeneratorSet((3, 5))).frobenius()
    assert schur_bound(GeneratorSet((1, 9))) == -1
    A = GeneratorSet((5, 9, 11, 20))
    assert schur_bound(A) == 75 >= apery(A).frobenius()


def test_selmer():
    val, ok = selmer_bound(GeneratorSet((5, 7, 9, 16)))
    assert ok and val == 27
    assert selmer_bound_weak(GeneratorSet((3, 5))) == 7
    # repeated residues mod a1: strict form not applicable, weak form valid
    A = GeneratorSet((4, 8, 9))
    _, ok = selmer_bound(A)
    assert not ok
    assert selmer_bound_weak(A) >= apery(A).frobenius()


def test_a2_bound():
    spec = CurveSpec((1, 2, 8, 9))  # a_{k-1} = d - 1 and a1 = 1: F1 = F2 = -1
    assert a2_bound(spec) == -1 >= first_cohomology(spec).a2
    spec = CurveSpec((5, 9, 11, 20))
    assert a2_bound(spec) >= 3


def test_frobsum_cases():
    # run of eps = 3 consecutive members (3, 4, 5)
    val, case = frobsum_bound(CurveSpec((3, 4, 5, 9, 12)))
    assert case == "consecutive-run" and val == 0
    # pair but no run of eps
    val, case = frobsum_bound(CurveSpec((4, 5, 12)))
    assert case == "consecutive-pair" and val == max(4, 12 - 5) - 2
    # generic
    val, case = frobsum_bound(CurveSpec((5, 9, 11, 20)))
    assert case == "generic" and val == 5 + 9 - 3


def test_frobsum_monotone_when_eps_ge_2(small_corpus):
    for a in small_corpus:
        spec = CurveSpec(a)
        d = spec.d
        eps = max(a[0], d - a[-2])
        if eps < 2:
            continue
        a1s = set(spec.a1_set)
        generic = a[0] + (d - a[-2]) - 3
        if any(i in a1s and i + 1 in a1s for i in range(d)):
            assert eps - 2 <= generic
        if any(all(i + t in a1s for t in range(eps)) for i in range(d - eps + 2)):
            assert 0 <= eps - 2


def test_a1_sandwich():
    spec = CurveSpec((5, 9, 11, 20))
    lo, u2, u3 = a1_bounds(spec)
    a1 = first_cohomology(spec).a1
    assert lo <= a1 <= min(u2, u3)
    assert a1_bounds(CurveSpec((1, 2, 7))) is None  # Cohen-Macaulay


def test_glp_lvovsky():
    spec = CurveSpec((5, 9, 11, 20))
    assert lvovsky_bound(spec) == 13 >= first_cohomology(spec).reg
    assert glp_bound(spec) == 17


def test_lvovsky_le_glp(small_corpus):
    for a in small_corpus:
        spec = CurveSpec(a)
        assert lvovsky_bound(spec) <= glp_bound(spec)


def test_smooth_bound():
    up, lo, ok = smooth_bound(CurveSpec((1, 3, 11, 12)))
    assert ok and up == 8
    reg = first_cohomology(CurveSpec((1, 3, 11, 12))).reg
    assert up >= reg
    assert lo is not None and lo <= reg
    _, _, ok = smooth_bound(CurveSpec((5, 9, 11, 20)))
    assert not ok
    _, _, ok = smooth_bound(CurveSpec((1, 2, 3)))  # k == d
    assert not ok


def test_buchsbaum_bounds():
    vals, ok = buchsbaum_reg_bounds(CurveSpec((5, 9, 11, 20)))
    assert ok
    reg = first_cohomology(CurveSpec((5, 9, 11, 20))).reg
    assert all(v >= reg for v in vals.values())
    _, ok = buchsbaum_reg_bounds(CurveSpec((1, 3, 4, 10, 12)))
    assert not ok


def test_single_gap_values():
    kind, val, ok, _ = r1_values(CurveSpec((1, 3, 4, 5)))  # [0,1] u [3,5]
    assert ok and kind == "exact" and val == 2
    assert first_cohomology(CurveSpec((1, 3, 4, 5))).reg == 2

    kind, val, ok, _ = r1_values(CurveSpec((1, 2, 7)))  # [0,2] u {7}
    assert ok and kind == "pair" and val == (2, 3)
    assert first_cohomology(CurveSpec((1, 2, 7))).reg in val

    _, _, ok, _ = r1_values(CurveSpec((5, 9, 11, 20)))
    assert not ok
    _, _, ok, reason = r1_values(CurveSpec((1, 9, 10)))  # p=1 > d-q=1 is fine
    assert ok or "p <= d - q" in reason


def test_bd2_bound(small_corpus):
    val, ok, _ = bd2_bound(CurveSpec((1, 3, 4, 8, 10)))
    assert not ok  # a1 = 1 violates the first-block hypothesis
    for a in small_corpus:
        spec = CurveSpec(a)
        val, ok, _ = bd2_bound(spec)
        if ok:
            assert val >= first_cohomology(spec).reg, a


def test_delta_omega_bound():
    A = GeneratorSet((3, 5))
    val, ok = delta_omega_bound(A)
    assert ok and val >= max(apery(A).deg)
    _, ok = delta_omega_bound(GeneratorSet((4, 8, 9)))
    assert not ok


def test_double_residue_bound():
    # a1 < k forces repeated residues mod a1
    val, ok, _ = double_residue_bound(CurveSpec((2, 5, 7, 9)))
    assert not ok
    spec = CurveSpec((5, 7, 9, 16))
    val, ok, _ = double_residue_bound(spec)
    if ok:
        assert isinstance(val, Fraction)
        assert val >= first_cohomology(spec).reg


def test_bound_report_reference_curve():
    rep = bound_report(CurveSpec((5, 9, 11, 20)), sigma=4)
    for e in rep.entries:
        if e.applicable and e.satisfied is not None:
            assert e.satisfied, e
    assert rep.entry("a1-lower").value == 3
    assert rep.entry("glp").value == 17


def test_bound_report_cm_curve():
    rep = bound_report(CurveSpec((1, 2, 7)))
    assert not rep.entry("a1-lower").applicable
    assert rep.entry("single-gap").applicable
