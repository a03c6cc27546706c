"""Closed-form bounds on Frobenius numbers, a1, a2 and the regularity.

Every bound is a pure function paired with a machine-checkable
applicability predicate; "not applicable" is a first-class outcome.
Mixed rational expressions are evaluated with fractions.Fraction and
floored exactly; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .curve import CurveSpec, build_profile, first_cohomology, is_buchsbaum
from .semigroup import GeneratorSet, apery, gap_profile


@dataclass(frozen=True)
class BoundEntry:
    name: str
    target: str  # one of F, a1, a2, reg, sigma, deltaOmega
    kind: str  # upper | lower | exact | pair
    applicable: bool
    reason: str
    value: object = None  # int, Fraction or tuple of ints
    target_value: object = None
    satisfied: bool | None = None


@dataclass(frozen=True)
class BoundReport:
    spec: CurveSpec
    entries: tuple[BoundEntry, ...]

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def schur_bound(A: GeneratorSet) -> int:
    """F <= (a1 - 1)(ak - 1) - 1, with equality for two generators."""
    return (A.gens[0] - 1) * (A.gens[-1] - 1) - 1


def selmer_bound(A: GeneratorSet) -> tuple[int, bool]:
    """F <= 2*ak*floor(a1/k) - a1 under pairwise distinct residues mod a1.

    Returns (value, applicable)."""
    a1, ak, k = A.gens[0], A.gens[-1], A.k
    residues = [g % a1 for g in A.gens]
    ok = len(set(residues)) == k
    return 2 * ak * (a1 // k) - a1, ok


def selmer_bound_weak(A: GeneratorSet) -> int:
    """Always-valid variant with k' = number of distinct residues mod a1."""
    a1, ak = A.gens[0], A.gens[-1]
    kp = len({g % a1 for g in A.gens})
    return 2 * ak * (a1 // kp) - a1


def _f12(spec: CurveSpec) -> tuple[int, int]:
    return apery(spec.gen_set_1()).frobenius(), apery(spec.gen_set_2()).frobenius()


def a2_bound(spec: CurveSpec) -> int:
    """a2 <= floor((F1 + F2) / d), with exact Frobenius numbers."""
    f1, f2 = _f12(spec)
    return (f1 + f2) // spec.d


def frobsum_bound(spec: CurveSpec) -> tuple[int, str]:
    """Sharpest of three nested bounds on floor((F1+F2)/d) >= a2.

    Generic case: a1 + (d - a_{k-1}) - 3.  A pair of consecutive members of
    A1 improves it to eps - 2; a run of eps consecutive members to 0.
    Returns (value, case name)."""
    d = spec.d
    a1s = set(spec.a1_set)
    eps = max(spec.a[0], d - spec.a[-2])
    cases = [("generic", spec.a[0] + (d - spec.a[-2]) - 3)]
    if any(i in a1s and i + 1 in a1s for i in range(d)):
        cases.append(("consecutive-pair", eps - 2))
    if any(all(i + t in a1s for t in range(eps)) for i in range(0, d - eps + 2)):
        cases.append(("consecutive-run", 0))
    case, value = min(cases, key=lambda cv: cv[1])
    return value, case


def a1_bounds(spec: CurveSpec) -> tuple[int, int, int] | None:
    """(lower, upperII, upperIII) sandwich on a1, or None when I is empty.

    upperIII mixes the maximal component degrees with exact rational
    weights (1 - a1/d) and a_{k-1}/d, then floors."""
    prof = build_profile(spec)
    idx = prof.index_set
    if not idx:
        return None
    es = [prof.entry(i) for i in idx]
    lower = max(max(e.d1, e.d2) for e in es) - 1
    upper2 = max(e.d1 + e.d2 - e.deg for e in es) - 2
    d = spec.d
    mix = Fraction(d - spec.a[0], d) * max(e.d1 for e in es) + Fraction(
        spec.a[-2], d
    ) * max(e.d2 for e in es)
    upper3 = floor(mix) - 2
    return lower, upper2, upper3


def glp_bound(spec: CurveSpec) -> int:
    """reg(K[S]) <= d - k + 1."""
    return spec.d - spec.k + 1


def lvovsky_bound(spec: CurveSpec) -> int:
    """reg(K[S]) <= lambda_max + lambda_sl + 1."""
    gp = spec.gaps()
    return gp.lambda_max + gp.lambda_sl + 1


def smooth_bound(spec: CurveSpec) -> tuple[int, int | None, bool]:
    """Bounds for smooth curves (a1 = 1 and a_{k-1} = d - 1).

    Upper: reg <= floor((lambda_max - 1)/eps) + 2 where eps is the longest
    symmetric run of members 1..eps and d-1..d-eps.  Lower (when a first
    non-zero gap exists right after the initial run [1, p]):
    reg >= ceil(lambda/p) + 1.  Returns (upper, lower | None, applicable).
    """
    d = spec.d
    if not (spec.a[0] == 1 and spec.a[-2] == d - 1) or spec.k == d:
        return 0, None, False
    inner = set(spec.a[:-1])
    eps = 0
    while eps + 1 in inner and d - 1 - eps in inner:
        eps += 1
    gp = spec.gaps()
    upper = (gp.lambda_max - 1) // eps + 2
    p = 0
    while p + 1 in inner:
        p += 1
    lower = None
    nxt = min(x for x in spec.a if x > p)
    if nxt >= p + 2:
        lam = nxt - p - 1
        lower = -((-lam) // p) + 1  # ceil(lam / p) + 1
    return upper, lower, True


def buchsbaum_reg_bounds(spec: CurveSpec) -> tuple[dict[str, int], bool]:
    """Regularity bounds valid for Buchsbaum rings, mirroring the three
    frobsum cases: a1 + (d - a_{k-1}); eps + 1 with a consecutive pair;
    3 with a run of eps."""
    bbm, _ = is_buchsbaum(spec)
    if not bbm:
        return {}, False
    d = spec.d
    a1s = set(spec.a1_set)
    eps = max(spec.a[0], d - spec.a[-2])
    out = {"generic": spec.a[0] + (d - spec.a[-2])}
    if any(i in a1s and i + 1 in a1s for i in range(d)):
        out["consecutive-pair"] = eps + 1
    if any(all(i + t in a1s for t in range(eps)) for i in range(0, d - eps + 2)):
        out["consecutive-run"] = 3
    return out, True


def r1_values(spec: CurveSpec) -> tuple[str, object, bool, str]:
    """Single-gap curves A1 = [0, p] u [q, d].

    q < d (with p <= d - q): reg = ceil((q-1)/p) exactly.
    q = d: reg is one of {a+1, a+2} with a = floor(d/p) - ceil((p*floor(d/p)+2)/d).
    Returns (kind, value, applicable, reason)."""
    gp = spec.gaps()
    if gp.r != 1:
        return "exact", None, False, f"A1 has {gp.r} non-zero gaps, need exactly 1"
    (b0, p), (q, d) = gp.blocks
    if b0 != 0 or p < 1:
        return "exact", None, False, "first block must be [0, p] with p >= 1"
    if q == d:
        a = d // p - ceil(Fraction(p * (d // p) + 2, d))
        return "pair", (a + 1, a + 2), True, f"A1 = [0,{p}] u {{{d}}}"
    if p > d - q:
        return "exact", None, False, f"needs p <= d - q, got p={p}, d-q={d - q}"
    return "exact", -((-(q - 1)) // p), True, f"A1 = [0,{p}] u [{q},{d}]"


def bd2_bound(spec: CurveSpec) -> tuple[int | None, bool, str]:
    """Crossed floor-mix bound for non-smooth curves with r >= 2 blocks of
    gaps, first block {0}, last block reaching d, and b5 - b4 + 1 >= b2."""
    gp = spec.gaps()
    d = spec.d
    if gp.r < 2:
        return None, False, "needs at least 2 non-zero gaps"
    blocks = gp.blocks
    b1 = blocks[0][1]
    b2r = blocks[-1][0]
    if b1 != 0:
        return None, False, "needs a1 > 1 (first block must be {0})"
    if b2r == d:
        return None, False, "needs a_{k-1} = d - 1 (last block larger than {d})"
    b2, b3 = blocks[1]
    b4, b5 = blocks[2]
    if b5 - b4 + 1 < b2:
        return None, False, f"needs b5 - b4 + 1 >= b2, got {b5}-{b4}+1 < {b2}"
    lam_max, lam_sl = gp.lambda_max, gp.lambda_sl
    m = max(
        lam_sl // (d - b2r) + lam_max // b2,
        lam_max // (d - b2r) + lam_sl // b2,
    )
    return m + 2, True, "block-shape hypotheses met"


def delta_omega_bound(A: GeneratorSet) -> tuple[int, bool]:
    """max_i delta(omega(i)) <= 1 + floor((2*ak*floor(a1/k) + lambda_max)/a1)
    under pairwise distinct residues mod a1.  Returns (value, applicable)."""
    a1, ak, k = A.gens[0], A.gens[-1], A.k
    ok = len({g % a1 for g in A.gens}) == k
    gp = gap_profile(A)
    value = 1 + (2 * ak * (a1 // k) + gp.lambda_max) // a1
    return value, ok


def double_residue_bound(spec: CurveSpec) -> tuple[Fraction | None, bool, str]:
    """reg(K[S]) <= 1 + (2d + lambda_max)/k * (1 + (a_{k-1} - a1)/d) when the
    exponents have pairwise distinct residues both mod a1 and mod
    d - a_{k-1}.  Exact rational; the comparison against the integer reg is
    done without rounding."""
    d, k = spec.d, spec.k
    m1, m2 = spec.a[0], d - spec.a[-2]
    if m2 == 0:
        return None, False, "d - a_{k-1} = 0"
    for m, label in ((m1, "a1"), (m2, "d - a_{k-1}")):
        if len({x % m for x in spec.a}) != k:
            return None, False, f"repeated residues mod {label}"
    gp = spec.gaps()
    value = 1 + Fraction(2 * d + gp.lambda_max, k) * (1 + Fraction(spec.a[-2] - m1, d))
    return value, True, "residues distinct mod a1 and mod d - a_{k-1}"


def bound_report(spec: CurveSpec, sigma: int | None = None) -> BoundReport:
    """Run every bound with its applicability and attach the exact targets."""
    coh = first_cohomology(spec)
    gp = spec.gaps()
    g1 = spec.gen_set_1()
    f1, f2 = _f12(spec)
    max_delta_omega = max(apery(g1).deg[1:]) if spec.d > 1 else 0
    entries: list[BoundEntry] = []

    def add(name, target, kind, applicable, reason, value, tval):
        sat = None
        if applicable and tval is not None and value is not None:
            if kind == "upper":
                sat = bool(value >= tval)
            elif kind == "lower":
                sat = bool(value <= tval)
            elif kind == "exact":
                sat = bool(value == tval)
            elif kind == "pair":
                sat = tval in value
        entries.append(
            BoundEntry(name, target, kind, applicable, reason, value, tval, sat)
        )

    add("schur", "F", "upper", True, "always", schur_bound(g1), f1)
    sel, ok = selmer_bound(g1)
    add("selmer", "F", "upper", ok,
        "residues distinct mod a1" if ok else "repeated residues mod a1", sel, f1)
    add("selmer-weak", "F", "upper", True, "always", selmer_bound_weak(g1), f1)

    add("a2-frobenius", "a2", "upper", True, "always", a2_bound(spec), coh.a2)
    fs, case = frobsum_bound(spec)
    add("a2-frobsum", "a2", "upper", True, case, fs, coh.a2)

    ab = a1_bounds(spec)
    if ab is None:
        for name in ("a1-lower", "a1-upper-ii", "a1-upper-iii"):
            add(name, "a1", "lower" if name == "a1-lower" else "upper",
                False, "Cohen-Macaulay: index set empty", None, coh.a1)
    else:
        add("a1-lower", "a1", "lower", True, "index set non-empty", ab[0], coh.a1)
        add("a1-upper-ii", "a1", "upper", True, "index set non-empty", ab[1], coh.a1)
        add("a1-upper-iii", "a1", "upper", True, "index set non-empty", ab[2], coh.a1)

    add("glp", "reg", "upper", True, "always", glp_bound(spec), coh.reg)
    add("lvovsky", "reg", "upper", True, "always", lvovsky_bound(spec), coh.reg)

    up, lo, ok = smooth_bound(spec)
    add("smooth-upper", "reg", "upper", ok,
        "a1 = 1 and a_{k-1} = d-1" if ok else "not a smooth curve with k < d",
        up if ok else None, coh.reg)
    add("smooth-lower", "reg", "lower", ok and lo is not None,
        "first non-zero gap present" if (ok and lo is not None) else "no first gap",
        lo, coh.reg)

    bb, ok = buchsbaum_reg_bounds(spec)
    for case_name in ("generic", "consecutive-pair", "consecutive-run"):
        app = ok and case_name in bb
        add(f"buchsbaum-{case_name}", "reg", "upper", app,
            "Buchsbaum" if app else ("not Buchsbaum" if not ok else "case hypothesis not met"),
            bb.get(case_name), coh.reg)

    kind, val, ok, reason = r1_values(spec)
    add("single-gap", "reg", kind if ok else "exact", ok, reason, val, coh.reg)

    val, ok, reason = bd2_bound(spec)
    add("block-mix", "reg", "upper", ok, reason, val, coh.reg)

    val, ok = delta_omega_bound(g1)
    add("delta-omega", "deltaOmega", "upper", ok,
        "residues distinct mod a1" if ok else "repeated residues mod a1",
        val if ok else None, max_delta_omega)

    val, ok, reason = double_residue_bound(spec)
    add("double-residue", "reg", "upper", ok, reason, val, coh.reg)

    if sigma is not None:
        add("sigma-lvovsky", "sigma", "upper", True, "always",
            gp.lambda_max + gp.lambda_sl + 1, sigma)
        add("sigma-glp", "sigma", "upper", True, "always",
            spec.d - spec.k + 1, sigma)

    return BoundReport(spec=spec, entries=tuple(entries))
