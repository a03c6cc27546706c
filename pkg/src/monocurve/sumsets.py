"""h-fold sumsets, the three-part structure decomposition and the sumset
regularity sigma(A).

Sumsets over [0, h*d] are held as integer bitmasks and grown incrementally:
(h+1)A is the union of hA shifted by each member of A.  The brute-force
sigma path is capped by a total-cell budget (MONOCURVE_BRUTE_CAP overrides
the default); past the cap the formula path is authoritative.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd

from .curve import CurveSpec, first_cohomology, hilbert
from .errors import InputError
from .semigroup import GeneratorSet, apery

DEFAULT_CELL_CAP = 10**6


class _CapExceeded:
    def __repr__(self):
        return "CAP_EXCEEDED"

    def __bool__(self):
        return False


#: Returned by sigma_bruteforce when the cell budget is below the
#: stabilization threshold; the formula value must then be used.
CAP_EXCEEDED = _CapExceeded()


@dataclass(frozen=True)
class SumsetReport:
    a: tuple[int, ...]
    c1_set: tuple[int, ...]
    c1: int
    c2_set: tuple[int, ...]
    c2: int
    sigma: int
    sigma_method: str  # "formula" | "bruteforce"
    h_max: int


def _normalize(a) -> tuple[int, ...]:
    pts = sorted(set(int(x) for x in a) | {0})
    if len(pts) < 2 or pts[0] < 0:
        raise InputError(f"need non-negative integers with a positive maximum: {a!r}")
    g = 0
    for x in pts:
        g = gcd(g, x)
    if g != 1:
        raise InputError(f"set must be coprime, gcd={g}: {a!r}")
    return tuple(pts)


def h_fold_sumset(a, h: int) -> set[int]:
    """All sums of exactly h elements of a (with repetition)."""
    if h < 1:
        raise InputError(f"h must be >= 1, got {h}")
    pts = sorted(set(int(x) for x in a))
    cur = 1  # 0-fold sumset {0}
    for _ in range(h):
        nxt = 0
        for x in pts:
            nxt |= cur << x
        cur = nxt
    return _mask_to_set(cur)


def _mask_to_set(mask: int) -> set[int]:
    out = set()
    i = 0
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return out


def structure_decomposition(a) -> tuple[tuple[int, ...], int, tuple[int, ...], int]:
    """The stabilized head and tail of hA: C1 = <A \\ {0}> up to the
    conductor, and its reflection C2; c_i is the respective conductor."""
    pts = _normalize(a)
    d = pts[-1]
    ap1 = apery(GeneratorSet(pts[1:]))
    f1 = ap1.frobenius()
    c1 = f1 + 1
    c1_set = tuple(x for x in range(0, max(c1 - 1, 0)) if ap1.contains(x))
    refl = tuple(sorted({d - x for x in pts[:-1]} | {d}))
    ap2 = apery(GeneratorSet(refl))
    f2 = ap2.frobenius()
    c2 = f2 + 1
    c2_set = tuple(x for x in range(0, max(c2 - 1, 0)) if ap2.contains(x))
    return c1_set, c1, c2_set, c2


def decomposition_holds(
    h: int, mask: int, c1_set, c1: int, c2_set, c2: int, d: int
) -> bool:
    """hA == C1 | [c1, hd - c2] | (hd - C2), as a disjoint union.

    The junction must be well-formed: hd - c2 >= c1 - 1, i.e. the head and
    tail regions meet or overlap the middle interval.  Without this the set
    identity can hold accidentally at tiny h while the structural
    decomposition (and the conductor formula for sigma) does not."""
    hd = h * d
    if hd - c2 < c1 - 1:
        return False
    lo = sum(1 << x for x in c1_set)
    hi = sum(1 << (hd - x) for x in c2_set if hd - x >= 0)
    mid = 0
    if hd - c2 >= c1:
        mid = ((1 << (hd - c2 - c1 + 1)) - 1) << c1
    if lo & mid or lo & hi or mid & hi:
        return False
    return mask == lo | mid | hi


def stabilization_threshold(a) -> int:
    """Stabilization threshold max{1, (k-1)(d-1)d} for A = {0, a1, ..., d}."""
    pts = _normalize(a)
    k = len(pts) - 1
    d = pts[-1]
    return max(1, (k - 1) * (d - 1) * d)


def sigma_bruteforce(a, cap: int | None = None, cell_cap: int | None = None):
    """Least h from which the structure decomposition holds for every h' up
    to the stabilization threshold, checked exhaustively.

    ``cap`` overrides the largest h checked (must be >= the threshold for
    the answer to be authoritative); ``cell_cap`` bounds the total number of
    sumset cells visited.  Returns CAP_EXCEEDED when the budget is too
    small."""
    pts = _normalize(a)
    d = pts[-1]
    h_max = stabilization_threshold(pts)
    if cap is None:
        cap = h_max
    if cell_cap is None:
        cell_cap = int(os.environ.get("MONOCURVE_BRUTE_CAP", DEFAULT_CELL_CAP))
    total_cells = cap * (cap * d + 1)  # pessimistic: sum of mask widths
    if cap < h_max or total_cells > cell_cap:
        return CAP_EXCEEDED
    c1_set, c1, c2_set, c2 = structure_decomposition(pts)
    # same check as decomposition_holds, with the h-independent masks hoisted
    lo = sum(1 << x for x in c1_set)
    rev = sum(1 << (c2 - 2 - x) for x in c2_set) if c2 >= 2 else 0
    cur = 1
    last_fail = 0
    for h in range(1, cap + 1):
        nxt = 0
        for x in pts:
            nxt |= cur << x
        cur = nxt
        hd = h * d
        if hd - c2 < c1 - 1:
            last_fail = h
            continue
        mid = ((1 << (hd - c2 - c1 + 1)) - 1) << c1 if hd - c2 >= c1 else 0
        hi = rev << (hd - c2 + 2) if c2 >= 2 else 0
        if lo & mid or lo & hi or mid & hi or cur != lo | mid | hi:
            last_fail = h
    return last_fail + 1


def sigma_formula(spec: CurveSpec) -> int:
    """sigma(A) = max{ri(S), ceil((F1 + F2 + 2) / d)}, clamped to >= 1:
    the decomposition is only defined for h >= 1, so a full interval
    (where ri = 0 and both conductors are 0) has sigma = 1."""
    d = spec.d
    f1 = apery(spec.gen_set_1()).frobenius()
    f2 = apery(spec.gen_set_2()).frobenius()
    ri = hilbert(spec).ri
    return max(1, ri, -((-(f1 + f2 + 2)) // d))


def sigma_bounds(spec: CurveSpec) -> dict[str, int]:
    """Both known upper bounds on sigma(A)."""
    gp = spec.gaps()
    return {
        "lvovsky": gp.lambda_max + gp.lambda_sl + 1,
        "glp": spec.d - spec.k + 1,
    }


def sumset_report(spec: CurveSpec, method: str = "formula") -> SumsetReport:
    """Assemble the structure decomposition and sigma for a curve's set
    A = {0, a1, ..., d}.  method is "formula", "brute" or "both"; "both"
    falls back to the formula when the brute-force cap is exceeded."""
    pts = (0,) + spec.a
    c1_set, c1, c2_set, c2 = structure_decomposition(pts)
    h_max = stabilization_threshold(pts)
    if method == "formula":
        sigma, used = sigma_formula(spec), "formula"
    elif method == "brute":
        sb = sigma_bruteforce(pts)
        if sb is CAP_EXCEEDED:
            sigma, used = sigma_formula(spec), "formula"
        else:
            sigma, used = sb, "bruteforce"
    elif method == "both":
        sf = sigma_formula(spec)
        sb = sigma_bruteforce(pts)
        if sb is not CAP_EXCEEDED and sb != sf:
            raise AssertionError(
                f"sigma mismatch for {spec.a}: formula={sf}, bruteforce={sb}"
            )
        sigma, used = sf, "formula" if sb is CAP_EXCEEDED else "bruteforce"
    else:
        raise InputError(f"unknown sigma method: {method!r}")
    return SumsetReport(
        a=pts, c1_set=c1_set, c1=c1, c2_set=c2_set, c2=c2,
        sigma=sigma, sigma_method=used, h_max=h_max,
    )
