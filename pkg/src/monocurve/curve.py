"""Invariants of a projective monomial curve C(a1, ..., ak).

Everything is derived from the two Apery tables of the generator sequence
and its reflection: the per-residue w-vectors, the index set I of residues
whose w-vector falls outside the semigroup, the Cohen-Macaulay / Buchsbaum
classification, the graded pieces of the first two local cohomology modules,
the regularity, and the Hilbert function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InputError
from .semigroup import (
    AperyTable,
    GapProfile,
    GeneratorSet,
    apery,
    degree_table,
    gap_profile_of,
)


@dataclass(frozen=True)
class CurveSpec:
    """The exponent sequence 0 < a1 < ... < ak = d, coprime."""

    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if len(a) < 2:
            raise InputError(f"a curve needs at least 2 exponents, got {a!r}")
        if a[0] <= 0 or any(x >= y for x, y in zip(a, a[1:])):
            raise InputError(f"exponents must be positive and strictly increasing: {a!r}")
        g = 0
        for x in a:
            g = gcd(g, x)
        if g != 1:
            raise InputError(f"exponents must be coprime, gcd={g} for {a!r}")

    @property
    def d(self) -> int:
        return self.a[-1]

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def a1_set(self) -> tuple[int, ...]:
        """{0, a1, ..., d}"""
        return (0,) + self.a

    @property
    def a2_gens(self) -> tuple[int, ...]:
        """Reflected generators {d - a_{k-1}, ..., d - a1, d}."""
        d = self.d
        return tuple(sorted(d - x for x in self.a[:-1])) + (d,)

    def gen_set_1(self) -> GeneratorSet:
        return GeneratorSet(self.a)

    def gen_set_2(self) -> GeneratorSet:
        return GeneratorSet(self.a2_gens)

    def gaps(self) -> GapProfile:
        return gap_profile_of(self.a)


@dataclass(frozen=True)
class WEntry:
    """Residue i with w = (omega1(i), omega2(d-i)), its degree, the two
    component degrees, and whether i lies in the index set I."""

    i: int
    w: tuple[int, int]
    deg: int
    d1: int
    d2: int
    in_i: bool


@dataclass(frozen=True)
class CurveProfile:
    spec: CurveSpec
    entries: tuple[WEntry, ...]  # residues 1 .. d-1
    index_set: tuple[int, ...]
    a2: int

    def entry(self, i: int) -> WEntry:
        return self.entries[i - 1]


@dataclass(frozen=True)
class CohomologyProfile:
    spec: CurveSpec
    index_set: tuple[int, ...]
    cm: bool
    buchsbaum: bool
    a1: int | None  # None iff Cohen-Macaulay (H^1 vanishes)
    a2: int
    reg: int
    ell_h1: int
    lattice_top: tuple[tuple[int, int], ...]  # points realising a1
    lattice_all: tuple[tuple[int, int], ...]  # full basis of H^1

    @property
    def reg_curve(self) -> int:
        return self.reg + 1


@dataclass(frozen=True)
class HilbertData:
    values: tuple[int, ...]
    slope: int
    intercept: int
    ri: int


@lru_cache(maxsize=None)
def build_profile(spec: CurveSpec) -> CurveProfile:
    """Per-residue w-vectors, degrees, the index set I and a2 = max deg - 2."""
    d = spec.d
    ap1 = apery(spec.gen_set_1())
    ap2 = apery(spec.gen_set_2())
    inner = set(spec.a[:-1])
    entries = []
    index_set = []
    for i in range(1, d):
        w1 = ap1.omega[i]
        w2 = ap2.omega[(d - i) % d]
        deg = (w1 + w2) // d
        d1 = ap1.deg[i]
        d2 = ap2.deg[(d - i) % d]
        in_i = i not in inner and d1 > deg
        if in_i:
            index_set.append(i)
        entries.append(WEntry(i=i, w=(w1, w2), deg=deg, d1=d1, d2=d2, in_i=in_i))
    a2 = max(e.deg for e in entries) - 2
    return CurveProfile(
        spec=spec, entries=tuple(entries), index_set=tuple(index_set), a2=a2
    )


def is_cohen_macaulay(spec: CurveSpec) -> bool:
    return not build_profile(spec).index_set


def is_buchsbaum(spec: CurveSpec) -> tuple[bool, tuple | None]:
    """Buchsbaum verdict with a witness on failure.

    Cohen-Macaulay rings are vacuously Buchsbaum.  Otherwise every i in I
    must satisfy d1 == d2 == deg + 1, and no two w-vectors over I may differ
    by a generator vector e_h = (h, d-h).  The witness is ("degree", i,
    which) or ("pair", i, j, h).
    """
    prof = build_profile(spec)
    if not prof.index_set:
        return True, None
    for i in prof.index_set:
        e = prof.entry(i)
        if e.d1 != e.deg + 1:
            return False, ("degree", i, "d1")
        if e.d2 != e.deg + 1:
            return False, ("degree", i, "d2")
    d = spec.d
    gens = set(spec.a[:-1])
    for i in prof.index_set:
        wi = prof.entry(i).w
        for j in prof.index_set:
            if j == i:
                continue
            wj = prof.entry(j).w
            h = wj[0] - wi[0]
            if h in gens and wj[1] - wi[1] == d - h:
                return False, ("pair", i, j, h)
    return True, None


@lru_cache(maxsize=None)
def first_cohomology(spec: CurveSpec) -> CohomologyProfile:
    """Full cohomology profile: a1, a2, reg and a basis of H^1.

    The basis points are w_i + (n1*d, n2*d) over i in I, with n1 ranging up
    to d2(w_i) - deg(w_i) - 1 and n2 up to delta1(omega1(i) + n1*d) -
    deg(w_i) - n1 - 1.  When every n1 range is {0} the Apery degrees
    suffice; otherwise a degree table up to level N1 + ND2 is consulted.
    """
    d = spec.d
    if spec.k == d:
        # full interval [0, d]: normal, Cohen-Macaulay, regularity 1
        return CohomologyProfile(
            spec=spec, index_set=(), cm=True, buchsbaum=True,
            a1=None, a2=-1, reg=1, ell_h1=0, lattice_top=(), lattice_all=(),
        )
    prof = build_profile(spec)
    idx = prof.index_set
    a2 = prof.a2
    if not idx:
        return CohomologyProfile(
            spec=spec, index_set=(), cm=True, buchsbaum=True,
            a1=None, a2=a2, reg=a2 + 2, ell_h1=0, lattice_top=(), lattice_all=(),
        )
    nd2 = max(prof.entry(i).d2 - prof.entry(i).deg - 1 for i in idx)
    table = None
    if nd2 > 0:
        n1_level = max(prof.entry(i).d1 for i in idx)
        table = degree_table(spec.gen_set_1(), n1_level + nd2)

    top: list[tuple[int, int]] = []
    allpts: list[tuple[int, int]] = []
    a1 = None
    for i in idx:
        e = prof.entry(i)
        w1, w2 = e.w
        j0 = (w1 - i) // d
        for n1 in range(e.d2 - e.deg):  # n1 <= d2 - deg - 1
            if n1 == 0:
                d1v = e.d1
            else:
                d1v = table.get(i, j0 + n1)
                assert d1v is not None, "degree table level guarantee violated"
            n2_max = d1v - e.deg - n1 - 1
            assert n2_max >= 0
            for n2 in range(n2_max + 1):
                allpts.append((w1 + n1 * d, w2 + n2 * d))
            top.append((w1 + n1 * d, w2 + n2_max * d))
            cand = e.deg + n1 + n2_max
            if a1 is None or cand > a1:
                a1 = cand
    reg = max(a1 + 1, a2 + 2)
    bbm, _ = is_buchsbaum(spec)
    return CohomologyProfile(
        spec=spec, index_set=idx, cm=False, buchsbaum=bbm,
        a1=a1, a2=a2, reg=reg, ell_h1=len(allpts),
        lattice_top=tuple(sorted(top)), lattice_all=tuple(sorted(allpts)),
    )


def h1_graded_dimension(profile: CohomologyProfile, t: int) -> int:
    """dim of the degree-t piece of H^1: basis points of degree t."""
    d = profile.spec.d
    return sum(1 for (u1, u2) in profile.lattice_all if (u1 + u2) // d == t)


def h2_graded_dimension(spec: CurveSpec, t: int, floor: int | None = None) -> int:
    """dim of the degree-t piece of H^2: sum over residues j of
    max(0, deg(w_j) - t - 1); the residue j = 0 contributes max(0, -t - 1)."""
    d = spec.d
    if floor is None:
        floor = -3 * d
    if t < floor:
        raise InputError(f"t={t} below the configured floor {floor}")
    prof = build_profile(spec)
    total = max(0, -t - 1)  # w_0 = (0, 0) has degree 0
    for e in prof.entries:
        total += max(0, e.deg - t - 1)
    return total


def hilbert(spec: CurveSpec, n_max: int | None = None) -> HilbertData:
    """Hilbert function H(n) = #(n-fold sumset of {0, a1, ..., d}) for
    0 <= n <= n_max, its eventual linear form d*n + c, and the regularity
    index ri, the least point from which H agrees with that form."""
    reg = first_cohomology(spec).reg
    if n_max is None:
        n_max = reg + 1
    if n_max < reg + 1:
        raise InputError(f"n_max={n_max} must be at least reg+1={reg + 1}")
    d = spec.d
    points = spec.a1_set
    values = [1]
    cur = 1  # bitmask of the 0-fold sumset {0}
    for _ in range(n_max):
        nxt = 0
        for a in points:
            nxt |= cur << a
        cur = nxt
        values.append(cur.bit_count())
    c = values[n_max] - d * n_max
    ri = n_max
    while ri > 0 and values[ri - 1] == d * (ri - 1) + c:
        ri -= 1
    return HilbertData(values=tuple(values), slope=d, intercept=c, ri=ri)


NOT_APPLICABLE = "not-applicable"


def classify_special(spec: CurveSpec) -> dict[str, dict]:
    """Special-case classification criteria, each with its own applicability
    predicate.  Every applicable verdict must agree with the general
    classifiers; tests enforce this.

    Returns a dict keyed by criterion name with {"applicable": bool,
    "reason": str, "verdict": {...} | None}.
    """
    d, k = spec.d, spec.k
    a1s = set(spec.a1_set)
    out: dict[str, dict] = {}

    # Criterion 1: a run of eps = max{a1, d - a_{k-1}} consecutive members of
    # A1 pins F1, F2; Cohen-Macaulayness reduces to two finite checks.
    eps = max(spec.a[0], d - spec.a[-2]) if k >= 2 else 1
    run_start = None
    for i in range(0, d - eps + 2):
        if all(i + t in a1s for t in range(eps)):
            run_start = i
            break
    if run_start is None:
        out["consecutive_run_cm"] = {
            "applicable": False,
            "reason": f"no run of {eps} consecutive members in A1",
            "verdict": None,
        }
    else:
        verdict = _consecutive_run_cm(spec, run_start, eps)
        out["consecutive_run_cm"] = {
            "applicable": True,
            "reason": f"run of length {eps} starting at {run_start}",
            "verdict": {"cm": verdict},
        }

    # Criterion 2: a1 = 1 with a block span >= last gap + 2 forces non-CM.
    gp = spec.gaps()
    lam_k = d - spec.a[-2] - 1
    applicable = False
    if spec.a[0] == 1 and gp.r >= 1:
        blocks = gp.blocks
        for j in range(1, gp.r + 1):
            b_2jm1 = blocks[j - 1][1]
            b_2jp1 = blocks[j][1]
            if b_2jp1 - b_2jm1 >= lam_k + 2:
                applicable = True
                break
    out["long_block_not_cm"] = {
        "applicable": applicable,
        "reason": "a1=1 and some block span exceeds last gap + 1"
        if applicable
        else "hypotheses not met",
        "verdict": {"cm": False} if applicable else None,
    }

    # Criterion 3: regularity 2 forces the Buchsbaum property.
    reg = first_cohomology(spec).reg
    out["reg2_buchsbaum"] = {
        "applicable": reg == 2,
        "reason": f"reg={reg}",
        "verdict": {"buchsbaum": True} if reg == 2 else None,
    }
    return out


def _consecutive_run_cm(spec: CurveSpec, i: int, eps: int) -> bool:
    d = spec.d
    a1s = set(spec.a1_set)
    ap1 = apery(spec.gen_set_1())
    ap2 = apery(spec.gen_set_2())
    two_a1 = {x + y for x in spec.a1_set for y in spec.a1_set}
    for x in range(0, i):
        if x in a1s:
            continue
        if ap1.contains(x):
            return False
        if (x + d) not in two_a1:
            return False
    for x in range(i + eps, d):
        if x in a1s:
            continue
        if ap2.contains(d - x):
            return False
        if x not in two_a1:
            return False
    return True
