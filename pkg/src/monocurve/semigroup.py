"""Numerical semigroups: Apery sets, Frobenius numbers, degrees and gaps.

All arithmetic is exact integer arithmetic.  The "not in semigroup" /
"degree infinite" outcome is represented by ``None`` at every public
boundary; numeric sentinels used inside the propagation loops never escape.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction  # noqa: F401  (re-exported convenience for callers)
from functools import lru_cache
from math import gcd

from .errors import InputError


@dataclass(frozen=True)
class GeneratorSet:
    """A coprime, strictly increasing tuple of positive generators.

    ``modulus`` is the generator the Apery set is taken against; it defaults
    to the largest generator and must be a member of ``gens``.
    """

    gens: tuple[int, ...]
    modulus: int = 0  # 0 means "use the largest generator"

    def __post_init__(self):
        gens = tuple(int(g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        if len(gens) < 2:
            raise InputError(f"need at least 2 generators, got {gens!r}")
        if gens[0] <= 0:
            raise InputError(f"generators must be positive, got {gens!r}")
        if any(a >= b for a, b in zip(gens, gens[1:])):
            raise InputError(f"generators must be strictly increasing, got {gens!r}")
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g != 1:
            raise InputError(f"generators must be coprime, gcd={g} for {gens!r}")
        m = self.modulus if self.modulus else gens[-1]
        if m not in gens:
            raise InputError(f"modulus {m} is not a generator of {gens!r}")
        object.__setattr__(self, "modulus", m)

    @property
    def k(self) -> int:
        return len(self.gens)


@dataclass(frozen=True)
class AperyTable:
    """Per residue class i mod ``modulus``: the least member omega[i] of the
    semigroup in that class, and deg[i], its minimal coefficient sum."""

    modulus: int
    omega: tuple[int, ...]
    deg: tuple[int, ...]

    def frobenius(self) -> int:
        return max(self.omega) - self.modulus

    def contains(self, n: int) -> bool:
        return n >= 0 and self.omega[n % self.modulus] <= n


@dataclass(frozen=True)
class DegreeTable:
    """Degrees delta(i + j*d) on the grid 0 <= i < d, filled for every value
    whose degree is at most ``max_level``.  Missing cells mean "not in the
    semigroup, or degree above max_level"."""

    d: int
    max_level: int
    entries: dict[tuple[int, int], int] = field(compare=False)

    def get(self, i: int, j: int) -> int | None:
        return self.entries.get((i, j))


@dataclass(frozen=True)
class GapProfile:
    """Gap statistics of the sequence 0 = a0 < a1 < ... < ak.

    ``lambda_sl`` is the second largest gap with one occurrence of the
    maximum removed, so a doubly attained maximum gives lambda_sl ==
    lambda_max.  ``blocks`` is the decomposition of {0, a1, ..., ak} into
    maximal intervals of consecutive integers.
    """

    lambdas: tuple[int, ...]
    lambda_max: int
    lambda_sl: int
    blocks: tuple[tuple[int, int], ...]

    @property
    def r(self) -> int:
        """Number of non-zero gaps."""
        return len(self.blocks) - 1


@lru_cache(maxsize=None)
def apery(A: GeneratorSet) -> AperyTable:
    """Apery set and degree vector by frontier propagation.

    Each round n combines the current frontier with every generator below
    the modulus; a residue cell is overwritten only by a strictly smaller
    value, so the fixpoint is order independent.  Iteration is in ascending
    order for reproducible traces.
    """
    m = A.modulus
    small = [g for g in A.gens if g != m]
    # Any omega(i) is at most F + m <= (a1-1)(ak-1) - 1 + m, so this value
    # can never be a true table entry.
    inf_val = (A.gens[0] - 1) * (A.gens[-1] - 1) + m + 1
    ap = [inf_val] * m
    dg = [0] * m
    ap[0] = 0
    for g in A.gens:
        i = g % m
        if i and g < ap[i]:
            ap[i] = g
            dg[i] = 1
    front = sorted(set(small))
    n = 1
    while front:
        n += 1
        new = []
        for y in front:
            for a in small:
                s = a + y
                i = s % m
                if s < ap[i]:
                    ap[i] = s
                    dg[i] = n
                    new.append(s)
        front = sorted(set(new))
    # gcd == 1 guarantees every residue class is eventually hit
    assert inf_val not in ap
    return AperyTable(modulus=m, omega=tuple(ap), deg=tuple(dg))


def frobenius(A: GeneratorSet) -> int:
    """Largest integer not in the semigroup; -1 when 1 is a generator."""
    return apery(A).frobenius()


def membership(A: GeneratorSet, n: int) -> bool:
    """True iff n is a non-negative combination of the generators."""
    return apery(A).contains(n)


def degree(A: GeneratorSet, n: int) -> int | None:
    """Minimum coefficient sum representing n, or None if n is not in the
    semigroup.  Recursive rule: delta(n) = 1 + min delta(n - a_i)."""
    if n < 0:
        raise InputError(f"degree is defined for n >= 0, got {n}")
    table = _degree_prefix(A.gens, n)
    return table[n]


def _degree_prefix(gens: tuple[int, ...], n: int) -> list[int | None]:
    table: list[int | None] = [None] * (n + 1)
    table[0] = 0
    for x in range(1, n + 1):
        best = None
        for a in gens:
            if a > x:
                break
            prev = table[x - a]
            if prev is not None and (best is None or prev + 1 < best):
                best = prev + 1
        table[x] = best
    return table


def degree_table(A: GeneratorSet, max_level: int) -> DegreeTable:
    """Degrees of all semigroup elements of degree <= max_level, keyed by
    (residue, quotient) against d = max generator.

    Level-by-level propagation: the frontier at level n holds exactly the
    elements of degree n, and each cell is written once.
    """
    if A.modulus != A.gens[-1]:
        raise InputError("degree_table requires the modulus to be the top generator")
    d = A.modulus
    entries: dict[tuple[int, int], int] = {(0, 0): 0}
    for g in A.gens:
        entries.setdefault((g % d, g // d), 1)
    front = sorted(set(A.gens))
    n = 1
    while n < max_level and front:
        n += 1
        new = []
        for y in front:
            for a in A.gens:
                s = y + a
                key = (s % d, s // d)
                if key not in entries:
                    entries[key] = n
                    new.append(s)
        front = sorted(set(new))
    return DegreeTable(d=d, max_level=max_level, entries=entries)


def gap_profile(A: GeneratorSet) -> GapProfile:
    """Gaps of the sequence with 0 prepended, plus the block decomposition."""
    return gap_profile_of(A.gens)


def gap_profile_of(seq: tuple[int, ...]) -> GapProfile:
    full = (0,) + tuple(seq)
    lambdas = tuple(b - a - 1 for a, b in zip(full, full[1:]))
    lam_max = max(lambdas)
    rest = list(lambdas)
    rest.remove(lam_max)
    lam_sl = max(rest) if rest else 0
    blocks = []
    start = prev = full[0]
    for x in full[1:]:
        if x == prev + 1:
            prev = x
        else:
            blocks.append((start, prev))
            start = prev = x
    blocks.append((start, prev))
    return GapProfile(
        lambdas=lambdas, lambda_max=lam_max, lambda_sl=lam_sl, blocks=tuple(blocks)
    )
