"""Deliberately simple brute-force counterparts of every fast algorithm.

Used only by tests and the CLI --verify flag.  No code is shared with the
fast paths beyond the input types; range guards are hard errors, never
silent truncation.
"""

from __future__ import annotations

from .curve import CurveSpec
from .errors import RangeError
from .semigroup import AperyTable, GeneratorSet

MEMBERSHIP_LIMIT = 10**6
APERY_MODULUS_LIMIT = 200
DEGREE_LIMIT = 10**4
SIGMA_CELL_LIMIT = 10**7


def _member_table(gens: tuple[int, ...], upto: int) -> list[bool]:
    table = [False] * (upto + 1)
    table[0] = True
    for x in range(1, upto + 1):
        for g in gens:
            if g <= x and table[x - g]:
                table[x] = True
                break
    return table


def bf_membership(A: GeneratorSet, n: int) -> bool:
    if n < 0:
        return False
    if n > MEMBERSHIP_LIMIT:
        raise RangeError(f"bf_membership limited to n <= {MEMBERSHIP_LIMIT}")
    return _member_table(A.gens, n)[n]


def bf_degree(A: GeneratorSet, n: int) -> int | None:
    """Exhaustive search over coefficient vectors; None when no
    representation exists."""
    if n < 0 or n > DEGREE_LIMIT:
        raise RangeError(f"bf_degree limited to 0 <= n <= {DEGREE_LIMIT}")
    return _bf_degree_rec(tuple(sorted(A.gens, reverse=True)), n)


def _bf_degree_rec(
    gens_desc: tuple[int, ...], n: int, bound: int | None = None
) -> int | None:
    """Minimum coefficient count representing n, searching every coefficient
    vector; counts >= bound are discarded.  Branches with a coefficient-count
    lower bound already at or above the best found are cut; descending
    coefficients of the largest generator make the cut a clean break since
    the remaining-count lower bound only grows as that coefficient drops."""
    if n == 0:
        return 0
    g = gens_desc[0]
    if len(gens_desc) == 1:
        q, r = divmod(n, g)
        if r != 0 or (bound is not None and q >= bound):
            return None
        return q
    nxt = gens_desc[1]
    best = bound
    found = None
    for x in range(n // g, -1, -1):
        rem = n - x * g
        if best is not None and x + (rem + nxt - 1) // nxt >= best:
            break
        sub = _bf_degree_rec(gens_desc[1:], rem, None if best is None else best - x)
        if sub is not None:
            found = x + sub
            best = found
    return found


def bf_frobenius(A: GeneratorSet) -> int:
    """Scan membership up to Schur's range and report the largest gap."""
    a1, ak = A.gens[0], A.gens[-1]
    if ak > APERY_MODULUS_LIMIT:
        raise RangeError(f"bf_frobenius limited to max generator <= {APERY_MODULUS_LIMIT}")
    upto = max((a1 - 1) * (ak - 1), 0) + 1
    table = _member_table(A.gens, upto)
    frob = -1
    for x in range(upto + 1):
        if not table[x]:
            frob = x
    return frob


def bf_apery(A: GeneratorSet) -> AperyTable:
    """Per residue class, scan upward for the least member, then search its
    degree exhaustively."""
    m = A.modulus
    if m > APERY_MODULUS_LIMIT:
        raise RangeError(f"bf_apery limited to modulus <= {APERY_MODULUS_LIMIT}")
    upto = max((A.gens[0] - 1) * (A.gens[-1] - 1), 0) + m + 1
    table = _member_table(A.gens, upto)
    omega = []
    deg = []
    for i in range(m):
        n = i
        while not table[n]:
            n += m
        omega.append(n)
        deg.append(_bf_degree_rec(tuple(sorted(A.gens, reverse=True)), n))
    return AperyTable(modulus=m, omega=tuple(omega), deg=tuple(deg))


def bf_sprime_minus_s(spec: CurveSpec) -> set[tuple[int, int]]:
    """Exact S' \\ S by enumerating w_i + (n1*d, n2*d) and testing
    S-membership through brute-force component degrees."""
    d = spec.d
    if d > 60:
        raise RangeError("bf_sprime_minus_s limited to d <= 60")
    ap1 = bf_apery(spec.gen_set_1())
    ap2 = bf_apery(spec.gen_set_2())
    gens1_desc = tuple(sorted(spec.a, reverse=True))
    out: set[tuple[int, int]] = set()
    for i in range(1, d):
        w1 = ap1.omega[i]
        w2 = ap2.omega[(d - i) % d]
        deg = (w1 + w2) // d
        # u = w_i + (n1 d, n2 d) leaves S' \ S once delta exceeds deg
        for n1 in range(max(ap2.deg[(d - i) % d] - deg, 0)):
            d1v = _bf_degree_rec(gens1_desc, w1 + n1 * d)
            for n2 in range(max(d1v - deg - n1, 0)):
                out.add((w1 + n1 * d, w2 + n2 * d))
    return out


def bf_sigma(a) -> int:
    """Sumset regularity straight from the definition: grow hA as plain
    sets up to the stabilization threshold, read the stabilized head and
    tail off the final sumset, and find the last h where the three-part
    decomposition fails."""
    pts = tuple(sorted(set(int(x) for x in a) | {0}))
    d = pts[-1]
    k = len(pts) - 1
    h_max = max(1, (k - 1) * (d - 1) * d)
    if h_max * d > SIGMA_CELL_LIMIT:
        raise RangeError(f"bf_sigma limited to h_max * d <= {SIGMA_CELL_LIMIT}")
    sums = [None, set(pts)]
    for h in range(2, h_max + 1):
        prev = sums[h - 1]
        sums.append({x + y for x in prev for y in pts})
    final = sums[h_max]
    top = h_max * d
    # stabilized head: everything below the first persistent hole is fixed
    half = top // 2
    missing_low = [x for x in range(half + 1) if x not in final]
    c1 = (max(missing_low) + 1) if missing_low else 0
    c1_set = {x for x in final if x < c1}
    missing_high = [top - x for x in range(top - half, top + 1) if x not in final]
    c2 = (max(missing_high) + 1) if missing_high else 0
    c2_set = {top - x for x in final if x > top - c2}
    last_fail = 0
    for h in range(1, h_max + 1):
        hd = h * d
        if hd - c2 < c1 - 1:  # head and tail must meet the middle interval
            last_fail = h
            continue
        mid = set(range(c1, hd - c2 + 1))
        tail = {hd - x for x in c2_set}
        parts_disjoint = (
            not (c1_set & mid) and not (c1_set & tail) and not (mid & tail)
        )
        if not (parts_disjoint and sums[h] == c1_set | mid | tail):
            last_fail = h
    return last_fail + 1
