"""Integer partitions (Young diagrams) and their exact combinatorics.

Partitions are plain tuples of positive ints, weakly decreasing, with
implicit trailing zeros; the empty partition is ``()``.  All counting
quantities (partition enumeration, tableau dimensions) are exact integers.
"""

import math
from fractions import Fraction

from .errors import BudgetError, ValidationError

ENUMERATION_CAP = 40
DIM_CAP = 25


def check_partition(lam):
    """Validate and normalize a partition-like iterable to a tuple."""
    lam = tuple(int(x) for x in lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(x <= 0 for x in lam):
        raise ValidationError("partition rows must be positive: %r" % (lam,))
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValidationError("partition rows must weakly decrease: %r" % (lam,))
    return lam


def size(lam):
    return sum(lam)


def length(lam):
    return len(lam)


def part(lam, i):
    """Row i (1-based) with implicit trailing zeros."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam):
    """Transposed diagram: column lengths of lam."""
    if not lam:
        return ()
    out = []
    for j in range(1, lam[0] + 1):
        out.append(sum(1 for x in lam if x >= j))
    return tuple(out)


def contains(lam, mu):
    """Whether mu sits inside lam row by row."""
    return all(part(lam, i) >= part(mu, i) for i in range(1, len(mu) + 1))


def is_horizontal_strip(lam, mu):
    """lam/mu has at most one box per column."""
    if not contains(lam, mu):
        return False
    lamc, muc = conjugate(lam), conjugate(mu)
    return all(part(lamc, j) - part(muc, j) in (0, 1) for j in range(1, len(lamc) + 1))


def is_vertical_strip(lam, mu):
    """lam/mu has at most one box per row."""
    if not contains(lam, mu):
        return False
    return all(part(lam, i) - part(mu, i) in (0, 1) for i in range(1, len(lam) + 1))


def interlaces(mu, lam):
    """mu `prec` lam: lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...  (horizontal strip)."""
    n = max(len(lam), len(mu))
    for i in range(1, n + 1):
        if not (part(lam, i) >= part(mu, i) >= part(lam, i + 1)):
            return False
    return True


def partitions_of(n, max_len=None, cap=ENUMERATION_CAP):
    """All partitions of n in reverse-lexicographic order, each exactly once.

    Optional max_len bounds the number of rows.  Raises BudgetError past
    the enumeration cap (default 40).
    """
    if n < 0:
        raise ValidationError("n must be nonnegative")
    if n > cap:
        raise BudgetError("partitions_of(%d) exceeds cap %d" % (n, cap))
    out = []
    for lam in _gen_partitions(n):
        if max_len is None or len(lam) <= max_len:
            out.append(lam)
    return out


def _gen_partitions(n):
    # descending-lex generation: (n), (n-1,1), ..., (1,...,1)
    if n == 0:
        yield ()
        return
    lam = [n]
    yield (n,)
    while True:
        i = len(lam) - 1
        while i >= 0 and lam[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(lam) - i - 1  # number of trailing ones
        lam[i] -= 1
        rem += 1
        del lam[i + 1:]
        while rem > 0:
            nxt = min(lam[-1], rem)
            lam.append(nxt)
            rem -= nxt
        yield tuple(lam)


def partitions_up_to(n, max_len=None, cap=ENUMERATION_CAP):
    """All partitions of size <= n, reverse-lex within each size."""
    out = []
    for m in range(n + 1):
        out.extend(partitions_of(m, max_len=max_len, cap=cap))
    return out


def partition_count(n):
    """Number of partitions of n via Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def dim_std(lam, cap=DIM_CAP):
    """Number of standard Young tableaux of shape lam, exact.

    Computed as |lam|! * det[1/(lam_i - i + j)!]; exact rational arithmetic
    throughout, so the result is an exact int.
    """
    lam = check_partition(lam)
    n = size(lam)
    if n > cap:
        raise BudgetError("dim_std for |lam|=%d exceeds cap %d" % (n, cap))
    if not lam:
        return 1
    ell = len(lam)
    mat = [[Fraction(0)] * ell for _ in range(ell)]
    for i in range(ell):
        for j in range(ell):
            k = lam[i] - (i + 1) + (j + 1)
            mat[i][j] = Fraction(1, math.factorial(k)) if k >= 0 else Fraction(0)
    d = _fraction_det(mat) * math.factorial(n)
    if d.denominator != 1 or d < 0:
        raise ValidationError("non-integer tableau count for %r" % (lam,))
    return int(d)


def dim_std_enumerate(lam):
    """Brute-force standard-tableau count by growing the diagram box by box.

    Independent oracle for dim_std; exponential, keep |lam| small.
    """
    lam = check_partition(lam)

    def count(mu):
        if mu == lam:
            return 1
        total = 0
        ell = len(mu)
        for i in range(ell + 1):
            row = part(mu, i + 1) + 1
            if row > part(lam, i + 1):
                continue
            if i > 0 and row > part(mu, i):
                continue
            nxt = list(mu) + [0] * (i + 1 - ell)
            nxt[i] += 1
            total += count(tuple(x for x in nxt if x > 0))
        return total

    return count(())


def dim_ssyt(lam, N):
    """Number of semistandard tableaux of shape lam with entries <= N.

    Exact integer determinant det[C(N + k - 1, k)] over k = lam_i - i + j.
    """
    lam = check_partition(lam)
    if N < 0:
        raise ValidationError("N must be nonnegative")
    if not lam:
        return 1
    if len(lam) > N:
        return 0
    ell = len(lam)
    mat = [[Fraction(0)] * ell for _ in range(ell)]
    for i in range(ell):
        for j in range(ell):
            k = lam[i] - (i + 1) + (j + 1)
            mat[i][j] = Fraction(math.comb(N + k - 1, k)) if k >= 0 else Fraction(0)
    d = _fraction_det(mat)
    if d.denominator != 1:
        raise ValidationError("non-integer tableau count for %r" % (lam,))
    return int(d)


def ssyt_enumerate(lam, N):
    """Brute-force semistandard tableau count (oracle for dim_ssyt)."""
    lam = check_partition(lam)
    if not lam:
        return 1

    rows = len(lam)

    def fill(r, c, tab):
        if r == rows:
            return 1
        if c == lam[r]:
            return fill(r + 1, 0, tab)
        lo = 1
        if c > 0:
            lo = max(lo, tab[r][c - 1])
        if r > 0:
            lo = max(lo, tab[r - 1][c] + 1)
        total = 0
        for v in range(lo, N + 1):
            tab[r][c] = v
            total += fill(r, c + 1, tab)
        return total

    tab = [[0] * lam[r] for r in range(rows)]
    return fill(0, 0, tab)


def _fraction_det(mat):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    m = [row[:] for row in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = Fraction(1) / m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] * inv
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def to_point_config(lam, n_points=None):
    """Half-integer particle positions {lam_i - i + 1/2}.

    Returns the n_points largest positions (default: length of lam plus one,
    enough to see the first hole).
    """
    lam = check_partition(lam)
    if n_points is None:
        n_points = len(lam) + 1
    return tuple(part(lam, i) - i + Fraction(1, 2) for i in range(1, n_points + 1))


def occupied(lam, site):
    """Whether half-integer site belongs to the point configuration of lam."""
    s = Fraction(site) - Fraction(1, 2)  # integer coordinate m: site = m + 1/2
    if s.denominator != 1:
        raise ValidationError("site must be a half-integer: %r" % (site,))
    m = int(s)
    # lam_i - i = m for some i >= 1
    for i in range(1, len(lam) + 1):
        if lam[i - 1] - i == m:
            return True
    # beyond stored rows lam_i = 0, so sites -i + 1/2 for i > len(lam)
    return m < -len(lam)
