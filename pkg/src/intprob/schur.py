"""Schur and skew Schur function evaluation.

Two independent evaluation routes are kept side by side:

* bialternant ratio  det[x_i^(lam_j + N - j)] / prod_{i<j}(x_i - x_j),
  defined for pairwise distinct points;
* a determinant in complete homogeneous functions h_k (also used for all
  skew evaluations), which never degenerates and accepts arbitrary
  specializations.
"""

import math
from fractions import Fraction

import numpy as np

from . import partitions as pt
from .errors import ValidationError
from .specializations import Specialization


def schur_eval(lam, xs, method="auto"):
    """s_lam(x_1..x_N).  Falls back to the h-determinant at coincident points."""
    lam = pt.check_partition(lam)
    xs = list(xs)
    N = len(xs)
    if pt.length(lam) > N:
        return 0
    if not lam:
        return 1 if _exact_inputs(xs) else 1.0
    if method == "auto":
        method = "bialternant" if _pairwise_distinct(xs) else "jacobi-trudi"
    if method == "bialternant":
        if not _pairwise_distinct(xs):
            raise ValidationError("bialternant requires pairwise distinct points")
        return _bialternant(lam, xs)
    if method == "jacobi-trudi":
        return _jacobi_trudi_vars(lam, xs)
    raise ValidationError("unknown method %r" % (method,))


def _exact_inputs(xs):
    return all(isinstance(x, (int, Fraction)) for x in xs)


def _pairwise_distinct(xs):
    return len(set(xs)) == len(xs)


def _bialternant(lam, xs):
    N = len(xs)
    if _exact_inputs(xs):
        num = [[Fraction(xs[i]) ** (pt.part(lam, j + 1) + N - (j + 1))
                for j in range(N)] for i in range(N)]
        den = Fraction(1)
        for i in range(N):
            for j in range(i + 1, N):
                den *= Fraction(xs[i]) - Fraction(xs[j])
        return pt._fraction_det(num) / den
    xs = np.asarray(xs, dtype=complex)
    powers = np.array([pt.part(lam, j + 1) + N - (j + 1) for j in range(N)])
    num = xs[:, None] ** powers[None, :]
    den = 1.0
    for i in range(N):
        for j in range(i + 1, N):
            den *= xs[i] - xs[j]
    val = np.linalg.det(num) / den
    return val.real if abs(val.imag) < 1e-9 * (1 + abs(val.real)) else val


def h_values_from_vars(xs, deg):
    """h_0..h_deg of the variable list via Newton's identity k h_k = sum p_i h_{k-i}."""
    exact = _exact_inputs(xs)
    one = Fraction(1) if exact else (1.0 + 0j if any(isinstance(x, complex) for x in xs) else 1.0)
    hs = [one]
    ps = [None] + [sum((Fraction(x) if exact else x) ** k for x in xs) for k in range(1, deg + 1)]
    for k in range(1, deg + 1):
        acc = 0 * one
        for i in range(1, k + 1):
            acc += ps[i] * hs[k - i]
        hs.append(acc / k if exact else acc / k)
    return hs


def _jacobi_trudi_vars(lam, xs):
    deg = lam[0] + len(lam)  # matrix indices reach lam_1 + n - 1
    hs = h_values_from_vars(xs, deg)
    return _h_det(lam, (), hs)


def _h_det(lam, mu, hs):
    """det[h_(lam_i - mu_j - i + j)] of size max(len(lam), len(mu))."""
    n = max(pt.length(lam), pt.length(mu), 1)
    exact = isinstance(hs[0], Fraction)
    mat = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            k = pt.part(lam, i) - pt.part(mu, j) - i + j
            if 0 <= k < len(hs):
                row.append(hs[k])
            else:
                row.append(Fraction(0) if exact else 0.0)
        mat.append(row)
    if exact:
        return pt._fraction_det([[Fraction(v) for v in row] for row in mat])
    val = np.linalg.det(np.asarray(mat, dtype=complex))
    return val.real if abs(val.imag) < 1e-9 * (1 + abs(val.real)) else val


def skew_schur_spec(lam, mu, rho):
    """s_{lam/mu}(rho) for a nonnegative specialization rho.

    Determinant in the h_k(rho) series; returns 0 unless mu is contained
    in lam.  Exact when the Thoma parameters are rational.
    """
    lam = pt.check_partition(lam)
    mu = pt.check_partition(mu)
    if not pt.contains(lam, mu):
        return 0
    if lam == mu:
        return 1
    deg = (lam[0] if lam else 0) + max(len(lam), len(mu), 1)
    hs = rho.h_series(deg)
    return _h_det(lam, mu, hs)


def schur_spec(lam, rho):
    return skew_schur_spec(lam, (), rho)


def skew_schur_vars(lam, mu, xs):
    """s_{lam/mu}(x_1..x_N) through the same h-determinant route."""
    lam = pt.check_partition(lam)
    mu = pt.check_partition(mu)
    if not pt.contains(lam, mu):
        return 0
    if lam == mu:
        return 1 if _exact_inputs(xs) else 1.0
    hs = h_values_from_vars(xs, lam[0])
    return _h_det(lam, mu, hs)


def ssyt_weight_enumerate(lam, xs):
    """Brute-force s_lam as a sum over semistandard tableaux (test oracle)."""
    lam = pt.check_partition(lam)
    N = len(xs)
    if pt.length(lam) > N:
        return 0
    if not lam:
        return 1
    rows = len(lam)
    total = [0]

    def fill(r, c, tab, weight):
        if r == rows:
            total[0] += weight
            return
        if c == lam[r]:
            fill(r + 1, 0, tab, weight)
            return
        lo = 1
        if c > 0:
            lo = max(lo, tab[r][c - 1])
        if r > 0:
            lo = max(lo, tab[r - 1][c] + 1)
        for v in range(lo, N + 1):
            tab[r][c] = v
            fill(r, c + 1, tab, weight * xs[v - 1])

    tab = [[0] * lam[r] for r in range(rows)]
    fill(0, 0, tab, 1)
    return total[0]


def plancherel_weight(lam, theta):
    """exp(-theta^2) * (theta^{|lam|} dim(lam) / |lam|!)^2 as a float."""
    lam = pt.check_partition(lam)
    n = pt.size(lam)
    d = pt.dim_std(lam)
    return math.exp(-theta * theta) * (theta ** n * d / math.factorial(n)) ** 2


def gamma_spec(theta):
    """Specialization with the single parameter gamma = theta."""
    return Specialization(gamma=theta)


def alpha_spec(*alphas):
    return Specialization(alphas=alphas)


def beta_spec(*betas):
    return Specialization(betas=betas)
