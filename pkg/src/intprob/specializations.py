"""Nonnegative specializations of the symmetric-function algebra.

A specialization is an algebra morphism determined by its values on the
power sums.  The positive ones are parameterized by a triple
(alpha-sequence, beta-sequence, gamma); evaluating a finite variable list
(x_1..x_N) is the special case alpha=(x_1..x_N), beta=(), gamma=0.

Generator values h_k are obtained by expanding

    sum_k h_k z^k  =  exp(gamma z) * prod_i (1 + beta_i z) / (1 - alpha_i z)

as a power series; coefficients stay exact rationals whenever the
parameters are rational.
"""

import math
from fractions import Fraction

from .errors import ValidationError

# largest power-sum index used when summing exp(sum p_k p_k / k) type series
_PAIR_SERIES_TOL = 1e-18
_PAIR_SERIES_MAXK = 4000


class Specialization:
    """Thoma triple (alphas, betas, gamma), all parameters >= 0."""

    def __init__(self, alphas=(), betas=(), gamma=0):
        alphas = tuple(alphas)
        betas = tuple(betas)
        if any(a < 0 for a in alphas) or any(b < 0 for b in betas) or gamma < 0:
            raise ValidationError("specialization parameters must be nonnegative")
        # drop zeros, keep weakly decreasing order
        self.alphas = tuple(sorted((a for a in alphas if a > 0), reverse=True))
        self.betas = tuple(sorted((b for b in betas if b > 0), reverse=True))
        self.gamma = gamma

    @classmethod
    def from_variables(cls, xs):
        return cls(alphas=xs)

    @classmethod
    def trivial(cls):
        return cls()

    def is_trivial(self):
        return not self.alphas and not self.betas and self.gamma == 0

    def p(self, k):
        """Power-sum value p_k."""
        if k < 1:
            raise ValidationError("power sum index must be >= 1")
        val = sum(a ** k for a in self.alphas)
        val += (-1) ** (k - 1) * sum(b ** k for b in self.betas)
        if k == 1:
            val += self.gamma
        return val

    def decay_radius(self):
        """r with |p_k| <= C r^k; 0 for a pure-gamma specialization."""
        r = 0
        if self.alphas:
            r = max(r, self.alphas[0])
        if self.betas:
            r = max(r, self.betas[0])
        return r

    def h(self, k):
        return self.h_series(k)[k]

    def h_series(self, deg):
        """h_0..h_deg as a list, exact when parameters are rational."""
        one = Fraction(1) if self._is_rational() else 1.0
        series = [one] + [0 * one] * deg
        if self.gamma:
            g = [self.gamma ** k / (Fraction(math.factorial(k)) if self._is_rational()
                                    else float(math.factorial(k)))
                 for k in range(deg + 1)]
            series = _mul_trunc(series, g, deg)
        for b in self.betas:
            series = _mul_trunc(series, [one, b] + [0 * one] * max(0, deg - 1), deg)
        for a in self.alphas:
            geo = [a ** k for k in range(deg + 1)]
            series = _mul_trunc(series, geo, deg)
        return series

    def union(self, other):
        """Specialization with p_k = p_k(self) + p_k(other)."""
        return Specialization(self.alphas + other.alphas,
                              self.betas + other.betas,
                              self.gamma + other.gamma)

    def _is_rational(self):
        vals = list(self.alphas) + list(self.betas) + [self.gamma]
        return all(isinstance(v, (int, Fraction)) for v in vals)

    def to_json(self):
        return {"alpha": [_num(a) for a in self.alphas],
                "beta": [_num(b) for b in self.betas],
                "gamma": _num(self.gamma)}

    @classmethod
    def from_json(cls, obj):
        return cls(obj.get("alpha", ()), obj.get("beta", ()), obj.get("gamma", 0))

    def __repr__(self):
        return "Specialization(alphas=%r, betas=%r, gamma=%r)" % (
            self.alphas, self.betas, self.gamma)

    def __eq__(self, other):
        return (isinstance(other, Specialization)
                and self.alphas == other.alphas
                and self.betas == other.betas
                and self.gamma == other.gamma)


def _num(v):
    return float(v) if isinstance(v, Fraction) else v


def _mul_trunc(a, b, deg):
    out = [0 * (a[0] * b[0])] * (deg + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(0, deg + 1 - i):
            if b[j] != 0:
                out[i + j] += ai * b[j]
    return out


def union(*specs):
    out = Specialization()
    for s in specs:
        out = out.union(s)
    return out


def pair_H(rho1, rho2, tol=_PAIR_SERIES_TOL):
    """H(rho1; rho2) = exp(sum_k p_k(rho1) p_k(rho2) / k).

    Equals sum over partitions of s_lam(rho1) s_lam(rho2).  Raises on pairs
    whose geometric decay bound allows divergence (r1 * r2 >= 1).
    """
    r1, r2 = rho1.decay_radius(), rho2.decay_radius()
    if r1 * r2 >= 1:
        raise ValidationError(
            "divergent specialization pair: alpha/beta radii %g * %g >= 1" % (r1, r2))
    total = rho1.p(1) * rho2.p(1)
    ratio = float(r1 * r2)
    k = 2
    while True:
        if not rho1.alphas and not rho1.betas:
            break  # pure gamma: only p_1 is non-zero
        if not rho2.alphas and not rho2.betas:
            break
        term = rho1.p(k) * rho2.p(k) / k
        total += term
        if ratio ** k < tol * max(1.0, abs(float(total))):
            break
        if k > _PAIR_SERIES_MAXK:
            raise ValidationError("pair_H series did not close below tolerance")
        k += 1
    return math.exp(total)


def log_pair_H(rho1, rho2):
    return math.log(pair_H(rho1, rho2))
