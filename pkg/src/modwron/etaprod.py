"""Eta products, congruence-restricted q-products, and theta sums.

Builders for the named series used throughout: the Rogers-Ramanujan characters
ch1/ch2 (in both infinite-product and theta-over-eta form), the continued
fraction R(q), the weight-0 pair attached to level-2 theta functions, and the
eighth powers of the two half-integral Weber functions.
"""

from fractions import Fraction
from math import isqrt, lcm

from .qseries import QSeries

ONE_24TH = Fraction(1, 24)


class ProductSpec:
    """q^prefactor times a product of (1-q^n)^e over n > 0, n == r (mod m)."""

    def __init__(self, factors, prefactor=0):
        self.factors = []
        for r, m, e in factors:
            if m < 1 or not 0 <= r < m:
                raise ValueError("factor residue %r out of range mod %r" % (r, m))
            self.factors.append((int(r), int(m), int(e)))
        self.prefactor = Fraction(prefactor)


class ThetaSpec:
    """sum over n in Z of sign(n) * q^((A*n^2 + B*n)/2), with A > 0."""

    SIGNS = ("trivial", "alternating")

    def __init__(self, A, B, sign="trivial"):
        self.A = Fraction(A)
        self.B = Fraction(B)
        if self.A <= 0:
            raise ValueError("theta quadratic coefficient must be positive")
        if sign not in self.SIGNS:
            raise ValueError("sign must be one of %r" % (self.SIGNS,))
        self.sign = sign


def _int_window(N, h):
    """Number of integer-exponent slots known below absolute precision N."""
    w = Fraction(N) - h
    return max(-((-w.numerator) // w.denominator), 0)


def product_series(spec, N):
    """Expand a ProductSpec exactly, to absolute precision N."""
    N = Fraction(N)
    h = spec.prefactor
    L = _int_window(N, h)
    if L == 0:
        return QSeries.zero(N)
    c = [0] * L
    c[0] = 1
    for r, m, e in spec.factors:
        start = r if r else m
        for n in range(start, L, m):
            if e > 0:
                for _ in range(e):
                    for k in range(L - 1, n - 1, -1):
                        c[k] -= c[k - n]
            else:
                for _ in range(-e):
                    for k in range(n, L):
                        c[k] += c[k - n]
    return QSeries(h, c, 1, 1, N)


def _eta_unit(nslots):
    """Coefficients of prod(1-q^n) by the pentagonal number theorem."""
    c = [0] * nslots
    k = 0
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 >= nslots and e2 >= nslots:
            break
        s = 1 if k % 2 == 0 else -1
        if e1 < nslots:
            c[e1] += s
        if k and e2 < nslots:
            c[e2] += s
        k += 1
    return c


def eta(scale, N):
    """q-expansion of eta(scale * tau) = q^(scale/24) prod(1 - q^(scale*n))."""
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("eta scale must be positive")
    N = Fraction(N)
    base_prec = _int_window(N / scale, ONE_24TH) + 1
    base = QSeries(ONE_24TH, _eta_unit(base_prec), 1, 1, ONE_24TH + base_prec)
    return base.rescale(scale).truncate(N)


def theta_sum(spec, N):
    """Expand a ThetaSpec exactly, to absolute precision N."""
    N = Fraction(N)
    A, B = spec.A, spec.B
    alt = spec.sign == "alternating"
    R = isqrt(int(2 * N / A) + 1) + 2
    center = int(-B / (2 * A))
    terms = {}
    for n in range(center - R - 2, center + R + 3):
        e = (A * n * n + B * n) / 2
        if e < N:
            terms[e] = terms.get(e, 0) + (-1 if alt and n % 2 else 1)
    if not terms:
        return QSeries.zero(N)
    den = 1
    for e in terms:
        den = lcm(den, e.denominator)
    offset = min(terms)
    nums = [0] * (int((max(terms) - offset) * den) + 1)
    for e, c in terms.items():
        nums[int((e - offset) * den)] = c
    return QSeries(offset, nums, den, 1, N)


def _half_step_product(exponent_count, N):
    """prod over n>0 of (1 + q^(n - 1/2))^exponent_count on the half lattice."""
    slots = _int_window(2 * Fraction(N), 0)
    c = [0] * max(slots, 1)
    c[0] = 1
    for j in range(1, slots, 2):
        for _ in range(exponent_count):
            for k in range(slots - 1, j - 1, -1):
                c[k] += c[k - j]
    return QSeries(0, c, 2, 1, Fraction(N))


def _ch1(N, route):
    if route == "theta":
        t = theta_sum(ThetaSpec(5, 3, "alternating"), N + 1)
        return (QSeries.monomial(1, Fraction(9, 40)) * t / eta(1, N + 1)).truncate(N)
    return product_series(
        ProductSpec([(2, 5, -1), (3, 5, -1)], Fraction(11, 60)), N)


def _ch2(N, route):
    if route == "theta":
        t = theta_sum(ThetaSpec(5, 1, "alternating"), N + 1)
        return (QSeries.monomial(1, Fraction(1, 40)) * t / eta(1, N + 1)).truncate(N)
    return product_series(
        ProductSpec([(1, 5, -1), (4, 5, -1)], Fraction(-1, 60)), N)


def _rr_cf(N, route):
    return product_series(
        ProductSpec([(1, 5, 1), (4, 5, 1), (2, 5, -1), (3, 5, -1)],
                    Fraction(1, 5)), N)


def _a1_f1(N, route):
    t = theta_sum(ThetaSpec(2, 0), N + 1)
    return (t / eta(1, N + 1)).truncate(N)


def _a1_f2(N, route):
    t = theta_sum(ThetaSpec(2, 2), N + 1)
    return (QSeries.monomial(1, Fraction(1, 4)) * t / eta(1, N + 1)).truncate(N)


def _weber8_1(N, route):
    prod = _half_step_product(8, Fraction(N) + Fraction(1, 6))
    return (QSeries.monomial(1, Fraction(-1, 6)) * prod).truncate(N)


def _weber8_2(N, route):
    return product_series(
        ProductSpec([(0, 2, 8), (0, 1, -8)], Fraction(1, 3)), N)


_NAMED = {
    "ch1": _ch1,
    "ch2": _ch2,
    "rr_cf": _rr_cf,
    "a1_f1": _a1_f1,
    "a1_f2": _a1_f2,
    "weber8_1": _weber8_1,
    "weber8_2": _weber8_2,
}

NAMES = tuple(sorted(_NAMED))

_ROUTED = ("ch1", "ch2")


def named_series(name, N, route=None):
    """Build one of the named weight-0 series to absolute precision N.

    ch1 and ch2 admit route="product" (default) or route="theta"; the two
    constructions agree by the Jacobi triple product.
    """
    if name not in _NAMED:
        raise ValueError("unknown series %r (choose from %s)" % (name, ", ".join(NAMES)))
    if route is not None and name not in _ROUTED:
        raise ValueError("series %r has a single construction route" % name)
    if route not in (None, "product", "theta"):
        raise ValueError("route must be 'product' or 'theta'")
    return _NAMED[name](Fraction(N), route or "product")
