"""The graded ring of level-one modular forms as polynomials in E4 and E6.

Provides Eisenstein q-expansions, the weight-raising theta derivation (both
on the polynomial ring and on q-series), identification of q-series as
modular forms, and divisor polynomials on the j-line.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .qseries import DEFAULT_PREC, QSeries, first_mismatch


@lru_cache(maxsize=None)
def bernoulli(n):
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(n):
        acc += comb(n + 1, j) * bernoulli(j)
    return -acc / (n + 1)


def _ceil_int(x):
    x = Fraction(x)
    return -((-x.numerator) // x.denominator)


@lru_cache(maxsize=None)
def _eis_e(k, slots):
    """E_k to `slots` integer coefficients, E-normalized (constant term 1)."""
    sig = [0] * slots
    for d in range(1, slots):
        dk = d ** (k - 1)
        for n in range(d, slots, d):
            sig[n] += dk
    factor = Fraction(2 * k) / bernoulli(k)
    coeffs = [Fraction(1)] + [-factor * sig[n] for n in range(1, slots)]
    return QSeries.from_fractions(0, coeffs, 1, slots)


def eisenstein(k, normalization="E", N=DEFAULT_PREC):
    """q-expansion of the weight-k Eisenstein series.

    E-normalization has constant term 1; G-normalization is scaled by
    -B_k/k! (so G2 = -E2/12, G4 = E4/720, G6 = -E6/30240).
    """
    if k < 2 or k % 2:
        raise ValueError("Eisenstein weight must be even and at least 2")
    norm = normalization.upper()
    if norm not in ("E", "G"):
        raise ValueError("normalization must be 'E' or 'G'")
    N = Fraction(N)
    series = _eis_e(k, max(_ceil_int(N), 1)).truncate(N)
    if norm == "G":
        series = series * (-bernoulli(k) / Fraction(_factorial(k)))
    return series


@lru_cache(maxsize=None)
def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


class MFPoly:
    """Isobaric polynomial in E4 and E6: a dict (a, b) -> coefficient.

    Coefficients are normally Fractions but any commutative ring element
    supporting +, *, unary -, == and truthiness works (used for polynomial
    coefficients in a formal parameter).
    """

    __slots__ = ("weight", "terms")

    def __init__(self, weight, terms=None):
        self.weight = weight
        clean = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError("negative generator exponent (%r, %r)" % (a, b))
            if 4 * a + 6 * b != weight:
                raise ValueError(
                    "monomial E4^%d E6^%d has weight %d, not %d"
                    % (a, b, 4 * a + 6 * b, weight))
            if c:
                clean[(a, b)] = c
        self.terms = clean

    @classmethod
    def zero(cls, weight=0):
        return cls(weight, {})

    @classmethod
    def monomial(cls, coeff, a, b):
        return cls(4 * a + 6 * b, {(a, b): coeff})

    @classmethod
    def constant(cls, c):
        return cls(0, {(0, 0): c})

    def is_zero(self):
        return not self.terms

    def map_coeffs(self, fn):
        """New MFPoly of the same weight with fn applied to every coefficient."""
        return MFPoly(self.weight, {k: fn(c) for k, c in self.terms.items()})

    def __neg__(self):
        return MFPoly(self.weight, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MFPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.weight != other.weight:
            raise ValueError(
                "cannot add forms of weights %d and %d" % (self.weight, other.weight))
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return MFPoly(self.weight, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MFPoly):
            out = {}
            for (a1, b1), c1 in self.terms.items():
                for (a2, b2), c2 in other.terms.items():
                    k = (a1 + a2, b1 + b2)
                    p = c1 * c2
                    out[k] = out[k] + p if k in out else p
            return MFPoly(self.weight + other.weight, out)
        return MFPoly(self.weight, {k: c * other for k, c in self.terms.items()})

    def __rmul__(self, other):
        return MFPoly(self.weight, {k: other * c for k, c in self.terms.items()})

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a ring element")
        out = MFPoly.constant(Fraction(1))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, MFPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.weight == other.weight and self.terms == other.terms

    def __hash__(self):
        return hash((self.weight, tuple(sorted(self.terms.items()))))

    def _fmt_term(self, a, b, c):
        gens = []
        if a:
            gens.append("E4" if a == 1 else "E4^%d" % a)
        if b:
            gens.append("E6" if b == 1 else "E6^%d" % b)
        if not gens:
            return str(c)
        if c == 1:
            return "*".join(gens)
        if c == -1:
            return "-" + "*".join(gens)
        return "*".join([str(c)] + gens)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda ab: (-ab[0], -ab[1])):
            piece = self._fmt_term(a, b, self.terms[(a, b)])
            if parts and not piece.startswith("-"):
                parts.append("+ " + piece)
            elif parts:
                parts.append("- " + piece[1:])
            else:
                parts.append(piece)
        return " ".join(parts)

    def __repr__(self):
        return "MFPoly(weight=%d: %s)" % (self.weight, self)


E4 = MFPoly.monomial(Fraction(1), 1, 0)
E6 = MFPoly.monomial(Fraction(1), 0, 1)
DELTA = MFPoly(12, {(3, 0): Fraction(1, 1728), (0, 2): Fraction(-1, 1728)})
G4 = MFPoly.monomial(Fraction(1, 720), 1, 0)
G6 = MFPoly.monomial(Fraction(-1, 30240), 0, 1)


def theta_derivation(p):
    """The derivation -(E6/3)d/dE4 - (E4^2/2)d/dE6, weight w -> w+2."""
    out = {}
    for (a, b), c in p.terms.items():
        if a:
            k = (a - 1, b + 1)
            v = c * Fraction(-a, 3)
            out[k] = out[k] + v if k in out else v
        if b:
            k = (a + 2, b - 1)
            v = c * Fraction(-b, 2)
            out[k] = out[k] + v if k in out else v
    return MFPoly(p.weight + 2, out)


@lru_cache(maxsize=None)
def _gen_pow(k, e, slots):
    if e == 0:
        return QSeries.one(slots)
    return _gen_pow(k, e - 1, slots) * _eis_e(k, slots)


def to_qseries(p, N=DEFAULT_PREC):
    """q-expansion of an MFPoly with rational coefficients, precision N."""
    N = Fraction(N)
    slots = max(_ceil_int(N), 1)
    out = QSeries.zero(N)
    for (a, b), c in sorted(p.terms.items()):
        out = out + Fraction(c) * (_gen_pow(4, a, slots) * _gen_pow(6, b, slots))
    return out.truncate(N)


def delta_std(N=DEFAULT_PREC):
    """The monic cusp form (E4^3 - E6^2)/1728 = q prod(1-q^n)^24."""
    return to_qseries(DELTA, N)


def j_series(N=DEFAULT_PREC):
    """j = E4^3 / delta_std = q^-1 + 744 + 196884q + ..."""
    N = Fraction(N)
    num = to_qseries(E4 ** 3, N + 2)
    return (num / delta_std(N + 2)).truncate(N)


def theta_h(y, h, N=None):
    """Weight-h Serre-type derivative q d/dq + h*G2, acting on a q-series."""
    if y.is_zero():
        return y if N is None else y.truncate(N)
    h = Fraction(h)
    val = y.valuation()
    target = Fraction(N) if N is not None else y.prec
    if target is None:
        target = val + DEFAULT_PREC
    out = y.derive()
    if h:
        g2 = eisenstein(2, "G", target - val + 1)
        out = out + h * (g2 * y)
    return out.truncate(target)


def theta_power(y, j, N=None):
    """Iterated theta on a weight-0 series: theta_{2(j-1)} o ... o theta_0."""
    out = y
    for i in range(j):
        out = theta_h(out, 2 * i, N)
    return out


def dim_modular(w):
    """Dimension of the space of holomorphic level-one forms of weight w."""
    if w < 0 or w % 2:
        return 0
    if w % 12 == 2:
        return w // 12
    return w // 12 + 1


def _gen_for_weight(u):
    """Some monomial (a, b) with 4a+6b = u; u even, nonnegative, not 2."""
    if u % 4 == 0:
        return (u // 4, 0)
    return ((u - 6) // 4, 1)


def _weight_basis(w):
    """Basis of M_w with valuations 0, 1, ..., dim-1 (Delta-power ladder)."""
    out = []
    for i in range(dim_modular(w)):
        a, b = _gen_for_weight(w - 12 * i)
        out.append(DELTA ** i * MFPoly.monomial(Fraction(1), a, b))
    return out


def identify(y, weight, margin=10):
    """Express a q-series as an MFPoly of the given weight, or fail loudly.

    Solves against the Delta-ladder basis of M_weight and then demands that
    every known coefficient of y matches — a full-residual check, not just
    enough coefficients to pin the solution down.
    """
    if y.is_zero():
        return MFPoly.zero(weight)
    if y.offset < 0 or y.offset.denominator != 1 or y.step_den != 1:
        raise ValueError(
            "not identifiable: series has negative or non-integral exponents")
    d = dim_modular(weight)
    if d == 0:
        raise ValueError("not identifiable: no nonzero forms of weight %d" % weight)
    if y.prec is not None and y.prec < d + margin:
        raise ValueError(
            "insufficient precision: need %d coefficients of a weight-%d "
            "candidate, have precision %s" % (d + margin, weight, y.prec))
    window = Fraction(d + margin) if y.prec is None else y.prec
    basis = _weight_basis(weight)
    basis_q = [to_qseries(b, window) for b in basis]
    residual = y.truncate(window)
    solution = MFPoly.zero(weight)
    for i in range(d):
        c = residual.coeff_at(i)
        if c:
            residual = residual - c * basis_q[i]
            solution = solution + basis[i].map_coeffs(lambda x, c=c: c * x)
    if not residual.is_zero():
        raise ValueError(
            "not identifiable: residual is nonzero at exponent %s"
            % residual.valuation())
    return solution


_HK = {
    0: (Fraction(1),),
    2: (Fraction(0), Fraction(0), Fraction(-1728), Fraction(1)),
    4: (Fraction(0), Fraction(1)),
    6: (Fraction(-1728), Fraction(1)),
    8: (Fraction(0), Fraction(0), Fraction(1)),
    10: (Fraction(0), Fraction(-1728), Fraction(1)),
}


def h_poly(k):
    """The weight-residue factor h_k(x) accounting for forced zeros at j=0, 1728."""
    if k % 2:
        raise ValueError("h_k is defined for even weights only")
    return _HK[k % 12]


def _poly_mul(u, v):
    out = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            out[i + j] += a * b
    return tuple(out)


def _poly_trim(u):
    u = list(u)
    while len(u) > 1 and not u[-1]:
        u.pop()
    return tuple(u)


@dataclass(frozen=True)
class DivisorData:
    """f = Delta^t E4^delta E6^epsilon f_tilde(j), and F = h_k * f_tilde."""

    weight: int
    t: int
    delta: int
    epsilon: int
    f_tilde: tuple
    F: tuple


_DELTA_EPS = {0: (0, 0), 2: (2, 1), 4: (1, 0), 6: (0, 1), 8: (2, 0), 10: (1, 1)}


def decompose(p):
    """Peel Delta^t E4^delta E6^epsilon off a form and return the j-polynomial."""
    if p.is_zero():
        raise ValueError("cannot decompose the zero form")
    w = p.weight
    delta, eps = _DELTA_EPS[w % 12]
    t = (w - 4 * delta - 6 * eps) // 12
    ftilde = [Fraction(0)] * (t + 1)
    for (a, b), c in p.terms.items():
        i = (a - delta) // 3
        s = (b - eps) // 2
        assert a - delta == 3 * i and b - eps == 2 * s and i + s == t
        # E4^a E6^b = E4^delta E6^eps (E4^3)^i (E4^3 - 1728*Delta)^s
        for r in range(s + 1):
            ftilde[i + r] += Fraction(c) * comb(s, r) * Fraction(-1728) ** (s - r)
    ftilde = _poly_trim(ftilde)
    return DivisorData(w, t, delta, eps, ftilde, _poly_trim(_poly_mul(h_poly(w), ftilde)))


def divisor_polynomial(p):
    """F(p, x) = h_{weight mod 12}(x) * f_tilde(p, x), ascending coefficients."""
    return decompose(p).F
