"""Symmetric powers of two-dimensional ODE solution spaces.

A pair (f, g) of weight-0 series solving theta^2 y + Q y = 0 spans a
two-dimensional space U; its m-th symmetric power is spanned by the
products f^i g^(m-i).  This module builds that basis, verifies the
factorization of its Wronskian through the pair Wronskian, produces the
order-(m+1) differential operator annihilating the symmetric power, runs
the constant-coefficient recursion R_1, ..., R_m, and evaluates the
hypergeometric-style coefficient extraction from (1 - 3 E4 x^4 + 2 E6
x^6)^alpha that gives the quotient W'/W of the symmetric-power basis in
closed form.

All operators are kept in theta-powers (theta^j means the weight ladder
theta_{2(j-1)} o ... o theta_0 on weight-0 input), which keeps every
coefficient homogeneous.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

from .etaprod import eta
from .modpoly import (E4, G4, MFPoly, theta_derivation, theta_h, to_qseries)
from .qseries import DEFAULT_PREC, QSeries
from .wronskian import normalize, wronskian


# ---- formal rational-coefficient polynomials ------------------------------

class RatPoly:
    """Dense polynomial in one formal variable with Fraction coefficients.

    Provides just enough ring structure to serve as an MFPoly coefficient:
    +, *, unary -, ==, truthiness, and exact evaluation.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly((other,))
        elif not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(tuple(-x for x in self.c))

    def __sub__(self, other):
        out = self + (-other if isinstance(other, RatPoly) else -Fraction(other))
        return out

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            if not self.c or not other.c:
                return RatPoly()
            out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
            for i, x in enumerate(self.c):
                if x:
                    for j, y in enumerate(other.c):
                        if y:
                            out[i + j] += x * y
            return RatPoly(out)
        if isinstance(other, (int, Fraction)):
            return RatPoly(tuple(x * other for x in self.c))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly((other,))
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.c):
            out = out * x + c
        return out

    def __repr__(self):
        return "RatPoly(%r)" % (self.c,)


def _poly_divmod(u, v):
    r = list(u.c)
    dv = v.degree()
    lead = v.c[-1]
    q = [Fraction(0)] * max(len(r) - dv, 0)
    for i in range(len(r) - 1 - dv, -1, -1):
        t = r[i + dv] / lead
        if t:
            q[i] = t
            for j, y in enumerate(v.c):
                r[i + j] -= t * y
    return RatPoly(q), RatPoly(r)


def _poly_gcd(a, b):
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a and a.c[-1] != 1:
        a = a * (Fraction(1) / a.c[-1])
    return a


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _rational_roots(p):
    """All rational roots of a nonzero RatPoly, found exactly."""
    roots = set()
    c = list(p.c)
    while c and not c[0]:
        c.pop(0)
        roots.add(Fraction(0))
    if len(c) <= 1:
        return roots
    den = 1
    for x in c:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in c]
    for nu in _divisors(abs(ints[0])):
        for de in _divisors(abs(ints[-1])):
            for cand in (Fraction(nu, de), Fraction(-nu, de)):
                if cand not in roots and p(cand) == 0:
                    roots.add(cand)
    return roots


# ---- symmetric-power bases -------------------------------------------------

def sym_basis(f, g, m):
    """The m-th symmetric power basis [f^i g^(m-i) for i = 0..m]."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    fp = [QSeries.one()]
    gp = [QSeries.one()]
    for _ in range(m):
        fp.append(fp[-1] * f)
        gp.append(gp[-1] * g)
    return [fp[i] * gp[m - i] for i in range(m + 1)]


@dataclass(frozen=True)
class SymWronskianReport:
    """Verified factorization of a symmetric-power Wronskian.

    m         -- symmetric power taken
    constant  -- the factor prod_{k=1..m} k! relating the two Wronskians
    power     -- the exponent m(m+1)/2 on the pair Wronskian
    eta_power -- 2m(m+1) when the pair Wronskian is a multiple of eta^4 and
                 the normalized symmetric-power Wronskian was checked to be
                 that power of eta; None when the eta comparison was skipped
    precision -- absolute precision to which the factorization was checked
    """

    m: int
    constant: int
    power: int
    eta_power: object
    precision: object


def sym_wronskian_check(f, g, m):
    """Verify W(f^i g^(m-i)) = (prod k!) * W(g, f)^(m(m+1)/2) exactly.

    When the normalized pair Wronskian is the 4th power of the eta unit,
    additionally verifies that the normalized symmetric-power Wronskian is
    eta^(2m(m+1)).  Any coefficient mismatch raises with the exponent of
    the first discrepancy.
    """
    basis = sym_basis(f, g, m)
    wu = wronskian([g, f])
    ws = wronskian(basis)
    constant = 1
    for k in range(2, m + 1):
        constant *= factorial(k)
    power = m * (m + 1) // 2
    expected = constant * wu ** power
    diff = ws - expected
    if not diff.is_zero():
        raise ValueError(
            "symmetric-power Wronskian mismatch first at exponent %s"
            % diff.valuation())
    eta_power = None
    bound = ws.prec if ws.prec is not None else Fraction(DEFAULT_PREC)
    eta4 = eta(1, bound) ** 4
    nu = normalize(wu)
    p = min(x for x in (nu.prec, eta4.prec) if x is not None)
    if nu.truncate(p) == eta4.truncate(p):
        eta_power = 2 * m * (m + 1)
        target = eta(1, bound) ** eta_power
        ediff = normalize(ws) - target
        if not ediff.is_zero():
            raise ValueError(
                "eta-power identity fails first at exponent %s"
                % ediff.valuation())
    return SymWronskianReport(m=m, constant=constant, power=power,
                              eta_power=eta_power, precision=ws.prec)


# ---- the constant-coefficient recursion ------------------------------------

def r_recursion(Q, m):
    """The sequence R_1, ..., R_m with R_1 = mQ, R_2 = m theta(Q) and
    R_{i+1} = theta(R_i) + (i+1)(m-i) Q R_{i-1}; R_i has weight 2i+2."""
    if Q.weight != 4:
        raise ValueError("Q must be homogeneous of weight 4")
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    rs = [m * Q]
    if m >= 2:
        rs.append(m * theta_derivation(Q))
    for i in range(2, m):
        rs.append(theta_derivation(rs[-1]) + (i + 1) * (m - i) * Q * rs[-2])
    return rs


def r12_vanishing_roots():
    """All rational lambda for which R_12 = 0 when Q = lambda * G4.

    R_12 is computed once with lambda a formal variable, so its
    coefficients are polynomials in lambda; the result is the exact set of
    common rational roots of those coefficient polynomials.
    """
    lam = RatPoly((0, 1))
    q = MFPoly.monomial(lam * Fraction(1, 720), 1, 0)   # lambda * G4
    r12 = r_recursion(q, 12)[-1]
    polys = list(r12.terms.values())
    g = polys[0]
    for p in polys[1:]:
        g = _poly_gcd(g, p)
    return _rational_roots(g)


# ---- the annihilating operator ---------------------------------------------

@dataclass(frozen=True)
class ThetaOperator:
    """Sum_j coeffs[j] * theta^j acting on weight-0 series.

    coeffs[j] is an MFPoly of weight 2*(order - j); the leading
    coefficient is the constant 1, so the operator is monic in theta.
    """

    coeffs: tuple

    @property
    def order(self):
        return len(self.coeffs) - 1


def d_operator(Q, m):
    """The monic order-(m+1) operator annihilating the m-th symmetric power
    of the solution space of theta^2 y + Q y = 0.

    Built from D_0 = 1, D_1 = theta, D_{i+1} = theta D_i + i(m-i+1) Q
    D_{i-1}; the returned operator is D_{m+1} and its theta-free
    coefficient equals the last entry of r_recursion(Q, m).
    """
    if Q.weight != 4:
        raise ValueError("Q must be homogeneous of weight 4")
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    one = MFPoly.constant(Fraction(1))
    prev = [one]
    cur = [MFPoly.zero(2), one]
    for i in range(1, m + 1):
        nxt = []
        for j in range(i + 2):
            c = MFPoly.zero(2 * (i + 1 - j))
            if j <= i:
                c = c + theta_derivation(cur[j])
            if 1 <= j:
                c = c + cur[j - 1]
            if j <= i - 1:
                c = c + i * (m - i + 1) * Q * prev[j]
            nxt.append(c)
        prev, cur = cur, nxt
    return ThetaOperator(tuple(cur))


def apply(op, y):
    """Evaluate (sum_j R_j theta^j) y for a weight-0 series y."""
    target = y.prec if y.prec is not None else Fraction(DEFAULT_PREC)
    ys = [y]
    for j in range(op.order):
        ys.append(theta_h(ys[-1], 2 * j, target))
    out = QSeries.zero(target)
    for c, yj in zip(op.coeffs, ys):
        if c.is_zero():
            continue
        out = out + to_qseries(c, target) * yj
    return out


# ---- coefficient extraction from (1 - 3 E4 x^4 + 2 E6 x^6)^alpha ------------

def _falling(alpha, n):
    out = Fraction(1)
    for t in range(n):
        out *= alpha - t
    return out


def kz_coeff(l, alpha, variant="closed"):
    """Coefficient of x^(2l) in (1 - 3 E4 x^4 + 2 E6 x^6)^alpha.

    variant="closed" evaluates the double sum over (r, s) with 2r+3s = l
    directly; variant="recursion" (meaningful for alpha = m/3) runs the
    theta recursion for the normalized coefficients and rescales back.
    Both return the unnormalized coefficient, a form of weight 2l.
    """
    if not isinstance(l, int) or l < 0:
        raise ValueError("l must be a nonnegative integer")
    alpha = Fraction(alpha)
    if variant == "closed":
        terms = {}
        for s in range(l // 3 + 1):
            rem = l - 3 * s
            if rem % 2:
                continue
            r = rem // 2
            c = (_falling(alpha, r + s)
                 / (factorial(r) * factorial(s)) * ((-3) ** r * 2 ** s))
            if c:
                terms[(r, s)] = c
        return MFPoly(2 * l, terms)
    if variant == "recursion":
        m = 3 * alpha
        g_prev = MFPoly.constant(Fraction(1))
        if l == 0:
            return g_prev
        g_cur = MFPoly.zero(2)
        q = Fraction(-1, 18) * E4
        for j in range(2, l + 1):
            g_prev, g_cur = g_cur, (theta_derivation(g_cur)
                                    + (j - 1) * (m - j + 2) * q * g_prev)
        return Fraction(6 ** l, factorial(l)) * g_cur
    raise ValueError("variant must be 'closed' or 'recursion'")


def sym_quotient_closed_form(m):
    """W'/W for the m-th symmetric power of the weight-0 pair solving
    theta^2 y - 40 G4 y = 0, in closed form.

    Equals (-1)^(m+1) (m+1)!/6^(m+1) times the coefficient of x^(2m+2) in
    (1 - 3 E4 x^4 + 2 E6 x^6)^(m/3); a form of weight 2m+2, and the zero
    form exactly when 3 divides m.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    g = kz_coeff(m + 1, Fraction(m, 3))
    form = Fraction(factorial(m + 1), 6 ** (m + 1)) * g
    return form if m % 2 else -form
