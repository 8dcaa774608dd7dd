"""Exact truncated q-series with rational exponent offsets.

A series is q^offset * sum_n (nums[n]/den) * q^(n/step_den), with coefficients
known exactly for every exponent < prec.  prec is a rational bound (prec=None
means the series is exact at all orders, e.g. an integer polynomial in q).
All arithmetic is exact rational; nothing here ever touches floating point.
"""

from fractions import Fraction
from math import gcd, lcm
from operator import mul as _mul_op

LATTICE_CAP = 120     # largest allowed exponent-lattice denominator
DEFAULT_PREC = 100    # truncation order used when fully exact inputs need one


def _as_frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % (x,))


def _check_cap(d):
    if d > LATTICE_CAP:
        raise ValueError(
            "exponent lattice denominator %d exceeds cap %d" % (d, LATTICE_CAP))
    return d


def _ceil(x):
    """Ceiling of a Fraction as an int."""
    return -((-x.numerator) // x.denominator)


def _min_prec(*ps):
    m = None
    for p in ps:
        if p is not None:
            m = p if m is None else min(m, p)
    return m


def _add_prec(p, v):
    return None if p is None else p + v


def _conv_trunc(a, b, n):
    """First n coefficients of the product of coefficient lists a and b."""
    la, lb = len(a), len(b)
    if n is None:
        n = la + lb - 1
    rb = b[::-1]
    out = []
    for t in range(n):
        lo = t - lb + 1
        if lo < 0:
            lo = 0
        hi = t if t < la else la - 1
        if hi < lo:
            out.append(0)
        else:
            out.append(sum(map(_mul_op, a[lo:hi + 1], rb[lb - 1 - t + lo:lb - t + hi])))
    return out


class QSeries:
    """Truncated q-series with exact rational coefficients and offset."""

    __slots__ = ("offset", "step_den", "nums", "den", "prec")

    def __init__(self, offset, nums, step_den=1, den=1, prec=None):
        offset = _as_frac(offset)
        if prec is not None:
            prec = _as_frac(prec)
        if not isinstance(step_den, int) or step_den < 1:
            raise ValueError("step_den must be a positive integer")
        _check_cap(step_den)
        if not isinstance(den, int) or den == 0:
            raise ValueError("den must be a nonzero integer")
        nums = list(nums)
        if den < 0:
            den = -den
            nums = [-c for c in nums]
        # drop stored exponents >= prec
        if prec is not None:
            limit = (prec - offset) * step_den
            keep = max(_ceil(limit), 0)
            if keep < len(nums):
                del nums[keep:]
        # strip leading zeros, advancing the offset
        k = 0
        while k < len(nums) and not nums[k]:
            k += 1
        if k:
            offset += Fraction(k, step_den)
            del nums[:k]
        while nums and not nums[-1]:
            nums.pop()
        if not nums:
            self.offset = Fraction(0)
            self.step_den = 1
            self.nums = []
            self.den = 1
            self.prec = prec
            return
        g = den
        for c in nums:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            nums = [c // g for c in nums]
        # compress the stride when every populated slot lies on a coarser lattice
        if step_den > 1:
            s = 0
            for i in range(len(nums) - 1, 0, -1):
                if nums[i]:
                    s = gcd(s, i)
                    if s == 1:
                        break
            s = gcd(s, step_den)
            if s > 1:
                nums = nums[::s]
                step_den //= s
        self.offset = offset
        self.step_den = step_den
        self.nums = nums
        self.den = den
        self.prec = prec

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, prec=None):
        return cls(0, [], 1, 1, prec)

    @classmethod
    def constant(cls, c, prec=None):
        c = _as_frac(c)
        return cls(0, [c.numerator], 1, c.denominator, prec)

    @classmethod
    def one(cls, prec=None):
        return cls(0, [1], 1, 1, prec)

    @classmethod
    def monomial(cls, c, e, prec=None):
        c = _as_frac(c)
        return cls(_as_frac(e), [c.numerator], 1, c.denominator, prec)

    @classmethod
    def from_fractions(cls, offset, coeffs, step_den=1, prec=None):
        coeffs = [_as_frac(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = lcm(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in coeffs]
        return cls(offset, nums, step_den, den, prec)

    # ---- basic queries ------------------------------------------------

    def is_zero(self):
        return not self.nums

    def valuation(self):
        if not self.nums:
            raise ValueError("valuation undefined to this precision")
        return self.offset

    def leading_coefficient(self):
        if not self.nums:
            raise ValueError("valuation undefined to this precision")
        return Fraction(self.nums[0], self.den)

    def coeff_at(self, e):
        e = _as_frac(e)
        if self.prec is not None and e >= self.prec:
            raise ValueError(
                "coefficient at exponent %s is beyond precision %s" % (e, self.prec))
        rel = (e - self.offset) * self.step_den
        if rel.denominator != 1 or rel < 0 or rel >= len(self.nums):
            return Fraction(0)
        return Fraction(self.nums[int(rel)], self.den)

    def coeffs(self):
        """List of (exponent, coefficient) pairs for the nonzero stored terms."""
        out = []
        for n, c in enumerate(self.nums):
            if c:
                out.append((self.offset + Fraction(n, self.step_den),
                            Fraction(c, self.den)))
        return out

    def truncate(self, prec):
        prec = None if prec is None else _as_frac(prec)
        return QSeries(self.offset, self.nums, self.step_den, self.den,
                       _min_prec(self.prec, prec))

    # ---- ring operations ----------------------------------------------

    def __neg__(self):
        return QSeries(self.offset, [-c for c in self.nums], self.step_den,
                       self.den, self.prec)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other)
        elif not isinstance(other, QSeries):
            return NotImplemented
        prec = _min_prec(self.prec, other.prec)
        if self.is_zero():
            return other.truncate(prec)
        if other.is_zero():
            return self.truncate(prec)
        delta = other.offset - self.offset
        L = lcm(self.step_den, other.step_den, delta.denominator)
        _check_cap(L)
        base = min(self.offset, other.offset)
        da = int((self.offset - base) * L)
        db = int((other.offset - base) * L)
        sa = L // self.step_den
        sb = L // other.step_den
        den = lcm(self.den, other.den)
        fa = den // self.den
        fb = den // other.den
        out = [0] * (max(da + (len(self.nums) - 1) * sa,
                         db + (len(other.nums) - 1) * sb) + 1)
        for i, c in enumerate(self.nums):
            if c:
                out[da + i * sa] += c * fa
        for i, c in enumerate(other.nums):
            if c:
                out[db + i * sb] += c * fb
        return QSeries(base, out, L, den, prec)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other)
        elif not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_frac(other)
            if c == 0:
                return QSeries.zero()
            return QSeries(self.offset, [n * c.numerator for n in self.nums],
                           self.step_den, self.den * c.denominator, self.prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        va = self.offset if self.nums else self.prec
        vb = other.offset if other.nums else other.prec
        if self.is_zero() or other.is_zero():
            if (self.is_zero() and self.prec is None) or \
               (other.is_zero() and other.prec is None):
                return QSeries.zero()
            return QSeries.zero(_min_prec(_add_prec(self.prec, vb),
                                          _add_prec(other.prec, va)))
        prec = _min_prec(_add_prec(self.prec, vb), _add_prec(other.prec, va))
        L = lcm(self.step_den, other.step_den)
        _check_cap(L)
        offset = self.offset + other.offset
        sa = L // self.step_den
        sb = L // other.step_den
        a = self.nums if sa == 1 else _upsample(self.nums, sa)
        b = other.nums if sb == 1 else _upsample(other.nums, sb)
        if prec is None:
            n_out = None
        else:
            n_out = max(_ceil((prec - offset) * L), 0)
            if n_out == 0:
                return QSeries.zero(prec)
            n_out = min(n_out, len(a) + len(b) - 1)
        out = _conv_trunc(a, b, n_out)
        return QSeries(offset, out, L, self.den * other.den, prec)

    __rmul__ = __mul__

    def pow_int(self, k):
        """k-th power with repeated-multiplication truncation semantics."""
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k == 0:
            return QSeries.one()
        if k < 0:
            return self.invert().pow_int(-k)
        result = None
        base = self
        e = k
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    __pow__ = pow_int

    def invert(self, prec=None):
        """Multiplicative inverse, truncated; q^v*(c+...) -> q^(-v)*(1/c+...)."""
        return _long_div(QSeries.one(), self, prec)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_frac(other)
            if c == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self * Fraction(c.denominator, c.numerator)
        if not isinstance(other, QSeries):
            return NotImplemented
        return _long_div(self, other)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return _long_div(QSeries.constant(other), self)
        return NotImplemented

    # ---- calculus and substitution -------------------------------------

    def derive(self):
        """The operator q*d/dq: multiplies each coefficient by its exponent."""
        if not self.nums:
            return QSeries(0, [], 1, 1, self.prec)
        p, q = self.offset.numerator, self.offset.denominator
        d = self.step_den
        nums = [c * (p * d + n * q) for n, c in enumerate(self.nums)]
        return QSeries(self.offset, nums, d, self.den * q * d, self.prec)

    def rescale(self, s):
        """Substitute q -> q^s for a positive rational s."""
        s = _as_frac(s)
        if s <= 0:
            raise ValueError("rescale factor must be positive")
        if not self.nums:
            return QSeries(0, [], 1, 1,
                           None if self.prec is None else self.prec * s)
        p, q = s.numerator, s.denominator
        g = gcd(p, q * self.step_den)
        stride = p // g
        new_d = q * self.step_den // g
        _check_cap(new_d)
        if stride == 1:
            nums = self.nums
        else:
            nums = [0] * ((len(self.nums) - 1) * stride + 1)
            for i, c in enumerate(self.nums):
                nums[i * stride] = c
        prec = None if self.prec is None else self.prec * s
        return QSeries(self.offset * s, nums, new_d, self.den, prec)

    # ---- comparison and display -----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.offset == other.offset and self.step_den == other.step_den
                and self.nums == other.nums and self.den == other.den
                and self.prec == other.prec)

    def __hash__(self):
        return hash((self.offset, self.step_den, tuple(self.nums), self.den,
                     self.prec))

    def __str__(self):
        if not self.nums:
            binder = "0" if self.prec is None else "O(q^(%s))" % self.prec
            return binder
        terms = []
        shown = 0
        for n, c in enumerate(self.nums):
            if not c:
                continue
            if shown == 8:
                terms.append("...")
                break
            e = self.offset + Fraction(n, self.step_den)
            coef = Fraction(c, self.den)
            terms.append(_fmt_term(coef, e, not terms))
            shown += 1
        body = " ".join(terms)
        if self.prec is not None:
            body += " + O(q^(%s))" % self.prec
        return body

    __repr__ = __str__

    # ---- serialization ---------------------------------------------------

    def to_json(self):
        return {
            "offset": str(self.offset),
            "step_den": self.step_den,
            "prec": None if self.prec is None else str(self.prec),
            "coeffs": [str(Fraction(c, self.den)) for c in self.nums],
        }

    @classmethod
    def from_json(cls, d):
        offset = Fraction(d["offset"])
        prec = None if d.get("prec") is None else Fraction(d["prec"])
        coeffs = [Fraction(c) for c in d["coeffs"]]
        return cls.from_fractions(offset, coeffs, int(d["step_den"]), prec)


def _fmt_term(coef, e, first):
    sign = "" if first else ("+ " if coef > 0 else "- ")
    if not first and coef < 0:
        coef = -coef
    if e == 0:
        return sign + str(coef)
    if e == 1:
        qpart = "q"
    elif e.denominator == 1 and e >= 0:
        qpart = "q^%s" % e
    else:
        qpart = "q^(%s)" % e
    if coef == 1:
        return sign + qpart
    if coef == -1 and first:
        return "-" + qpart
    cs = str(coef) if coef.denominator == 1 else "(%s)" % coef
    return sign + cs + "*" + qpart


def _upsample(nums, stride):
    out = [0] * ((len(nums) - 1) * stride + 1)
    for i, c in enumerate(nums):
        if c:
            out[i * stride] = c
    return out


def _long_div(u, v, prec=None):
    """Exact long division u/v of truncated series."""
    if not v.nums:
        raise ValueError("series not invertible")
    if not u.nums:
        if u.prec is None:
            return QSeries.zero()
        return QSeries.zero(u.prec - v.offset)
    out_prec = _min_prec(_add_prec(u.prec, -v.offset),
                         _add_prec(v.prec, u.offset - 2 * v.offset))
    if out_prec is None:
        out_prec = _as_frac(prec if prec is not None else DEFAULT_PREC)
    offset = u.offset - v.offset
    L = lcm(u.step_den, v.step_den)
    _check_cap(L)
    n_out = max(_ceil((out_prec - offset) * L), 0)
    if n_out == 0:
        return QSeries.zero(out_prec)
    a = u.nums if u.step_den == L else _upsample(u.nums, L // u.step_den)
    b = v.nums if v.step_den == L else _upsample(v.nums, L // v.step_den)
    if v.den == 1 and u.den == 1 and b[0] in (1, -1):
        # quotients of integer series by a unit-lead series stay integral
        lead = b[0]
        qs = []
        for n in range(n_out):
            acc = a[n] if n < len(a) else 0
            if qs:
                jmax = min(n, len(b) - 1)
                if jmax >= 1:
                    acc -= sum(map(_mul_op, b[1:jmax + 1], qs[n - 1::-1][:jmax]))
            qs.append(acc * lead)
        return QSeries(offset, qs, L, 1, out_prec)
    bf = [Fraction(c, v.den) for c in b]
    lead = bf[0]
    af = [Fraction(c, u.den) for c in a]
    qs = []
    for n in range(n_out):
        acc = af[n] if n < len(af) else Fraction(0)
        jmax = min(n, len(bf) - 1)
        for j in range(1, jmax + 1):
            qj = qs[n - j]
            if qj:
                acc -= bf[j] * qj
        qs.append(acc / lead)
    return QSeries.from_fractions(offset, qs, L, out_prec)


def first_mismatch(a, b):
    """Smallest exponent where a and b differ, or None if they agree on the
    common known window."""
    d = a - b
    if d.is_zero():
        return None
    return d.valuation()
