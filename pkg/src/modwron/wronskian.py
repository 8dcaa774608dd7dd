"""Wronskians of q-series families and the modular data they carry.

For series f_1, ..., f_k the Wronskian is the determinant of the k x k
matrix whose (j, i) entry is D^j f_i with D = q d/dq; the derived
Wronskian applies the same determinant to (D f_1, ..., D f_k).  On top of
the raw determinants this module provides echelon bases ordered by leading
exponent, monic normalization, identification of the quotient W'/W as a
holomorphic form of prescribed weight, and a certificate that W'/W
vanishes based on leading-exponent data alone.

Determinants of up to four series expand by cofactors directly over exact
series arithmetic.  Larger families run a fraction-free (Bareiss)
elimination on integer coefficient vectors: each column's leading exponent
and denominator are pulled out first, all entries are placed on one common
exponent lattice, and every division is an exact integer division because
the intermediate entries are again minors of the integer matrix.  Pivots
are chosen with minimal q-valuation, so each division costs as little of
the known coefficient window as possible.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from operator import mul as _mul_op

from .modpoly import MFPoly, identify
from .qseries import (QSeries, _ceil, _check_cap, _conv_trunc, _min_prec,
                      _upsample)

try:
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover - plain ints are a drop-in fallback
    def _big(x):
        return x


# ---- echelon bases -------------------------------------------------------

@dataclass(frozen=True)
class ModularBasis:
    """A family of series with strictly increasing leading exponents."""

    series: tuple
    exponents: tuple

    def __len__(self):
        return len(self.series)

    def __iter__(self):
        return iter(self.series)


def echelonize(series):
    """Column-reduce a family until the leading exponents are all distinct.

    Members are returned sorted by leading exponent.  Whenever two members
    share a leading exponent, the one appearing later in the input absorbs
    a multiple of the earlier one; members are never rescaled, so a member
    that already leads at a fresh exponent comes back unchanged.  The span
    is preserved throughout.  A member that reduces to zero -- to its known
    precision -- raises a ValueError naming its position in the input.
    """
    work = []
    for idx, f in enumerate(series):
        if not isinstance(f, QSeries):
            raise TypeError("expected QSeries members, got %r" % (f,))
        work.append((f, idx))
    out = []
    while work:
        for f, idx in work:
            if f.is_zero():
                raise ValueError(
                    "series at index %d is linearly dependent on the others "
                    "to working precision" % idx)
        at = min(range(len(work)), key=lambda i: work[i][0].valuation())
        piv, _ = work.pop(at)
        h = piv.valuation()
        lead = piv.leading_coefficient()
        work = [(f - (f.leading_coefficient() / lead) * piv, idx)
                if f.valuation() == h else (f, idx)
                for f, idx in work]
        out.append(piv)
    return ModularBasis(tuple(out), tuple(f.valuation() for f in out))


def _series_list(family):
    if isinstance(family, ModularBasis):
        return list(family.series)
    out = []
    for f in family:
        if not isinstance(f, QSeries):
            raise TypeError("expected QSeries members, got %r" % (f,))
        out.append(f)
    if not out:
        raise ValueError("cannot take the Wronskian of an empty family")
    return out


# ---- determinants --------------------------------------------------------

def wronskian(family, engine=None):
    """det[D^j f_i] for j = 0..k-1, columns in the given order, D = q d/dq."""
    return _det(_series_list(family), engine)


def wronskian_derived(family, engine=None):
    """Wronskian of the termwise derivatives (D f_1, ..., D f_k)."""
    return _det([f.derive() for f in _series_list(family)], engine)


def _det(fs, engine):
    if engine is None:
        engine = "cofactor" if len(fs) <= 4 else "bareiss"
    if engine == "cofactor":
        rows = [list(fs)]
        for _ in range(len(fs) - 1):
            rows.append([f.derive() for f in rows[-1]])
        return _det_cofactor(rows)
    if engine == "bareiss":
        return _det_bareiss(fs)
    raise ValueError("engine must be 'cofactor' or 'bareiss'")


def _det_cofactor(m):
    k = len(m)
    if k == 1:
        return m[0][0]
    total = None
    for c, entry in enumerate(m[0]):
        minor = [[row[cc] for cc in range(k) if cc != c] for row in m[1:]]
        term = entry * _det_cofactor(minor)
        if c % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _vec_val(v, w):
    """Index of the first nonzero slot within the window, or None."""
    if v is None:
        return None
    for i in range(min(len(v), w)):
        if v[i]:
            return i
    return None


def _vec_mul(a, b, w):
    la, lb = len(a), len(b)
    if not la or not lb:
        return []
    return _conv_trunc(a, b, min(w, la + lb - 1))


def _vec_sub(a, b):
    if len(a) < len(b):
        a = a + [0] * (len(b) - len(a))
    else:
        a = list(a)
    for i, x in enumerate(b):
        if x:
            a[i] -= x
    return a


def _vec_divexact(u, v, w):
    """Exact quotient u/v of integer slot vectors, known to w - val(v) slots."""
    v0 = 0
    while not v[v0]:
        v0 += 1
    lead = v[v0]
    tail = v[v0 + 1:]
    lu = len(u)
    out = []
    for n in range(w - v0):
        acc = u[n + v0] if n + v0 < lu else 0
        jm = min(len(tail), n)
        if jm:
            acc -= sum(map(_mul_op, tail[:jm], out[n - jm:n][::-1]))
        if acc:
            q, r = divmod(acc, lead)
            if r:
                raise ArithmeticError(
                    "inexact division in fraction-free elimination")
            out.append(q)
        else:
            out.append(0)
    return out


def _det_bareiss(fs):
    k = len(fs)
    zeros = [f for f in fs if f.is_zero()]
    if zeros:
        if any(f.prec is None for f in zeros):
            return QSeries.zero()
        total = Fraction(0)
        for f in fs:
            total += f.offset if f.nums else f.prec
        return QSeries.zero(total)
    L = 1
    for f in fs:
        L = lcm(L, f.step_den, f.offset.denominator)
    _check_cap(L)
    base = Fraction(0)
    window = None
    spans = 0
    for f in fs:
        base += f.offset
        spans += (len(f.nums) - 1) * (L // f.step_den)
        if f.prec is not None:
            w = _ceil((f.prec - f.offset) * L)
            window = w if window is None else min(window, w)
    exact = window is None
    if exact:
        window = spans + 1
    if window <= 0:
        return QSeries.zero(base + Fraction(window, L))

    # scaled integer derivative stacks, one column per series: the (j, i)
    # entry is den_i * L^(k-1) times the j-th derivative of f_i / q^(h_i)
    M = [[None] * k for _ in range(k)]
    denprod = 1
    lk = L ** (k - 1)
    for i, f in enumerate(fs):
        stride = L // f.step_den
        vec = f.nums if stride == 1 else _upsample(f.nums, stride)
        vec = vec[:window]
        denprod *= f.den * lk
        hl = int(f.offset * L)
        run = [_big(v) for v in vec]
        facs = None
        scale = lk
        M[0][i] = [x * scale for x in run] if scale != 1 else list(run)
        for j in range(1, k):
            if facs is None:
                facs = [_big(hl + n) for n in range(len(vec))]
            run = [x * y for x, y in zip(run, facs)]
            scale //= L
            M[j][i] = [x * scale for x in run] if scale != 1 else list(run)

    sign = 1
    prev = None
    prev_val = 0
    wcur = window
    det_vec = M[0][0]
    for t in range(k):
        best, br, bc = None, t, t
        for r in range(t, k):
            for c in range(t, k):
                v = _vec_val(M[r][c], wcur)
                if v is not None and (best is None or v < best):
                    best, br, bc = v, r, c
            if best == 0:
                break
        if best is None:
            # the remaining block vanishes on the window, hence so does the
            # determinant (up to the valuation already sunk into the pivots)
            w0 = wcur - (k - 1 - t) * prev_val
            if exact and w0 >= window:
                return QSeries.zero()
            return QSeries.zero(base + Fraction(max(w0, 0), L))
        if br != t:
            M[br], M[t] = M[t], M[br]
            sign = -sign
        if bc != t:
            for row in M:
                row[bc], row[t] = row[t], row[bc]
            sign = -sign
        if t == k - 1:
            det_vec = M[t][t]
            break
        piv = M[t][t]
        for r in range(t + 1, k):
            mrt = M[r][t]
            for c in range(t + 1, k):
                num = _vec_sub(_vec_mul(M[r][c], piv, wcur),
                               _vec_mul(mrt, M[t][c], wcur))
                M[r][c] = num if prev is None else _vec_divexact(num, prev, wcur)
            M[r][t] = None
        wcur -= prev_val
        prev = piv
        prev_val = best

    nums = [int(x) for x in det_vec]
    if sign < 0:
        nums = [-x for x in nums]
    prec = None if exact and wcur == window else base + Fraction(wcur, L)
    return QSeries(base, nums, L, denprod, prec)


# ---- normalization and the quotient form --------------------------------

def normalize(w):
    """Scale a series so its leading coefficient is one."""
    if w.is_zero():
        raise ValueError(
            "cannot normalize a series with no nonzero term to precision")
    return w / w.leading_coefficient()


def quotient_form(family, expect_weight):
    """Identify W'/W as a holomorphic form of the given weight.

    W is the Wronskian of the family and W' the Wronskian of its termwise
    derivatives.  If W' vanishes identically to the working precision the
    zero form is returned; a vanishing W raises instead, since the
    quotient is then undefined.
    """
    fs = _series_list(family)
    w = wronskian(fs)
    if w.is_zero():
        raise ValueError(
            "Wronskian vanishes to working precision; the quotient is undefined")
    wd = wronskian_derived(fs)
    if wd.is_zero():
        return MFPoly.zero(expect_weight)
    return identify(wd / w, expect_weight)


# ---- vanishing certificate -----------------------------------------------

@dataclass(frozen=True)
class VanishingReport:
    """Outcome of the leading-exponent test for W'/W = 0.

    forced_zero     -- True when the exponent pattern forces W'/W to vanish
    r               -- largest integer order reached (exponents run 0..r)
    integer_indices -- positions, in echelon order, of the members whose
                       leading exponent is an integer
    relation        -- coefficients (lambda_0, ..., lambda_r), lambda_0 = 1,
                       making sum_j lambda_j f_{i_j} constant, or None
    constant        -- the nonzero constant value of that combination
    holomorphy      -- the caller's justification that W'/W is holomorphic
    precision       -- smallest known precision among the members
    diagnostic      -- human-readable explanation of the outcome
    """

    forced_zero: bool
    r: object
    integer_indices: tuple
    relation: object
    constant: object
    holomorphy: object
    precision: object
    diagnostic: str


def vanishing_check(family, holomorphy=None):
    """Test whether leading exponents alone force W'/W to vanish.

    For an echelonized family of k series whose quotient W'/W is
    holomorphic (attested by the caller through `holomorphy`): if members
    with integer leading exponents 0, 1, ..., r all exist for some
    r >= floor(k/6), then W'/W = 0.  If furthermore those are the only
    members with integer leading exponent, some combination
    lambda_0 f_{i_0} + ... + lambda_r f_{i_r} with lambda_0 = 1 is a
    nonzero constant; it is solved exponent by exponent and verified
    against the full known precision of the members.
    """
    basis = family if isinstance(family, ModularBasis) else echelonize(family)
    exps = basis.exponents
    k = len(exps)
    floor_k6 = k // 6
    integer_ix = tuple(i for i, h in enumerate(exps) if h.denominator == 1)
    prec = _min_prec(*(f.prec for f in basis.series))

    def report(**kw):
        full = dict(forced_zero=False, r=None, integer_indices=integer_ix,
                    relation=None, constant=None, holomorphy=holomorphy,
                    precision=prec, diagnostic="")
        full.update(kw)
        return VanishingReport(**full)

    if holomorphy is None:
        return report(diagnostic="holomorphy of W'/W was not attested; "
                                 "pass a justification string")
    orders = {int(exps[i]) for i in integer_ix}
    if not orders:
        return report(diagnostic="no member has an integer leading exponent")
    if 0 not in orders:
        return report(diagnostic="integer leading exponents (%s) do not "
                                 "include 0"
                      % ", ".join(str(h) for h in sorted(orders)))
    r = 0
    while r + 1 in orders:
        r += 1
    if r < floor_k6:
        return report(diagnostic="integer orders reach only %d, below the "
                                 "required floor(k/6) = %d" % (r, floor_k6))
    extra = sorted(orders - set(range(r + 1)))
    if extra:
        return report(forced_zero=True, r=r,
                      diagnostic="integer orders 0..%d force W'/W = 0, but "
                                 "further integer leading exponents (%s) rule "
                                 "out the constant relation"
                      % (r, ", ".join(str(h) for h in extra)))
    members = [basis.series[exps.index(Fraction(j))] for j in range(r + 1)]
    derived = [f.derive() for f in members]
    lam = [Fraction(1)]
    try:
        for e in range(1, r + 1):
            acc = Fraction(0)
            for j in range(e):
                acc += lam[j] * derived[j].coeff_at(e)
            lam.append(-acc / derived[e].coeff_at(e))
        combo = QSeries.zero()
        for lj, f in zip(lam, members):
            combo = combo + lj * f
        c0 = combo.coeff_at(0)
    except ValueError as exc:
        return report(diagnostic="insufficient precision to solve the "
                                 "relation: %s" % exc)
    resid = combo - c0
    if not resid.is_zero():
        return report(forced_zero=True, r=r,
                      diagnostic="integer orders 0..%d force W'/W = 0, but "
                                 "the candidate relation fails first at "
                                 "exponent %s" % (r, resid.valuation()))
    if c0 == 0:
        return report(forced_zero=True, r=r,
                      diagnostic="integer orders 0..%d force W'/W = 0, but "
                                 "the combination has zero constant term" % r)
    return report(forced_zero=True, r=r, relation=tuple(lam), constant=c0,
                  diagnostic="integer orders 0..%d with r >= floor(k/6) = %d "
                             "force W'/W = 0; relation verified to precision "
                             "%s" % (r, floor_k6, prec))
