"""Sparse exact Laurent-polynomial arithmetic over the integers.

Two polynomial shapes cover everything in this package:

* one variable ``t`` -- invariant values at a fixed color, stored as
  ``{t_exponent: coefficient}``;
* two variables ``t, M`` -- operator coefficients and symbolic-in-color
  data, stored as ``{(t_exponent, M_exponent): coefficient}``.

On top of these sit two fraction types: :class:`RationalTM` (numerator and
denominator in ``t, M``; reduced opportunistically, compared by
cross-multiplication) and :class:`RationalM` (single variable ``M``; fully
reduced and canonical, compared structurally).

Everything is exact integer arithmetic; no floats anywhere.

>>> f = IntLaurent1({2: 1, -2: 1})
>>> g = IntLaurent1({2: 1, -2: -1})
>>> (f * g).text()
't^4 - t^-4'
"""

from __future__ import annotations

from math import gcd


class DivByZero(ZeroDivisionError):
    """Division by the zero polynomial."""


class NotDivisible(ArithmeticError):
    """Exact division requested but the quotient is not in the same ring."""


class PoleAtMinusOne(ArithmeticError):
    """A t-rational function has a genuine pole at t = -1."""


class ZeroPolynomial(ValueError):
    """Degree bounds requested for the zero polynomial."""


# ---------------------------------------------------------------------------
# raw-dict kernels (hot paths work on plain dicts; classes stay thin)
# ---------------------------------------------------------------------------


def _merge(a, b, sign=1):
    """Return a + sign*b for exponent->coefficient dicts."""
    r = dict(a)
    for k, c in b.items():
        v = r.get(k, 0) + sign * c
        if v:
            r[k] = v
        else:
            r.pop(k, None)
    return r


def _mul1(a, b):
    if len(a) > len(b):
        a, b = b, a
    r = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = ea + eb
            v = r.get(k, 0) + ca * cb
            if v:
                r[k] = v
            else:
                del r[k]
    return r


def _mul2(a, b):
    if len(a) > len(b):
        a, b = b, a
    r = {}
    for (ta, ma), ca in a.items():
        for (tb, mb), cb in b.items():
            k = (ta + tb, ma + mb)
            v = r.get(k, 0) + ca * cb
            if v:
                r[k] = v
            else:
                del r[k]
    return r


def _div1(num, den):
    """Exact quotient of one-variable Laurent dicts; raises NotDivisible."""
    if not den:
        raise DivByZero("division by zero polynomial")
    if not num:
        return {}
    eb = max(den)
    cb = den[eb]
    q_lo = min(num) - min(den)
    r = dict(num)
    q = {}
    while r:
        ea = max(r)
        ca = r[ea]
        qe = ea - eb
        if qe < q_lo or ca % cb:
            raise NotDivisible("quotient is not an integer Laurent polynomial")
        qc = ca // cb
        q[qe] = qc
        for e, c in den.items():
            k = e + qe
            v = r.get(k, 0) - qc * c
            if v:
                r[k] = v
            else:
                del r[k]
    return q


def _lex_key(k):
    # monomial order used for bivariate division: M-exponent first, then t
    return (k[1], k[0])


def _div2(num, den):
    """Exact quotient of two-variable Laurent dicts; raises NotDivisible."""
    if not den:
        raise DivByZero("division by zero polynomial")
    if not num:
        return {}
    # strip unit monomials so both operands are honest polynomials with
    # per-variable minimum exponent 0; the offset is a unit, restored at the end
    nt = min(t for t, _ in num)
    nm = min(m for _, m in num)
    dt = min(t for t, _ in den)
    dm = min(m for _, m in den)
    a = {(t - nt, m - nm): c for (t, m), c in num.items()}
    b = {(t - dt, m - dm): c for (t, m), c in den.items()}
    lead_b = max(b, key=_lex_key)
    cb = b[lead_b]
    r = dict(a)
    q = {}
    while r:
        lead_r = max(r, key=_lex_key)
        ca = r[lead_r]
        qe = (lead_r[0] - lead_b[0], lead_r[1] - lead_b[1])
        if qe[0] < 0 or qe[1] < 0 or ca % cb:
            raise NotDivisible("quotient is not an integer Laurent polynomial")
        qc = ca // cb
        q[qe] = qc
        for (t, m), c in b.items():
            k = (t + qe[0], m + qe[1])
            v = r.get(k, 0) - qc * c
            if v:
                r[k] = v
            else:
                del r[k]
    off = (nt - dt, nm - dm)
    if off != (0, 0):
        q = {(t + off[0], m + off[1]): c for (t, m), c in q.items()}
    return q


def _content(d):
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------


def _pow_text(var, e):
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _terms_text(pairs):
    """Render [(coefficient, factor_text), ...] as ``a + b - c`` style text."""
    if not pairs:
        return "0"
    out = []
    for i, (c, fac) in enumerate(pairs):
        mag = abs(c)
        if fac and mag == 1:
            body = fac
        elif fac:
            body = f"{mag}*{fac}"
        else:
            body = str(mag)
        if i == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# polynomial classes
# ---------------------------------------------------------------------------


class IntLaurent1:
    """Integer Laurent polynomial in ``t`` as a sparse exponent dict.

    Instances are treated as immutable: every operation returns a new one.

    >>> IntLaurent1({-2: 1, -6: 1, -10: 1, -18: -1}).text()
    't^-2 + t^-6 + t^-10 - t^-18'
    """

    __slots__ = ("d",)

    def __init__(self, terms=None):
        if terms is None:
            self.d = {}
        elif isinstance(terms, dict):
            self.d = {e: c for e, c in terms.items() if c}
        else:
            d = {}
            for e, c in terms:
                v = d.get(e, 0) + c
                if v:
                    d[e] = v
                else:
                    d.pop(e, None)
            self.d = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def t_power(cls, e, c=1):
        return cls({e: c} if c else {})

    def __bool__(self):
        return bool(self.d)

    def __eq__(self, other):
        return isinstance(other, IntLaurent1) and self.d == other.d

    def __hash__(self):
        return hash(frozenset(self.d.items()))

    def __neg__(self):
        return IntLaurent1({e: -c for e, c in self.d.items()})

    def __add__(self, other):
        return IntLaurent1(_merge(self.d, other.d, 1))

    def __sub__(self, other):
        return IntLaurent1(_merge(self.d, other.d, -1))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntLaurent1({e: c * other for e, c in self.d.items()} if other else {})
        return IntLaurent1(_mul1(self.d, other.d))

    __rmul__ = __mul__

    def mul_tpow(self, e, c=1):
        """Multiply by ``c * t**e`` (a unit when c = +-1)."""
        if not c:
            return IntLaurent1()
        return IntLaurent1({ee + e: cc * c for ee, cc in self.d.items()})

    def text(self):
        items = sorted(self.d.items(), key=lambda kv: -kv[0])
        return _terms_text([(c, _pow_text("t", e)) for e, c in items])

    def __repr__(self):
        return f"IntLaurent1({self.text()})"


class IntLaurent2:
    """Integer Laurent polynomial in ``t`` and ``M``.

    Keys are ``(t_exponent, M_exponent)``.  Term order for text is
    ascending M-exponent, then descending t-exponent.

    >>> IntLaurent2({(22, 10): 1, (-18, -10): 1, (-6, -2): -1, (2, 2): -1}).text()
    't^-18*M^-10 - t^-6*M^-2 - t^2*M^2 + t^22*M^10'
    """

    __slots__ = ("d",)

    def __init__(self, terms=None):
        if terms is None:
            self.d = {}
        elif isinstance(terms, dict):
            self.d = {k: c for k, c in terms.items() if c}
        else:
            d = {}
            for k, c in terms:
                v = d.get(k, 0) + c
                if v:
                    d[k] = v
                else:
                    d.pop(k, None)
            self.d = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, c=1, t=0, m=0):
        return cls({(t, m): c} if c else {})

    def __bool__(self):
        return bool(self.d)

    def __eq__(self, other):
        return isinstance(other, IntLaurent2) and self.d == other.d

    def __hash__(self):
        return hash(frozenset(self.d.items()))

    def __neg__(self):
        return IntLaurent2({k: -c for k, c in self.d.items()})

    def __add__(self, other):
        return IntLaurent2(_merge(self.d, other.d, 1))

    def __sub__(self, other):
        return IntLaurent2(_merge(self.d, other.d, -1))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntLaurent2({k: c * other for k, c in self.d.items()} if other else {})
        return IntLaurent2(_mul2(self.d, other.d))

    __rmul__ = __mul__

    def mul_monomial(self, c=1, t=0, m=0):
        if not c:
            return IntLaurent2()
        return IntLaurent2({(tt + t, mm + m): cc * c for (tt, mm), cc in self.d.items()})

    def eval_t_minus1(self):
        """Substitute t = -1; returns an M-exponent dict."""
        r = {}
        for (te, me), c in self.d.items():
            v = r.get(me, 0) + (c if te % 2 == 0 else -c)
            if v:
                r[me] = v
            else:
                del r[me]
        return r

    def text(self):
        items = sorted(self.d.items(), key=lambda kv: (kv[0][1], -kv[0][0]))
        out = []
        for (te, me), c in items:
            tt = _pow_text("t", te)
            mm = _pow_text("M", me)
            fac = f"{tt}*{mm}" if tt and mm else (tt or mm)
            out.append((c, fac))
        return _terms_text(out)

    def __repr__(self):
        return f"IntLaurent2({self.text()})"


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def poly_mul(a, b):
    """Exact product; both operands must be the same polynomial type."""
    if isinstance(a, IntLaurent1) and isinstance(b, IntLaurent1):
        return IntLaurent1(_mul1(a.d, b.d))
    if isinstance(a, IntLaurent2) and isinstance(b, IntLaurent2):
        return IntLaurent2(_mul2(a.d, b.d))
    raise TypeError(f"poly_mul: mismatched operand types {type(a).__name__}, {type(b).__name__}")


def poly_exact_div(a, b):
    """Exact quotient a / b in the same Laurent ring.

    Raises :class:`NotDivisible` when the quotient has non-integer
    coefficients or is not a Laurent polynomial, and :class:`DivByZero`
    when ``b`` is zero.

    >>> num = IntLaurent1({12: 1, -8: 1, -4: -1, 0: -1})
    >>> den = IntLaurent1({2: 1, -2: -1})
    >>> poly_exact_div(num, den).text()
    't^10 + t^6 + t^2 - t^-6'
    """
    if isinstance(a, IntLaurent1) and isinstance(b, IntLaurent1):
        return IntLaurent1(_div1(a.d, b.d))
    if isinstance(a, IntLaurent2) and isinstance(b, IntLaurent2):
        return IntLaurent2(_div2(a.d, b.d))
    raise TypeError(f"poly_exact_div: mismatched operand types {type(a).__name__}, {type(b).__name__}")


def substitute_M(f, n):
    """Realize M at color n: each ``t^a M^b`` becomes ``t^(a + 2nb)``.

    >>> f = IntLaurent2({(22, 10): 1, (-18, -10): 1, (-6, -2): -1, (2, 2): -1})
    >>> substitute_M(f, 1).text()
    't^42 - t^6 - t^-10 + t^-38'
    """
    two_n = 2 * n
    r = {}
    for (a, b), c in f.d.items():
        k = a + two_n * b
        v = r.get(k, 0) + c
        if v:
            r[k] = v
        else:
            del r[k]
    return IntLaurent1(r)


def shift_M(f, j):
    """Conjugate by j steps of color shift: ``t^a M^b -> t^(a+2jb) M^b``.

    >>> shift_M(IntLaurent2({(0, 2): 1, (0, -1): 1}), 2).text()
    't^-4*M^-1 + t^8*M^2'
    """
    if isinstance(f, RationalTM):
        return RationalTM(shift_M(f.num, j), shift_M(f.den, j))
    two_j = 2 * j
    return IntLaurent2({(a + two_j * b, b): c for (a, b), c in f.d.items()})


def degree_bounds(f):
    """(lowest, highest) t-exponent of a nonzero polynomial.

    >>> degree_bounds(IntLaurent1({-2: 1, -18: -1}))
    (-18, -2)
    """
    if isinstance(f, IntLaurent1):
        if not f.d:
            raise ZeroPolynomial("zero polynomial has no degree bounds")
        return (min(f.d), max(f.d))
    if isinstance(f, IntLaurent2):
        if not f.d:
            raise ZeroPolynomial("zero polynomial has no degree bounds")
        ts = [t for t, _ in f.d]
        return (min(ts), max(ts))
    raise TypeError(f"degree_bounds: unsupported type {type(f).__name__}")


# ---------------------------------------------------------------------------
# fraction in t, M
# ---------------------------------------------------------------------------


class RationalTM:
    """Fraction of integer Laurent polynomials in ``t, M``.

    Canonical form: the denominator is unit-normalized (minimum t- and
    M-exponent zero, the stripped unit monomial absorbed into the
    numerator, which may remain a genuine Laurent polynomial); the common
    integer content is removed; the denominator's leading term in
    (M ascending, t descending) order has positive coefficient.  Reduction
    beyond that is opportunistic (trial exact division), so equality is
    decided by cross-multiplication, not structurally.

    >>> f = RationalTM(IntLaurent2({(1, 1): 1, (-1, 1): -1}), IntLaurent2({(1, 0): 1, (-1, 0): -1}))
    >>> f.text()
    'M'
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = IntLaurent2.one()
        if not den:
            raise DivByZero("zero denominator")
        nd, dd = num.d, den.d
        if not nd:
            self.num = IntLaurent2()
            self.den = IntLaurent2.one()
            return
        # absorb the denominator's unit monomial into the numerator
        dt = min(t for t, _ in dd)
        dm = min(m for _, m in dd)
        if dt or dm:
            dd = {(t - dt, m - dm): c for (t, m), c in dd.items()}
            nd = {(t - dt, m - dm): c for (t, m), c in nd.items()}
        # strip common integer content
        g = gcd(_content(nd), _content(dd))
        if g > 1:
            nd = {k: c // g for k, c in nd.items()}
            dd = {k: c // g for k, c in dd.items()}
        # opportunistic cancellation of the whole denominator
        if dd != {(0, 0): 1}:
            try:
                nd = _div2(nd, dd)
                dd = {(0, 0): 1}
            except NotDivisible:
                pass
        # sign normalization on the denominator's canonical-first term
        first = min(dd, key=lambda k: (k[1], -k[0]))
        if dd[first] < 0:
            nd = {k: -c for k, c in nd.items()}
            dd = {k: -c for k, c in dd.items()}
        self.num = IntLaurent2(nd)
        self.den = IntLaurent2(dd)

    @classmethod
    def from_poly(cls, p):
        return cls(p, IntLaurent2.one())

    @classmethod
    def one(cls):
        return cls(IntLaurent2.one())

    @classmethod
    def zero(cls):
        return cls(IntLaurent2.zero())

    def is_zero(self):
        return not self.num

    def is_poly(self):
        return self.den.d == {(0, 0): 1}

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RationalTM):
            return NotImplemented
        return _mul2(self.num.d, other.den.d) == _mul2(other.num.d, self.den.d)

    def __hash__(self):
        raise TypeError("RationalTM is unhashable (equality is by cross-multiplication)")

    def __neg__(self):
        return RationalTM(-self.num, self.den)

    def __add__(self, other):
        if isinstance(other, IntLaurent2):
            other = RationalTM.from_poly(other)
        if self.den == other.den:
            return RationalTM(self.num + other.num, self.den)
        return RationalTM(
            poly_mul(self.num, other.den) + poly_mul(other.num, self.den),
            poly_mul(self.den, other.den),
        )

    def __sub__(self, other):
        if isinstance(other, IntLaurent2):
            other = RationalTM.from_poly(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, IntLaurent2):
            other = RationalTM.from_poly(other)
        # cancel across the product first: it keeps intermediate sizes down
        a_num, a_den = self.num, self.den
        b_num, b_den = other.num, other.den
        try:
            a_num = IntLaurent2(_div2(a_num.d, b_den.d))
            b_den = IntLaurent2.one()
        except NotDivisible:
            pass
        try:
            b_num = IntLaurent2(_div2(b_num.d, a_den.d))
            a_den = IntLaurent2.one()
        except NotDivisible:
            pass
        return RationalTM(poly_mul(a_num, b_num), poly_mul(a_den, b_den))

    def inverse(self):
        if not self.num:
            raise DivByZero("inverting zero")
        return RationalTM(self.den, self.num)

    def realize(self, n):
        """Numerator and denominator at color n, as one-variable polynomials."""
        return substitute_M(self.num, n), substitute_M(self.den, n)

    def text(self):
        if self.is_poly():
            return self.num.text()
        return f"({self.num.text()}) / ({self.den.text()})"

    def __repr__(self):
        return f"RationalTM({self.text()})"


# ---------------------------------------------------------------------------
# fraction in M alone (fully reduced, canonical)
# ---------------------------------------------------------------------------


def _dense(d, lo, hi):
    out = [0] * (hi - lo + 1)
    for e, c in d.items():
        out[e - lo] = c
    return out


def _deg(u):
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i
    return -1


def _prim(u):
    g = 0
    for c in u:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        u = [c // g for c in u]
    d = _deg(u)
    if d >= 0 and u[d] < 0:
        u = [-c for c in u]
    return u[: d + 1] if d >= 0 else []

def _prem(u, v):
    """Pseudo-remainder of dense integer polynomials (lists, low-to-high)."""
    dv = _deg(v)
    lv = v[dv]
    r = list(u)
    dr = _deg(r)
    while dr >= dv:
        lead = r[dr]
        r = [c * lv for c in r]
        shift = dr - dv
        for i in range(dv + 1):
            r[i + shift] -= lead * v[i]
        dr = _deg(r)
    return r


def _gcd_dense(u, v):
    u = _prim(u)
    v = _prim(v)
    if not u:
        return v or [1]
    if not v:
        return u
    if _deg(u) < _deg(v):
        u, v = v, u
    while v:
        r = _prim(_prem(u, v))
        u, v = v, r
    return u


class RationalM:
    """Reduced fraction of integer Laurent polynomials in ``M``.

    Fully canonical: common polynomial factors are removed (gcd via a
    primitive pseudo-remainder sequence), the denominator is monomial- and
    sign-normalized (minimum exponent 0; lowest-exponent coefficient
    positive), and the shared integer content is 1.  Equality is
    structural.

    >>> RationalM({1: 1, 0: 1}, {2: 1, 1: 1}).text()
    'M^-1'
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = {0: 1}
        num = {e: c for e, c in num.items() if c}
        den = {e: c for e, c in den.items() if c}
        if not den:
            raise DivByZero("zero denominator")
        if not num:
            self.num = {}
            self.den = {0: 1}
            return
        # unit-normalize the denominator
        d0 = min(den)
        if d0:
            den = {e - d0: c for e, c in den.items()}
            num = {e - d0: c for e, c in num.items()}
        if den != {0: 1}:
            n0 = min(num)
            nu = _dense(num, n0, max(num))
            de = _dense(den, 0, max(den))
            g = _gcd_dense(nu, de)
            if _deg(g) > 0:
                nu = _div_dense(nu, g)
                de = _div_dense(de, g)
                num = {e + n0: c for e, c in enumerate(nu) if c}
                den = {e: c for e, c in enumerate(de) if c}
        cg = gcd(_content(num), _content(den))
        if cg > 1:
            num = {e: c // cg for e, c in num.items()}
            den = {e: c // cg for e, c in den.items()}
        if den[min(den)] < 0:
            num = {e: -c for e, c in num.items()}
            den = {e: -c for e, c in den.items()}
        self.num = num
        self.den = den

    @classmethod
    def from_int(cls, c):
        return cls({0: c} if c else {})

    @classmethod
    def monomial(cls, c=1, e=0):
        return cls({e: c} if c else {})

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RationalM):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    def __neg__(self):
        return RationalM({e: -c for e, c in self.num.items()}, self.den)

    def __add__(self, other):
        if self.den == other.den:
            return RationalM(_merge(self.num, other.num, 1), self.den)
        return RationalM(
            _merge(_mul1(self.num, other.den), _mul1(other.num, self.den), 1),
            _mul1(self.den, other.den),
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RationalM({e: c * other for e, c in self.num.items()} if other else {}, self.den)
        return RationalM(_mul1(self.num, other.num), _mul1(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not other.num:
            raise DivByZero("dividing by zero")
        return RationalM(_mul1(self.num, other.den), _mul1(self.den, other.num))

    def text(self):
        nt = _terms_text(
            [(c, _pow_text("M", e)) for e, c in sorted(self.num.items())]
        )
        if self.den == {0: 1}:
            return nt
        dt = _terms_text(
            [(c, _pow_text("M", e)) for e, c in sorted(self.den.items())]
        )
        return f"({nt}) / ({dt})"

    def __repr__(self):
        return f"RationalM({self.text()})"


def _div_dense(u, v):
    """Exact dense quotient (used only right after a gcd computation)."""
    du, dv = _deg(u), _deg(v)
    q = [0] * (du - dv + 1)
    r = list(u)
    for k in range(du - dv, -1, -1):
        dr = dv + k
        if r[dr] == 0:
            continue
        if r[dr] % v[dv]:
            # the gcd was computed over primitive parts; integer contents can
            # still obstruct exact division, so scale through fractions-free:
            raise NotDivisible("internal: dense quotient not integral")
        c = r[dr] // v[dv]
        q[k] = c
        for i in range(dv + 1):
            r[i + k] -= c * v[i]
    if any(r):
        raise NotDivisible("internal: dense division left a remainder")
    return q


def limit_t_minus1(f):
    """Value of a t-rational function at t = -1, as a reduced RationalM.

    Shared factors of (t + 1) are cancelled first; a genuine pole raises
    :class:`PoleAtMinusOne`.

    >>> num = IntLaurent2({(1, 1): 1, (-1, 1): -1})
    >>> den = IntLaurent2({(1, 0): 1, (-1, 0): -1})
    >>> limit_t_minus1(RationalTM(num, den)).text()
    'M'
    """
    num, den = f.num.d, f.den.d
    if not num:
        return RationalM({})
    t_plus_1 = {(1, 0): 1, (0, 0): 1}
    while True:
        d1 = IntLaurent2(den).eval_t_minus1()
        if d1:
            n1 = IntLaurent2(num).eval_t_minus1()
            return RationalM(n1, d1)
        n1 = IntLaurent2(num).eval_t_minus1()
        if n1:
            raise PoleAtMinusOne("denominator vanishes at t = -1 but numerator does not")
        num = _div2(num, t_plus_1)
        den = _div2(den, t_plus_1)
