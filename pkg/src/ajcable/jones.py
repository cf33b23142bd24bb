"""Colored Jones sequences of torus knots and their cables.

Values are exact one-variable Laurent polynomials in ``t``.  Sequences are
normalized so the unknot value at color ``n`` is the quantum integer
``[n]``, the value at color 0 is 0, and negative colors carry the odd
extension ``f(-n) = -f(n)``.

The module also builds the symbolic-in-color data that the recurrences
are assembled from: the step inhomogeneity ``delta``, and three families
of peel sums (full, alternating, half), each stored as a two-variable
polynomial in ``(t, M)`` with ``M`` standing for ``t^(2n)``, flagged when
a final division by ``t^2 - t^-2`` is still owed.

``verify_identity`` checks every recurrence this package relies on,
exactly, color by color.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algebra import IntLaurent1, IntLaurent2, poly_exact_div, poly_mul, substitute_M
from .qtorus import DiscreteSequence

QINT_DEN = IntLaurent1({2: 1, -2: -1})  # t^2 - t^-2


class BadParams(ValueError):
    """Parameters outside the valid cabling/torus range."""


class OddMCoefficient(ValueError):
    """A color-linear t-exponent whose slope is odd cannot become an M-power."""


def quantum_integer(m):
    """The quantum integer [m] = (t^(2m) - t^(-2m)) / (t^2 - t^-2).

    >>> quantum_integer(3).text()
    't^4 + 1 + t^-4'
    >>> quantum_integer(-2).text()
    '-t^2 - t^-2'
    """
    if m == 0:
        return IntLaurent1()
    a = abs(m)
    sign = 1 if m > 0 else -1
    top = 2 * (a - 1)
    return IntLaurent1({top - 4 * i: sign for i in range(a)})


def unknot_jones(n):
    """Colored Jones value of the unknot at color n (the quantum integer)."""
    return quantum_integer(n)


def unknot_sequence():
    return DiscreteSequence(unknot_jones, name="unknot")


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------


def _check_torus(p, q):
    if q < 2 or abs(p) <= q or gcd(p, q) != 1:
        raise BadParams(f"invalid torus parameters ({p}, {q}): need q >= 2, |p| > q, gcd = 1")


@dataclass(frozen=True)
class CablingParams:
    """An (r, s)-cable over the (p, q) torus knot.

    Requires gcd(p, q) = 1 with |p| > q >= 2, and gcd(r, s) = 1 with
    s >= 2.  ``theorem_applies`` is true when r lies outside the open
    interval between 0 and p*q*s, the regime in which the constructed
    annihilator's minimality argument operates; the annihilator itself
    and the AJ comparison are built for every valid tuple.
    """

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        _check_torus(self.p, self.q)
        if self.s < 2 or gcd(self.r, self.s) != 1:
            raise BadParams(
                f"invalid cabling parameters (r={self.r}, s={self.s}): need s >= 2, gcd(r, s) = 1"
            )

    @property
    def pqs(self):
        return self.p * self.q * self.s

    @property
    def theorem_applies(self):
        lo, hi = sorted((0, self.pqs))
        return not (lo < self.r < hi)

    def as_dict(self):
        return {"p": self.p, "q": self.q, "r": self.r, "s": self.s}


# ---------------------------------------------------------------------------
# torus-knot values
# ---------------------------------------------------------------------------

_TORUS_CACHE = {}


def torus_jones(p, q, n):
    """Colored Jones value of the (p, q) torus knot at color n.

    Computed by the closed summation formula; memoized per (p, q).

    >>> torus_jones(3, 2, 2).text()
    't^-2 + t^-6 + t^-10 - t^-18'
    """
    _check_torus(p, q)
    if n == 0:
        return IntLaurent1()
    if n < 0:
        return -torus_jones(p, q, -n)
    cache = _TORUS_CACHE.setdefault((p, q), {})
    v = cache.get(n)
    if v is not None:
        return v
    pq = p * q
    base = -pq * (n * n - 1)
    acc = {}
    for m in range(-(n - 1), n, 2):
        w = m * q + 1
        if w == 0:
            continue
        e0 = base + pq * m * m + 2 * p * m
        if w > 0:
            top = e0 + 2 * (w - 1)
            sign = 1
            count = w
        else:
            top = e0 + 2 * (-w - 1)
            sign = -1
            count = -w
        for i in range(count):
            e = top - 4 * i
            c = acc.get(e, 0) + sign
            if c:
                acc[e] = c
            else:
                del acc[e]
    v = IntLaurent1(acc)
    cache[n] = v
    return v


def torus_jones_via_step(p, q, n):
    """Same value by iterating the two-step recurrence from colors 0 and 1.

    Independent route kept for cross-checking the closed formula.
    """
    _check_torus(p, q)
    if n == 0:
        return IntLaurent1()
    neg = n < 0
    n = abs(n)
    pq = p * q
    vals = [IntLaurent1(), IntLaurent1.one()]  # colors 0, 1
    for k in range(0, n - 1):
        nxt = vals[k].mul_tpow(-4 * pq * (k + 1)) + delta_term(p, q, k).mul_tpow(-2 * pq * (k + 1))
        vals.append(nxt)
    return -vals[n] if neg else vals[n]


def torus_sequence(p, q):
    return DiscreteSequence(lambda n: torus_jones(p, q, n), name=f"torus({p},{q})")


# ---------------------------------------------------------------------------
# cabled values
# ---------------------------------------------------------------------------

_CABLE_CACHE = {}
_CABLE_CACHE_LIMIT = 8


def cabled_jones(params, n):
    """Colored Jones value of the (r, s)-cable over the (p, q) torus knot.

    >>> cabled_jones(CablingParams(3, 2, 13, 2), 2).text()
    't^-30 + t^-34 + t^-38 + t^-42 + t^-46 - t^-58 - t^-62 - t^-66 + t^-74 - t^-78'
    """
    if n == 0:
        return IntLaurent1()
    if n < 0:
        return -cabled_jones(params, -n)
    cache = _CABLE_CACHE.get(params)
    if cache is None:
        if len(_CABLE_CACHE) >= _CABLE_CACHE_LIMIT:
            try:
                _CABLE_CACHE.pop(next(iter(_CABLE_CACHE)))
            except (KeyError, StopIteration):
                pass
        cache = _CABLE_CACHE.setdefault(params, {})
    v = cache.get(n)
    if v is not None:
        return v
    p, q, r, s = params.p, params.q, params.r, params.s
    rs = r * s
    base = -rs * (n * n - 1)
    acc = {}
    for m in range(-(n - 1), n, 2):
        inner = torus_jones(p, q, m * s + 1)
        if not inner:
            continue
        e0 = base + rs * m * m + 2 * r * m
        for e, c in inner.d.items():
            k = e + e0
            cc = acc.get(k, 0) + c
            if cc:
                acc[k] = cc
            else:
                del acc[k]
    v = IntLaurent1(acc)
    cache[n] = v
    return v


def cable_sequence(params):
    return DiscreteSequence(lambda n: cabled_jones(params, n), name=f"cable{params.as_dict()}")


def clear_caches():
    """Drop all memoized sequence values (frees memory between large runs)."""
    _TORUS_CACHE.clear()
    _CABLE_CACHE.clear()


# ---------------------------------------------------------------------------
# step inhomogeneity and symbolic peel sums
# ---------------------------------------------------------------------------


def delta_term(p, q, j):
    """The inhomogeneous term of the torus two-step recurrence at index j.

    A four-term quotient by ``t^2 - t^-2``; symmetric under
    ``j + 1 -> -(j + 1)``, with value 2 at j = -1.

    >>> delta_term(3, 2, 0).text()
    't^10 + t^6 + t^2 - t^-6'
    """
    _check_torus(p, q)
    u = p + q
    w = q - p
    j1 = j + 1
    num = IntLaurent1(
        [
            (2 * u * j1 + 2, 1),
            (-2 * u * j1 + 2, 1),
            (2 * w * j1 - 2, -1),
            (-2 * w * j1 - 2, -1),
        ]
    )
    return poly_exact_div(num, QINT_DEN)


@dataclass(frozen=True)
class SymbolicSequence:
    """A color-symbolic value: polynomial in (t, M) with M = t^(2n).

    When ``needs_qint_div`` is set, realizing at a color still owes an
    exact division by ``t^2 - t^-2`` (the stored numerator form keeps the
    coefficients integral).
    """

    num: IntLaurent2
    needs_qint_div: bool = False

    def realize(self, n):
        f = substitute_M(self.num, n)
        if self.needs_qint_div:
            return poly_exact_div(f, QINT_DEN)
        return f


def _affine_monomial(slope, const, coeff=1):
    """Monomial whose realized t-exponent is ``slope*n + const``.

    The slope turns into an M-power, so it must be even.
    """
    if slope % 2:
        raise OddMCoefficient(f"t-exponent slope {slope} is odd; cannot express as an M-power")
    return IntLaurent2.monomial(coeff, const, slope // 2)


def symbolic_delta(p, q, a, b):
    """Numerator form of the step inhomogeneity at index ``j = a*n + b``.

    >>> symbolic_delta(3, 2, 2, 1).num.text()
    't^-18*M^-10 - t^-6*M^-2 - t^2*M^2 + t^22*M^10'
    """
    _check_torus(p, q)
    u = p + q
    w = q - p
    b1 = b + 1
    acc = IntLaurent2()
    for slope, const, coeff in (
        (2 * u * a, 2 * u * b1 + 2, 1),
        (-2 * u * a, -2 * u * b1 + 2, 1),
        (2 * w * a, 2 * w * b1 - 2, -1),
        (-2 * w * a, -2 * w * b1 - 2, -1),
    ):
        acc = acc + _affine_monomial(slope, const, coeff)
    return SymbolicSequence(acc, needs_qint_div=True)


def symbolic_sum(kind, p, q, s):
    """Peel sums in numerator form: kind "S" (full, s two-steps), "U"
    (alternating single steps, q = 2), or "V" (s/2 two-steps, s even).

    Realized at color n these equal, respectively, the inhomogeneous parts
    of peeling the torus-index from s(n+3)-1, s(n+2)-1 (q = 2) and
    s(n+2)-1 (s even) down to s(n+1)-1.
    """
    _check_torus(p, q)
    if s < 2:
        raise BadParams(f"peel sums need s >= 2, got {s}")
    pq = p * q
    acc = IntLaurent2()
    if kind == "S":
        for k in range(1, s + 1):
            pref = _affine_monomial(2 * pq * s - 4 * pq * s * k, 4 * pq * k * k - 12 * pq * s * k + 6 * pq * s)
            acc = acc + poly_mul(pref, symbolic_delta(p, q, s, 3 * s - 1 - 2 * k).num)
    elif kind == "U":
        if q != 2:
            raise BadParams("alternating peel sum is specific to q = 2")
        for k in range(1, s + 1):
            sign = 1 if k % 2 == 1 else -1
            pref = _affine_monomial(
                2 * p * s - 4 * p * s * k,
                2 * p * k * k - 8 * p * s * k + 2 * p * k + 4 * p * s,
                sign,
            )
            core = _affine_monomial(4 * s, 8 * s - 2 - 4 * k) - _affine_monomial(-4 * s, -8 * s + 2 + 4 * k)
            acc = acc + poly_mul(pref, core)
    elif kind == "V":
        if s % 2:
            raise BadParams("half peel sum needs even s")
        for k in range(1, s // 2 + 1):
            pref = _affine_monomial(2 * pq * s - 4 * pq * s * k, 4 * pq * k * k - 8 * pq * s * k + 4 * pq * s)
            acc = acc + poly_mul(pref, symbolic_delta(p, q, s, 2 * s - 1 - 2 * k).num)
    else:
        raise BadParams(f"unknown peel sum kind {kind!r}; expected S, U or V")
    return SymbolicSequence(acc, needs_qint_div=True)


def cable_step_coefficients(params):
    """Coefficients of the cable two-step relation, symbolic in the color.

    Returns ``{"step": ..., "torus": ..., "delta": ...}`` such that at
    every color n::

        JC(n+2) = step(n)*JC(n) + torus(n)*JT(s(n+1)-1) + delta(n)*DELTA(s(n+1)-1)

    where realization substitutes M = t^(2n).
    """
    p, q, r, s = params.p, params.q, params.r, params.s
    rs = r * s
    pqs = p * q * s
    step = IntLaurent2.monomial(1, -4 * rs, -2 * rs)
    torus = IntLaurent2.monomial(1, 2 * r - 2 * rs - 4 * pqs, r - rs - 2 * pqs) - IntLaurent2.monomial(
        1, -2 * rs - 2 * r, -r - rs
    )
    delta = IntLaurent2.monomial(1, 2 * r - 2 * rs - 2 * pqs, r - rs - pqs)
    return {"step": step, "torus": torus, "delta": delta}


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

IDENTITY_IDS = (
    "TORUS_STEP",
    "Q2_STEP",
    "CABLE_STEP",
    "PEEL",
    "PEEL_S",
    "Q2_PEEL",
    "Q2_PEEL_S",
    "HALF_PEEL",
    "S2_STEP",
)


def _as_params(params):
    if isinstance(params, CablingParams):
        return params
    if isinstance(params, tuple) and len(params) == 2:
        return None  # torus-only
    raise BadParams(f"expected CablingParams or a (p, q) pair, got {params!r}")


def verify_identity(identity_id, params, n_lo, n_hi, m=None):
    """Exactly check one recurrence over colors ``n_lo..n_hi``.

    ``params`` is a :class:`CablingParams` (cable identities need r, s) or
    a plain ``(p, q)`` pair for the torus-only identities.  ``m`` is the
    peel depth for the iterated-peel identities.

    The report lists every failing color with the nonzero residue.
    """
    if identity_id not in IDENTITY_IDS:
        raise BadParams(f"unknown identity {identity_id!r}")
    cp = _as_params(params)
    if cp is None:
        p, q = params
        _check_torus(p, q)
    else:
        p, q = cp.p, cp.q
    needs_cable = identity_id in ("CABLE_STEP", "PEEL_S", "Q2_PEEL_S", "HALF_PEEL", "S2_STEP")
    if needs_cable and cp is None:
        raise BadParams(f"{identity_id} needs full cabling parameters")
    if identity_id in ("PEEL", "Q2_PEEL"):
        if m is None or m < 1:
            raise BadParams(f"{identity_id} needs a peel depth m >= 1")
    if identity_id in ("Q2_STEP", "Q2_PEEL", "Q2_PEEL_S") and q != 2:
        raise BadParams(f"{identity_id} requires q = 2")
    if identity_id == "Q2_PEEL_S" and cp.s % 2 == 0:
        raise BadParams("Q2_PEEL_S requires odd s")
    if identity_id == "HALF_PEEL" and cp.s % 2:
        raise BadParams("HALF_PEEL requires even s")
    if identity_id == "S2_STEP" and cp.s != 2:
        raise BadParams("S2_STEP requires s = 2")

    J = lambda k: torus_jones(p, q, k)  # noqa: E731

    residues = _IDENTITY_CHECKS[identity_id]
    failures = []
    for n in range(n_lo, n_hi + 1):
        res = residues(p, q, cp, n, m, J)
        if res:
            failures.append({"n": n, "residue": res.text()})
    report = {
        "id": identity_id,
        "params": cp.as_dict() if cp is not None else {"p": p, "q": q},
        "n_lo": n_lo,
        "n_hi": n_hi,
        "pass": not failures,
        "failures": failures,
    }
    if m is not None:
        report["m"] = m
    return report


def _res_torus_step(p, q, cp, n, m, J):
    pq = p * q
    rhs = J(n).mul_tpow(-4 * pq * (n + 1)) + delta_term(p, q, n).mul_tpow(-2 * pq * (n + 1))
    return J(n + 2) - rhs


def _res_q2_step(p, q, cp, n, m, J):
    rhs = J(n).mul_tpow(-(4 * n + 2) * p, -1) + quantum_integer(2 * n + 1).mul_tpow(-2 * p * n)
    return J(n + 1) - rhs


def _res_cable_step(p, q, cp, n, m, J):
    coeffs = cable_step_coefficients(cp)
    s = cp.s
    jc = lambda k: cabled_jones(cp, k)  # noqa: E731
    idx = s * (n + 1) - 1
    rhs = (
        poly_mul(substitute_M(coeffs["step"], n), jc(n))
        + poly_mul(substitute_M(coeffs["torus"], n), J(idx))
        + poly_mul(substitute_M(coeffs["delta"], n), delta_term(p, q, idx))
    )
    return jc(n + 2) - rhs


def _res_peel(p, q, cp, n, m, J):
    pq = p * q
    rhs = J(n - 2 * m).mul_tpow(-4 * pq * m * (n + 1) + 4 * pq * m * (m + 1))
    for k in range(1, m + 1):
        rhs = rhs + delta_term(p, q, n - 2 * k).mul_tpow(
            (-4 * pq * k + 2 * pq) * n + 4 * pq * k * k - 4 * pq * k + 2 * pq
        )
    return J(n) - rhs


def _res_peel_s(p, q, cp, n, m, J):
    pq, s = p * q, cp.s
    sym = symbolic_sum("S", p, q, s)
    rhs = J(s * (n + 1) - 1).mul_tpow(-4 * pq * s * s * n - 8 * pq * s * s + 4 * pq * s) + sym.realize(n)
    return J(s * (n + 3) - 1) - rhs


def _res_q2_peel(p, q, cp, n, m, J):
    sign = 1 if m % 2 == 0 else -1
    rhs = J(n - m).mul_tpow((-4 * m * n + 2 * m * m) * p, sign)
    for k in range(1, m + 1):
        ks = 1 if k % 2 == 1 else -1
        rhs = rhs + quantum_integer(2 * n + 1 - 2 * k).mul_tpow(
            -(4 * k - 2) * p * n + (2 * k * k - 2 * k + 2) * p, ks
        )
    return J(n) - rhs


def _res_q2_peel_s(p, q, cp, n, m, J):
    s = cp.s
    sym = symbolic_sum("U", p, q, s)
    rhs = J(s * (n + 1) - 1).mul_tpow(-4 * p * s * s * n + 4 * p * s - 6 * p * s * s, -1) + sym.realize(n)
    return J(s * (n + 2) - 1) - rhs


def _res_half_peel(p, q, cp, n, m, J):
    pq, s = p * q, cp.s
    sym = symbolic_sum("V", p, q, s)
    rhs = J(s * (n + 1) - 1).mul_tpow(-2 * pq * s * s * n - 3 * pq * s * s + 2 * pq * s) + sym.realize(n)
    return J(s * (n + 2) - 1) - rhs


def _res_s2_step(p, q, cp, n, m, J):
    pq, r = p * q, cp.r
    jc = lambda k: cabled_jones(cp, k)  # noqa: E731
    res1 = jc(n + 1) - (J(2 * n + 1).mul_tpow(-2 * r * n) + jc(n).mul_tpow(-4 * r * n - 2 * r, -1))
    if res1:
        return res1
    res2 = J(2 * n + 3) - (
        J(2 * n + 1).mul_tpow(-8 * pq * (n + 1)) + delta_term(p, q, 2 * n + 1).mul_tpow(-4 * pq * (n + 1))
    )
    return res2


_IDENTITY_CHECKS = {
    "TORUS_STEP": _res_torus_step,
    "Q2_STEP": _res_q2_step,
    "CABLE_STEP": _res_cable_step,
    "PEEL": _res_peel,
    "PEEL_S": _res_peel_s,
    "Q2_PEEL": _res_q2_peel,
    "Q2_PEEL_S": _res_q2_peel_s,
    "HALF_PEEL": _res_half_peel,
    "S2_STEP": _res_s2_step,
}


def applicable_identities(params, max_peel=4):
    """Which identities (with peel depths) apply to one parameter tuple."""
    cp = params if isinstance(params, CablingParams) else None
    q = cp.q if cp is not None else params[1]
    out = [("TORUS_STEP", None)]
    out += [("PEEL", m) for m in range(1, max_peel + 1)]
    if q == 2:
        out.append(("Q2_STEP", None))
        out += [("Q2_PEEL", m) for m in range(1, max_peel + 1)]
    if cp is not None:
        out.append(("CABLE_STEP", None))
        out.append(("PEEL_S", None))
        if q == 2 and cp.s % 2 == 1:
            out.append(("Q2_PEEL_S", None))
        if cp.s % 2 == 0:
            out.append(("HALF_PEEL", None))
        if cp.s == 2:
            out.append(("S2_STEP", None))
    return out


def identity_suite(params, n_lo, n_hi, max_peel=4):
    """Run every applicable identity check; returns the list of reports."""
    return [
        verify_identity(identity_id, params, n_lo, n_hi, m)
        for identity_id, m in applicable_identities(params, max_peel)
    ]
