"""Exact univariate polynomials and rational generating functions.

Coefficients are Python integers throughout; floating point only shows up
when a root is reported.  Rational functions are kept reduced with a
denominator whose constant term is ``+1``, so the power series expansion is
integral and the representation is unique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .automata import Dfa, coaccessible_states, count_by_length, minimize, trim_accessible

# Above this many useful states the generating function is recovered from the
# counting sequence instead of by elimination on I - tA.
ELIMINATION_LIMIT = 48


class IntPolynomial:
    """Polynomial in ``t`` with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        return IntPolynomial(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "IntPolynomial":
        g = self.content()
        if g == 0:
            return self
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = divmod_rational(self, other)
        if any(x != 0 for x in r) or any(x.denominator != 1 for x in q):
            raise ArithmeticError(f"{other} does not divide {self} in Z[t]")
        return IntPolynomial(int(x) for x in q)

    def divides(self, other: "IntPolynomial") -> bool:
        q, r = divmod_rational(other, self)
        return not any(r) and all(x.denominator == 1 for x in q)


def _as_poly(x) -> IntPolynomial:
    return x if isinstance(x, IntPolynomial) else IntPolynomial([x])


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def format_poly(coeffs: Sequence[int], var: str = "t") -> str:
    """Ascending powers: ``1 - t^5 - t^7``."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def divmod_rational(a: IntPolynomial, b: IntPolynomial):
    """Quotient and remainder over the rationals, as Fraction lists."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in a.coeffs]
    lead = Fraction(b.coeffs[-1])
    db = b.degree
    if len(rem) - 1 < db:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] / lead
        quot[k - db] = c
        if c:
            for j, y in enumerate(b.coeffs):
                rem[k - db + j] -= c * y
    rem = rem[:db]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def series_div_exact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact quotient ``a / b`` in Z[t] when ``b(0) == +-1`` and ``b`` divides ``a``."""
    b0 = b[0]
    if b0 not in (1, -1):
        raise ArithmeticError("constant term must be a unit")
    if not a:
        return []
    nq = len(a) - len(b) + 1
    if nq <= 0:
        raise ArithmeticError("division is not exact")
    q = [0] * nq
    for i in range(nq):
        acc = a[i]
        for j in range(1, min(i, len(b) - 1) + 1):
            acc -= b[j] * q[i - j]
        q[i] = acc * b0
    return q


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor in Z[t] (primitive remainder sequence), positive leading coefficient."""
    if a.is_zero():
        return b.primitive_part()
    if b.is_zero():
        return a.primitive_part()
    content = math.gcd(a.content(), b.content())
    x, y = a.primitive_part(), b.primitive_part()
    if x.degree < y.degree:
        x, y = y, x
    while not y.is_zero():
        r = _pseudo_rem(x, y)
        x, y = y, (r.primitive_part() if not r.is_zero() else r)
    return x.primitive_part() * content


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    r = list(a.coeffs)
    db = b.degree
    lead = b.coeffs[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1
        c = r[k]
        r = [lead * x for x in r]
        for j, y in enumerate(b.coeffs):
            r[k - db + j] -= c * y
        while r and r[-1] == 0:
            r.pop()
    return IntPolynomial(r)


@dataclass(frozen=True)
class RationalFunction:
    num: IntPolynomial
    den: IntPolynomial

    @classmethod
    def make(cls, num, den) -> "RationalFunction":
        """Reduce and normalize so that ``den(0) > 0`` and there is no common factor."""
        num = IntPolynomial(num) if isinstance(num, (list, tuple)) else _as_poly(num)
        den = IntPolynomial(den) if isinstance(den, (list, tuple)) else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return cls(IntPolynomial(), IntPolynomial([1]))
        g = poly_gcd(num, den)
        if g.degree > 0 or abs(g[0]) != 1:
            num, den = num.exact_div(g), den.exact_div(g)
        c = math.gcd(num.content(), den.content())
        if c > 1:
            num = IntPolynomial(x // c for x in num.coeffs)
            den = IntPolynomial(x // c for x in den.coeffs)
        if den[0] == 0:
            raise ValueError("denominator vanishes at t = 0; not a power series")
        if den[0] < 0:
            num, den = -num, -den
        return cls(num, den)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and self.den[0] == 1

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def to_dict(self) -> dict:
        return {"num": list(self.num.coeffs), "den": list(self.den.coeffs)}

    @classmethod
    def from_dict(cls, d: dict) -> "RationalFunction":
        return cls.make(IntPolynomial(d["num"]), IntPolynomial(d["den"]))

    def __add__(self, other: "RationalFunction"):
        return RationalFunction.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RationalFunction"):
        return RationalFunction.make(self.num * other.num, self.den * other.den)

    def coefficients(self, length: int) -> list[int]:
        return series_coefficients(self, length)


def series_coefficients(f: RationalFunction, length: int) -> list[int]:
    """Taylor coefficients ``a_0..a_length`` using the recurrence carried by the denominator."""
    den = f.den.coeffs
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out = []
    for n in range(length + 1):
        acc = f.num[n]
        for j in range(1, min(n, len(den) - 1) + 1):
            acc -= den[j] * out[n - j]
        out.append(acc)
    return out


# ---------------------------------------------------------------- automata

def _elimination_gf(delta, finals, initial) -> RationalFunction:
    """Cramer's rule on ``(I - tA) x = 1_F`` by fraction-free (Bareiss) elimination.

    The unknown for the initial state is placed last, so the final pivot is
    ``det(I - tA)`` and the last right-hand side entry is the numerator.  All
    leading principal minors have constant term 1, so no pivoting is needed.
    """
    states = sorted(delta)
    states.remove(initial)
    states.append(initial)
    pos = {q: i for i, q in enumerate(states)}
    n = len(states)
    # rows of polynomials as coefficient lists; column n is the right-hand side
    mat = [[[] for _ in range(n + 1)] for _ in range(n)]
    for q in states:
        i = pos[q]
        row = mat[i]
        row[i] = [1]
        for r in delta[q]:
            j = pos[r]
            entry = row[j] if row[j] else [0]
            entry = entry + [0] * (2 - len(entry))
            entry[1] -= 1
            row[j] = _trim(entry)
        row[n] = [1] if q in finals else []
    prev = [1]
    for k in range(n - 1):
        pivot = mat[k][k]
        for i in range(k + 1, n):
            aik = mat[i][k]
            rowi, rowk = mat[i], mat[k]
            for j in range(k + 1, n + 1):
                val = _sub(_mul(pivot, rowi[j]), _mul(aik, rowk[j])) if aik else _mul(pivot, rowi[j])
                rowi[j] = _trim(series_div_exact(val, prev)) if val else []
            rowi[k] = []
        prev = pivot
    det = mat[n - 1][n - 1]
    numer = mat[n - 1][n]
    return RationalFunction.make(IntPolynomial(numer), IntPolynomial(det))


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def berlekamp_massey(seq: Sequence[int]) -> list[Fraction]:
    """Shortest connection polynomial ``C`` (``C[0] = 1``) with ``C * seq`` a polynomial of degree below its length."""
    s = [Fraction(x) for x in seq]
    c, b = [Fraction(1)], [Fraction(1)]
    length, shift, last = 0, 1, Fraction(1)
    for n in range(len(s)):
        d = s[n]
        for i in range(1, length + 1):
            d += c[i] * s[n - i]
        if d == 0:
            shift += 1
            continue
        coef = d / last
        t = c[:]
        c = c + [Fraction(0)] * max(0, len(b) + shift - len(c))
        for i, x in enumerate(b):
            c[i + shift] -= coef * x
        if 2 * length <= n:
            length = n + 1 - length
            b, last, shift = t, d, 1
        else:
            shift += 1
    c = c[:length + 1] + [Fraction(0)] * max(0, length + 1 - len(c))
    return c


def _recurrence_gf(a: Dfa, bound: int) -> RationalFunction:
    """Rebuild the generating function from ``2 * bound + 2`` counts.

    With ``bound`` states the series is ``P/Q`` with ``deg Q <= bound`` and
    ``deg P < bound``, i.e. a linear recurrence of order at most ``bound``;
    Berlekamp-Massey on twice that many terms recovers it exactly.
    """
    counts = count_by_length(a, 2 * bound + 2)
    c = berlekamp_massey(counts)
    length = len(c) - 1
    den_f = c
    num_f = [sum(den_f[j] * counts[k - j] for j in range(min(k, length) + 1)) for k in range(length)]
    scale = 1
    for x in den_f + num_f:
        scale = scale * x.denominator // math.gcd(scale, x.denominator)
    num = IntPolynomial(int(x * scale) for x in num_f)
    den = IntPolynomial(int(x * scale) for x in den_f)
    f = RationalFunction.make(num, den)
    if series_coefficients(f, len(counts) - 1) != counts:
        raise ArithmeticError("recurrence reconstruction failed")
    return f


def dfa_generating_function(a: Dfa, method: str = "auto") -> RationalFunction:
    """Length generating function of ``L(a)`` as a reduced rational function.

    ``method`` is ``"elimination"``, ``"recurrence"`` or ``"auto"`` (elimination
    for small automata, recurrence reconstruction otherwise).
    """
    if method not in ("auto", "elimination", "recurrence"):
        raise ValueError(f"unknown method {method!r}")
    a = trim_accessible(a)
    live = coaccessible_states(a)
    if a.initial not in live:
        return RationalFunction.make(IntPolynomial(), IntPolynomial([1]))
    if method == "auto" and len(live) > ELIMINATION_LIMIT:
        a = minimize(a)
        live = coaccessible_states(a)
    if method == "recurrence" or (method == "auto" and len(live) > ELIMINATION_LIMIT):
        return _recurrence_gf(a, len(live))
    delta = {q: [r for r in a.delta[q] if r in live] for q in live}
    return _elimination_gf(delta, a.finals, a.initial)


# ---------------------------------------------------------------- analysis

@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial."""
    p = IntPolynomial([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


def euler_phi(n: int) -> int:
    result, k, m = n, 2, n
    while k * k <= m:
        if m % k == 0:
            while m % k == 0:
                m //= k
            result -= result // k
        k += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class Periodicity:
    periodic: bool
    period: int | None = None
    cyclotomic_orders: tuple[int, ...] = ()


def is_ultimately_periodic(f: RationalFunction) -> Periodicity:
    """Ultimately periodic iff the reduced denominator is a product of distinct cyclotomic factors."""
    den = f.den
    if den.degree <= 0:
        return Periodicity(True, 1, ())
    rest = den
    orders = []
    limit = 2 * den.degree * den.degree + 2
    for n in range(1, limit + 1):
        if euler_phi(n) > rest.degree:
            continue
        phi = cyclotomic(n)
        if phi.divides(rest):
            rest = rest.exact_div(phi)
            orders.append(n)
            if phi.divides(rest):
                return Periodicity(False)
        if rest.degree == 0:
            break
    if rest.degree != 0 or abs(rest[0]) != 1:
        return Periodicity(False)
    period = 1
    for n in orders:
        period = period * n // math.gcd(period, n)
    return Periodicity(True, period, tuple(orders))


def _squarefree(p: IntPolynomial) -> IntPolynomial:
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g) if g.degree > 0 else p.primitive_part()


def _sturm_chain(p: IntPolynomial) -> list[list[Fraction]]:
    chain = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
    while chain[-1] and len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        _, r = divmod_rational(IntPolynomial(_clear(a)), IntPolynomial(_clear(b)))
        if not r:
            break
        chain.append([-x for x in r])
    return chain


def _clear(fr: Sequence[Fraction]) -> list[int]:
    scale = 1
    for x in fr:
        scale = scale * x.denominator // math.gcd(scale, x.denominator)
    return [int(x * scale) for x in fr]


def _eval_frac(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = _eval_frac(poly, x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def roots_in_interval(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``, counted exactly."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    sf = _squarefree(p)
    if sf.degree <= 0:
        return 0
    chain = _sturm_chain(sf)
    return _sign_changes(chain, Fraction(lo)) - _sign_changes(chain, Fraction(hi))


def smallest_positive_root(p: IntPolynomial, tol: float = 1e-12, upper: Fraction = Fraction(1)) -> float | None:
    """Least root of ``p`` in ``(0, upper]``, or ``None``.

    Roots are counted exactly with a Sturm sequence of the squarefree part and
    the interval is bisected on exact rational values.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p.is_zero():
        raise ValueError("zero polynomial")
    sf = _squarefree(p)
    while sf.degree > 0 and sf[0] == 0:
        sf = IntPolynomial(sf.coeffs[1:])
    if sf.degree <= 0:
        return None
    chain = _sturm_chain(sf)
    lo, hi = Fraction(0), Fraction(upper)

    def count(a, b):  # distinct roots in (a, b]
        return _sign_changes(chain, a) - _sign_changes(chain, b)

    if count(lo, hi) == 0:
        return None
    while hi - lo > Fraction(tol) / 4:
        mid = (lo + hi) / 2
        if count(lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)


@dataclass(frozen=True)
class GrowthVerdict:
    kind: str  # finite | ultimately-periodic | exponential | other-subexponential
    period: int | None = None
    root: float | None = None

    @property
    def rate(self) -> float | None:
        return None if self.root is None else 1.0 / self.root

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.period is not None:
            out["period"] = self.period
        if self.root is not None:
            out["root"] = self.root
            out["rate"] = self.rate
        return out

    def __str__(self):
        if self.kind == "ultimately-periodic":
            return f"ultimately-periodic(period {self.period})"
        if self.kind == "exponential":
            return f"exponential(rate {self.rate:.10f}, root {self.root:.10f})"
        return self.kind


def growth_verdict(f: RationalFunction) -> GrowthVerdict:
    """Classify the growth of a nonnegative integer series."""
    if f.is_polynomial():
        return GrowthVerdict("finite")
    per = is_ultimately_periodic(f)
    if per.periodic:
        return GrowthVerdict("ultimately-periodic", period=per.period)
    below_one = roots_in_interval(f.den, Fraction(0), Fraction(1)) - (1 if f.den(1) == 0 else 0)
    if below_one > 0:
        return GrowthVerdict("exponential", root=smallest_positive_root(f.den, upper=Fraction(1)))
    return GrowthVerdict("other-subexponential")


def wfc_series(graph, order=None, cap=None) -> RationalFunction:
    """Generating function of FC elements by length."""
    from .shortlex import build_L_dfa

    kwargs = {} if cap is None else {"cap": cap}
    return dfa_generating_function(build_L_dfa(graph, order, **kwargs))


def geodesic_series(graph, cap=None) -> RationalFunction:
    """FC elements weighted by their number of reduced words."""
    from .fc_recognizer import build_ared

    kwargs = {} if cap is None else {"cap": cap}
    return dfa_generating_function(build_ared(graph, **kwargs))
