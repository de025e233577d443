"""Exact polynomials, rational generating functions and their pole data.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere.  A :class:`RationalFunction` keeps its denominator in the
split form ``prod_j (1 - j t)^e_j``, which is the shape every Hilbert series
in this package takes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from math import lcm
from numbers import Rational
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Polynomial",
    "RationalFunction",
    "FitError",
    "InsufficientTerms",
    "NoFit",
    "LimitDiverges",
    "fit_rational",
    "residue_at",
    "pole_set",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Polynomial:
    """Univariate polynomial in ``t`` with rational coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        return Polynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-a for a in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for i, b in enumerate(other.coeffs):
                    rem[k - dq + i] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __call__(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial(c / lead for c in self.coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def reciprocal(self, r: int | None = None) -> "Polynomial":
        """``t^r P(1/t)``; ``r`` defaults to the degree."""
        r = self.degree if r is None else r
        if self.degree > r:
            raise ValueError("reciprocal degree smaller than polynomial degree")
        return Polynomial([0] * (r - self.degree) + list(reversed(self.coeffs)))

    def truncate(self, k: int) -> "Polynomial":
        """Terms of degree < k."""
        return Polynomial(self.coeffs[:k])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_list(self) -> list:
        """JSON-friendly coefficients: ints when integral, else ``"p/q"`` strings."""
        return [int(c) if c.denominator == 1 else str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Polynomial({self.to_list()!r})"

    def __str__(self) -> str:
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}{'' if a.denominator == 1 else '*'}{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial([x])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _linear(j) -> Polynomial:
    return Polynomial([1, -_frac(j)])


def _integer_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            if k * k != n:
                out.append(n // k)
        k += 1
    return sorted(out)


def split_denominator(den: Polynomial) -> dict[int, int]:
    """Write ``den / den(0)`` as ``prod (1 - j t)^e``; returns ``{j: e}``.

    Raises ``ValueError`` if ``den(0) == 0`` or if ``den`` has a root that is
    not the reciprocal of a nonzero integer.
    """
    if den.is_zero() or den[0] == 0:
        raise ValueError("denominator must have nonzero constant term")
    rest = Polynomial(c / den[0] for c in den.coeffs)
    factors: dict[int, int] = {}
    if rest.degree == 0:
        return factors
    scale = lcm(*(c.denominator for c in rest.coeffs))
    lead = rest.coeffs[-1] * scale
    candidates = []
    for k in _integer_divisors(int(lead)):
        candidates += [k, -k]
    for j in candidates:
        lin = _linear(j)
        while rest.degree > 0:
            q, r = divmod(rest, lin)
            if not r.is_zero():
                break
            rest = q
            factors[j] = factors.get(j, 0) + 1
    if rest.degree > 0:
        raise ValueError(f"denominator does not split into (1 - j t) factors: leftover {rest}")
    return dict(sorted(factors.items()))


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """``num / prod_j (1 - j t)^e_j`` in lowest terms.

    Build instances with :meth:`from_polys` (which reduces and splits the
    denominator) rather than the raw constructor.
    """

    num: Polynomial
    den: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_polys(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return cls(Polynomial(), ())
        g = poly_gcd(num, den)
        num, den = num.exact_div(g), den.exact_div(g)
        c0 = den[0]
        if c0 == 0:
            raise ValueError("pole at t = 0 is not supported")
        factors = split_denominator(den)
        return cls(Polynomial(c / c0 for c in num.coeffs), tuple(factors.items()))

    @classmethod
    def polynomial(cls, p) -> "RationalFunction":
        return cls(_as_poly(p), ())

    @classmethod
    def geometric(cls, j: int, coeff=1, shift: int = 0) -> "RationalFunction":
        """``coeff * t^shift / (1 - j t)``."""
        return cls.from_polys(Polynomial.monomial(shift, coeff), _linear(j))

    def denominator(self) -> Polynomial:
        out = Polynomial([1])
        for j, e in self.den:
            out = out * _linear(j) ** e
        return out

    def den_factors(self) -> dict[int, int]:
        return dict(self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def series(self, n_terms: int) -> list[Fraction]:
        """First ``n_terms`` power series coefficients."""
        den = self.denominator()
        out: list[Fraction] = []
        for k in range(n_terms):
            acc = self.num[k]
            for i in range(1, min(k, den.degree) + 1):
                acc -= den[i] * out[k - i]
            out.append(acc)
        return out

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        n = self.num * other.denominator() + other.num * self.denominator()
        return RationalFunction.from_polys(n, self.denominator() * other.denominator())

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_as_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _as_rf(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction.from_polys(self.num * other.num, self.denominator() * other.denominator())

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            other = _as_rf(other)
        except TypeError:
            return NotImplemented
        return self.num * other.denominator() == other.num * self.denominator()

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_json(self) -> dict:
        return {"num": self.num.to_list(), "den": [[j, e] for j, e in self.den]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        num = Polynomial(_frac(x) if isinstance(x, str) else x for x in data["num"])
        den = Polynomial([1])
        for j, e in data["den"]:
            den = den * _linear(j) ** e
        return cls.from_polys(num, den)

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        fac = " ".join(_linear_str(j) + (f"^{e}" if e > 1 else "") for j, e in self.den)
        return f"({self.num}) / {fac}"

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_json()!r})"


def _linear_str(j: int) -> str:
    mag = "" if abs(j) == 1 else f"{abs(j)}"
    return f"(1{'-' if j > 0 else '+'}{mag}t)"


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (Polynomial, Rational)):
        return RationalFunction.polynomial(x)
    raise TypeError(f"cannot coerce {x!r} to RationalFunction")


def pole_set(r: RationalFunction) -> set[int]:
    """Integers ``j`` with ``(1 - j t)`` dividing the reduced denominator."""
    return {j for j, _ in r.den}


class LimitDiverges(ArithmeticError):
    """``a_n / j^n`` has no finite limit (a larger or higher-order pole exists)."""


def partial_fraction_coefficient(r: RationalFunction, j: int) -> Fraction:
    """Coefficient of ``1/(1 - j t)`` for a simple pole at ``1/j``."""
    e = r.den_factors().get(j, 0)
    if e == 0:
        return Fraction(0)
    if e > 1:
        raise LimitDiverges(f"pole at 1/{j} has order {e}")
    x = Fraction(1, j)
    rest = Fraction(1)
    for k, m in r.den:
        if k != j:
            rest *= (1 - k * x) ** m
    return r.num(x) / rest


def residue_at(r: RationalFunction, j: int) -> Fraction:
    """``lim a_n / j^n`` for the coefficients ``a_n`` of ``r``.

    This is the partial-fraction coefficient of ``1/(1 - j t)``; the analytic
    residue of ``r`` at ``t = 1/j`` is ``-1/j`` times this number.  Raises
    :class:`LimitDiverges` when the pole at ``1/j`` is not simple or when a
    pole ``1/k`` with ``|k| > j`` is present.
    """
    if j <= 0:
        raise ValueError("j must be a positive integer")
    bigger = sorted(k for k in pole_set(r) if abs(k) > j)
    if bigger:
        raise LimitDiverges(f"poles at 1/{bigger} dominate 1/{j}")
    if any(abs(k) == j and k != j for k in pole_set(r)):
        raise LimitDiverges(f"pole at -1/{j} makes a_n/{j}^n oscillate")
    return partial_fraction_coefficient(r, j)


class FitError(ValueError):
    pass


class InsufficientTerms(FitError):
    """Not enough terms to solve for a candidate and verify it."""


class NoFit(FitError):
    """No candidate denominator reproduces the sequence."""


def _multiplicity_vectors(n_poles: int, mult_bound: int, total: int) -> Iterator[tuple[int, ...]]:
    # lexicographic compositions of `total` into n_poles parts in [0, mult_bound]
    if n_poles == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, mult_bound), -1, -1):
        rest = total - first
        if rest > (n_poles - 1) * mult_bound:
            continue
        for tail in _multiplicity_vectors(n_poles - 1, mult_bound, rest):
            yield (first,) + tail


def _int_den(exps: Sequence[int]) -> list[int]:
    den = [1]
    for j, e in enumerate(exps, start=1):
        for _ in range(e):
            den = [a - j * b for a, b in zip_longest(den + [0], [0] + den, fillvalue=0)]
    return den


def fit_rational(
    terms: Sequence,
    pole_bound: int,
    mult_bound: int,
    *,
    min_verify: int = 5,
    extra_num_degree: int = 0,
) -> RationalFunction:
    """Find ``N(t) / prod_{j<=pole_bound} (1 - j t)^e_j`` matching ``terms``.

    ``terms[k]`` is the coefficient of ``t^k``.  Candidate exponent vectors
    are tried by increasing total degree ``D`` and then lexicographically
    (largest exponent on ``j = 1`` first).  For a candidate the numerator,
    of degree at most ``D + extra_num_degree``, is read off from the first
    terms; every later term is used as verification and at least
    ``min_verify`` of them are required.
    """
    a = [_frac(x) for x in terms]
    if all(x == 0 for x in a):
        if len(a) < min_verify:
            raise InsufficientTerms(f"need at least {min_verify} terms, got {len(a)}")
        return RationalFunction(Polynomial(), ())
    scale = lcm(*(x.denominator for x in a))
    ints = [int(x * scale) for x in a]
    for total in range(pole_bound * mult_bound + 1):
        n_num = total + extra_num_degree + 1
        if n_num + min_verify > len(ints):
            raise InsufficientTerms(
                f"denominators of degree {total} need {n_num + min_verify} terms, "
                f"only {len(ints)} given"
            )
        for exps in _multiplicity_vectors(pole_bound, mult_bound, total):
            den = _int_den(exps)
            ok = True
            for k in range(n_num, len(ints)):
                acc = 0
                for i in range(min(k, len(den) - 1) + 1):
                    acc += den[i] * ints[k - i]
                if acc:
                    ok = False
                    break
            if not ok:
                continue
            num = []
            for k in range(n_num):
                num.append(sum(den[i] * ints[k - i] for i in range(min(k, len(den) - 1) + 1)))
            num_poly = Polynomial(Fraction(c, scale) for c in num)
            return RationalFunction.from_polys(num_poly, Polynomial(den))
    raise NoFit(f"no denominator with poles in 1..{pole_bound}, multiplicity <= {mult_bound} fits")
