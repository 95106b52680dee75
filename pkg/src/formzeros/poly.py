"""Dense univariate polynomials with exact coefficients.

A Poly stores its coefficients in ascending order of the power of the
indeterminate, with no trailing zeros: the zero polynomial has an empty
coefficient tuple.  Coefficients are Python ints or Fractions; a
Fraction that happens to be integral is normalised to int, so an
integer polynomial always has plain int coefficients and equality is
structural.  All arithmetic is exact -- no floats enter anywhere.

The canonical text form writes terms in descending powers over the
indeterminate ``t`` with a ``*`` between coefficient and power and unit
coefficients suppressed::

    >>> p = Poly.parse("2*t^2 - t + 1")
    >>> p * Poly.parse("t + 1")
    Poly('2*t^3 + t^2 + 1')
    >>> Poly.parse("t^2-t+1") * Poly.parse("t+1")
    Poly('t^3 + 1')

The parser accepts arbitrary whitespace and term order and, when
``allow_fractions`` is set (used for minimal polynomials), ``p/q``
coefficients.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import PolynomialParseError

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+(?:\s*/\s*\d+)?)\s*(?:\*\s*(?P<var1>t)(?:\s*\^\s*(?P<exp1>\d+))?)?
          | (?P<var2>t)(?:\s*\^\s*(?P<exp2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """An exact dense polynomial in one indeterminate."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [_norm_coeff(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        return cls((0,) * k + (c,))

    @classmethod
    def parse(cls, text: str, allow_fractions: bool = False) -> "Poly":
        """Parse the signed-integer-coefficient grammar over ``t``.

        Rational ``p/q`` coefficients are rejected unless
        ``allow_fractions`` is set.
        """
        s = text.strip()
        if not s:
            raise PolynomialParseError("empty polynomial string")
        coeffs: dict[int, Fraction] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos:
                raise PolynomialParseError(
                    f"cannot parse polynomial {text!r} at position {pos}"
                )
            sign = m.group("sign")
            if sign is None and not first:
                raise PolynomialParseError(
                    f"missing +/- between terms in {text!r} at position {pos}"
                )
            sgn = -1 if sign == "-" else 1
            raw = m.group("coeff")
            if raw is not None:
                raw = raw.replace(" ", "")
                if "/" in raw:
                    if not allow_fractions:
                        raise PolynomialParseError(
                            f"fractional coefficient {raw!r} not allowed here"
                        )
                    num, den = raw.split("/")
                    if int(den) == 0:
                        raise PolynomialParseError(f"zero denominator in {raw!r}")
                    coeff = Fraction(int(num), int(den))
                else:
                    coeff = Fraction(int(raw))
            else:
                coeff = Fraction(1)
            if m.group("var1") is not None:
                exp = int(m.group("exp1") or 1)
            elif m.group("var2") is not None:
                exp = int(m.group("exp2") or 1)
            else:
                exp = 0
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + sgn * coeff
            pos = m.end()
            first = False
        deg = max(coeffs)
        return cls([coeffs.get(i, 0) for i in range(deg + 1)])

    # -- basic structure ---------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self):
        return self.coeffs[0] if self.coeffs else 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return -(self - other)

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        """Division over the rationals; always exact as a field step."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.leading
        if lead in (1, -1):
            # unit leading coefficient: stay in the base ring
            for i in range(len(rem) - 1, d - 1, -1):
                c = rem[i] if lead == 1 else -rem[i]
                if c:
                    q[i - d] = c
                    for j, b in enumerate(other.coeffs):
                        rem[i - d + j] -= c * b
            return Poly(q), Poly(rem)
        lead = Fraction(lead)
        for i in range(len(rem) - 1, d - 1, -1):
            c = Fraction(rem[i]) / lead
            if c:
                q[i - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= c * b
        return Poly(q), Poly(rem)

    def exact_div(self, other) -> "Poly":
        """Division known to be remainder-free; raises if it is not."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact polynomial division: {self} / {other}")
        return q

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    # -- integer-polynomial structure --------------------------------

    def content(self) -> int:
        """Gcd of the integer coefficients (0 for the zero polynomial)."""
        if not self.is_integral():
            raise ValueError("content of a non-integral polynomial")
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        return g

    def primitive(self) -> "Poly":
        """Divide out the content and force a positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return Poly([c // g for c in self.coeffs])

    def clear_denominators(self) -> "Poly":
        """Smallest positive integer multiple with integer coefficients."""
        lcm = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        return Poly([c * lcm for c in self.coeffs])

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("monic form of the zero polynomial")
        lead = Fraction(self.leading)
        return Poly([Fraction(c) / lead for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        """Exact evaluation by Horner's rule; x may be int or Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "Poly":
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return Poly((0,) * k + self.coeffs)

    def lowest_power(self) -> int:
        """Exponent of the smallest power with nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def strip_powers(self) -> tuple[int, "Poly"]:
        """Split off the t**k factor: returns (k, self / t**k)."""
        if self.is_zero():
            return 0, self
        k = self.lowest_power()
        return k, Poly(self.coeffs[k:])

    def reversal(self, window: int | None = None) -> "Poly":
        """Coefficient reversal within degree ``window`` (default: degree).

        For a polynomial p of degree n this is t**n * p(1/t).
        """
        n = self.degree if window is None else window
        if n < self.degree:
            raise ValueError("reversal window smaller than the degree")
        out = [0] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return Poly(out)

    # -- rendering ---------------------------------------------------

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = var if k == 1 else f"{var}^{k}"
            else:
                body = f"{mag}*{var}" if k == 1 else f"{mag}*{var}^{k}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({self.format()!r})"


def gcd_primitive(a: Poly, b: Poly) -> Poly:
    """Content-normalised gcd of two integer polynomials.

    The result is primitive with positive leading coefficient; the gcd
    of two zero polynomials is zero.  Computed over the rationals (the
    roots are what matters) and re-primitivised, which is the Gauss
    route: a common factor over Q lifts to a primitive one over Z.
    """
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    return a.clear_denominators().primitive()


def radical(p: Poly) -> Poly:
    """Square-free part of an integer polynomial, primitive, positive lead."""
    if p.is_zero():
        return p
    if p.degree == 0:
        return Poly.one()
    g = gcd_primitive(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return p.exact_div(g).clear_denominators().primitive()
