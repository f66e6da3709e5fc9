"""Exact univariate polynomials and factored denominators.

Coefficients are arbitrary-precision rationals.  Integer-valued coefficients
are stored as plain ``int`` (the canonical form); anything else is a
``fractions.Fraction`` in lowest terms.  All arithmetic is exact; there is no
floating-point mode.

A factored denominator is a product of terms (1 - t^i) recorded as an
exponent map ``{i: multiplicity}``.  Since 1 - t^i = -prod_{d|i} phi_d(t)
up to the sign (-1)^(#factors) with monic cyclotomics phi_d, the canonical
form for comparing denominators is the cyclotomic exponent vector
e_d = sum_{d|i} exps[i]; the sign bookkeeping lives entirely in
:meth:`FactoredDenominator.expand`, which always returns the polynomial with
constant term +1.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import NoProductForm, NotDivisible

Coeff = Union[int, Fraction]


def normalize_coeff(c: Coeff) -> Coeff:
    """Collapse integral Fractions to int; leave everything else alone."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Polynomial:
    """Dense exact polynomial in t, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [normalize_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, coeff: Coeff, degree: int) -> "Polynomial":
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> Coeff:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial((self[i] + other[i]) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial((self[i] - other[i]) for i in range(n))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial.zero(), self
        quot = [0] * (dq + 1)
        lead = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + other.degree]
            if c == 0:
                continue
            c = normalize_coeff(Fraction(c) / lead if lead != 1 else c)
            quot[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= c * b
        return Polynomial(quot), Polynomial(rem[: other.degree if other.degree > 0 else 0])

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient self/other; raises NotDivisible on a nonzero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise NotDivisible(f"({self}) is not divisible by ({other})")
        return q

    def __call__(self, x: Coeff) -> Coeff:
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return normalize_coeff(acc)

    def shift(self, d: int) -> "Polynomial":
        """Multiply by t^d."""
        if self.is_zero():
            return self
        return Polynomial((0,) * d + self.coeffs)

    def reflected(self, degree: int | None = None) -> "Polynomial":
        """Coefficient reversal t^degree * p(1/t); degree defaults to deg p."""
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise ValueError("reflection degree below polynomial degree")
        cs = [0] * (degree + 1)
        for i, c in enumerate(self.coeffs):
            cs[degree - i] = c
        return Polynomial(cs)

    def is_palindromic(self) -> bool:
        return not self.is_zero() and self.reflected() == self

    def root_multiplicity(self, factor: "Polynomial") -> int:
        """Number of times ``factor`` divides self exactly."""
        if self.is_zero():
            raise ValueError("zero polynomial has infinite multiplicity")
        count = 0
        p = self
        while True:
            q, r = divmod(p, factor)
            if not r.is_zero():
                return count
            p = q
            count += 1

    def substitute_square(self) -> "Polynomial":
        """Return p(t^2)."""
        out = [0] * (2 * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return Polynomial(out)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                term = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                term = var if mag == 1 else f"{mag}*{var}"
            parts.append((" - " if c < 0 else " + ", term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == " - " else "") + first_term
        for sign, term in parts[1:]:
            text += sign + term
        return text

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def to_json(self) -> list[str]:
        """Serialize as ["num/den", ...] lowest degree first."""
        return [f"{Fraction(c).numerator}/{Fraction(c).denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Iterable[str | int]) -> "Polynomial":
        coeffs = []
        for item in items:
            if isinstance(item, str):
                coeffs.append(Fraction(item))
            else:
                coeffs.append(item)
        return cls(coeffs)


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> Polynomial:
    """The d-th cyclotomic polynomial phi_d, monic with integer coefficients.

    phi_d = (t^d - 1) / prod_{e | d, e < d} phi_e, so prod_{e | d} phi_e
    expands to t^d - 1.
    """
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    p = Polynomial((-1,) + (0,) * (d - 1) + (1,))
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    return p


def one_minus_t_power(i: int) -> Polynomial:
    """The factor 1 - t^i."""
    return Polynomial((1,) + (0,) * (i - 1) + (-1,))


class FactoredDenominator:
    """Product of factors (1 - t^i) kept in factored form.

    ``exps`` maps i to the multiplicity of (1 - t^i); zero entries are
    dropped.  Expansion always has constant term 1.
    """

    __slots__ = ("exps", "n_max")

    def __init__(self, exps: Mapping[int, int], n_max: int | None = None):
        cleaned = {}
        for i, e in sorted(exps.items()):
            if i < 1:
                raise ValueError(f"factor index {i} must be >= 1")
            if e < 0:
                raise ValueError(f"negative exponent for (1-t^{i})")
            if e:
                cleaned[int(i)] = int(e)
        self.exps = cleaned
        self.n_max = n_max if n_max is not None else max(cleaned, default=1)
        if any(i > self.n_max for i in cleaned):
            raise ValueError("factor index exceeds n_max")

    @property
    def degree(self) -> int:
        return sum(i * e for i, e in self.exps.items())

    @property
    def total_factors(self) -> int:
        """Number of (1 - t^i) factors counted with multiplicity."""
        return sum(self.exps.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredDenominator):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self):
        return hash(tuple(sorted(self.exps.items())))

    def expand(self) -> Polynomial:
        return _expand_exponents(tuple(sorted(self.exps.items())))

    def cyclotomic_exponents(self) -> dict[int, int]:
        """e_d = sum_{d | i} exps[i], for every d up to n_max."""
        out: dict[int, int] = {}
        for i, e in self.exps.items():
            for d in range(1, i + 1):
                if i % d == 0:
                    out[d] = out.get(d, 0) + e
        return out

    @classmethod
    def from_cyclotomic(cls, e: Mapping[int, int], n_max: int | None = None) -> "FactoredDenominator":
        """Greedy reconstruction of a (1-t^i) product from cyclotomic exponents.

        Works from the largest index down: each remaining e_i forces
        exps[i] = e_i - sum of exps already assigned to proper multiples.
        Raises NoProductForm when that count goes negative.
        """
        e = {d: v for d, v in e.items() if v}
        if not e:
            return cls({}, n_max=n_max)
        top = max(e)
        exps: dict[int, int] = {}
        for i in range(top, 0, -1):
            need = e.get(i, 0) - sum(exps.get(m, 0) for m in range(2 * i, top + 1, i))
            if need < 0:
                raise NoProductForm(
                    f"cyclotomic exponents {dict(sorted(e.items()))} admit no (1-t^i) product form"
                )
            if need:
                exps[i] = need
        return cls(exps, n_max=n_max)

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for i, e in sorted(self.exps.items()):
            base = "(1-t)" if i == 1 else f"(1-t^{i})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FactoredDenominator({self.exps!r})"

    def to_json(self) -> dict[str, int]:
        return {str(i): e for i, e in sorted(self.exps.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "FactoredDenominator":
        return cls({int(i): e for i, e in data.items()})


@functools.lru_cache(maxsize=256)
def _expand_exponents(items: tuple[tuple[int, int], ...]) -> Polynomial:
    p = Polynomial.one()
    for i, e in items:
        p = p * (one_minus_t_power(i) ** e)
    return p


def expand_cyclotomic(e: Mapping[int, int]) -> Polynomial:
    """Expand prod phi_d^{e_d}, sign-normalized to constant term +1."""
    p = Polynomial.one()
    for d, ed in sorted(e.items()):
        if ed:
            p = p * (cyclotomic(d) ** ed)
    if p[0] == -1:
        p = -p
    if p[0] != 1:
        raise ValueError("cyclotomic product has constant term != +-1")
    return p


def cyclotomic_degree(e: Mapping[int, int]) -> int:
    return sum(ed * cyclotomic(d).degree for d, ed in e.items())


class FactoredRationalFunction:
    """numerator / product of (1 - t^i) factors, all arithmetic exact."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: FactoredDenominator):
        self.numerator = numerator
        self.denominator = denominator

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredRationalFunction):
            return NotImplemented
        if self.denominator == other.denominator:
            return self.numerator == other.numerator
        # cross-multiply for exact equality as rational functions
        return (self.numerator * other.denominator.expand()
                == other.numerator * self.denominator.expand())

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def is_reduced(self) -> bool:
        """True when no cyclotomic factor of the denominator divides the numerator."""
        for d, e in self.denominator.cyclotomic_exponents().items():
            if e and self.numerator.root_multiplicity(cyclotomic(d)) > 0:
                return False
        return True

    def __str__(self) -> str:
        return f"({self.numerator}) / {self.denominator}"

    def __repr__(self) -> str:
        return f"FactoredRationalFunction({self.numerator!r}, {self.denominator!r})"
