"""Exact polynomial arithmetic over the rationals.

UniPoly is a univariate polynomial in the formal variable t; MultiPoly is
a polynomial in variables x1..xn.  Both are immutable, use Fraction
coefficients throughout, and print in a stable canonical form, so golden
comparisons are exact.  A small parser accepts the text format used for
polynomial lifts ("x1^2+x2^2" with rational coefficients).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Sequence


def _format_terms(parts: list[tuple[Fraction, str]]) -> str:
    """Join (coefficient, monomial) pairs into canonical text."""
    if not parts:
        return "0"
    pieces = []
    for coeff, mono in parts:
        mag = -coeff if coeff < 0 else coeff
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"-{body}" if coeff < 0 else f"+{body}")
    return "".join(pieces)


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial; coeffs[i] multiplies t^i, trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    def scale(self, factor) -> "UniPoly":
        f = Fraction(factor)
        return UniPoly(tuple(c * f for c in self.coeffs))

    def __call__(self, t) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner(t)) by Horner's rule."""
        result = UniPoly()
        for c in reversed(self.coeffs):
            result = result * inner + UniPoly((c,))
        return result

    def __str__(self) -> str:
        parts = [
            (c, "1" if i == 0 else ("t" if i == 1 else f"t^{i}"))
            for i, c in enumerate(self.coeffs)
            if c != 0
        ]
        return _format_terms(parts)


def _monomial_text(exponents: tuple[int, ...]) -> str:
    factors = [
        f"x{j + 1}" if e == 1 else f"x{j + 1}^{e}"
        for j, e in enumerate(exponents)
        if e != 0
    ]
    return "*".join(factors) if factors else "1"


class MultiPoly:
    """Polynomial in x1..xn, stored as exponent-tuple -> coefficient."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms=None):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        self.nvars = nvars
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for {nvars} variables")
            clean[exps] = coeff
        self._terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        """The monomial x_{index+1}."""
        if not 0 <= index < nvars:
            raise ValueError("variable index out of range")
        exps = tuple(1 if j == index else 0 for j in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(
                self.nvars, {e: c * other for e, c in self._terms.items()}
            )
        self._check(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "MultiPoly":
        if power < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        for _ in range(power):
            result = result * self
        return result

    def restrict_axis(self, index: int = 0) -> UniPoly:
        """Restriction to the x_{index+1} axis as a univariate polynomial."""
        coeffs: dict[int, Fraction] = {}
        for exps, coeff in self._terms.items():
            if all(e == 0 for j, e in enumerate(exps) if j != index):
                coeffs[exps[index]] = coeff
        if not coeffs:
            return UniPoly()
        top = max(coeffs)
        return UniPoly(tuple(coeffs.get(i, Fraction(0)) for i in range(top + 1)))

    def linear_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients of x1..xn in the degree-one part."""
        out = []
        for j in range(self.nvars):
            exps = tuple(1 if k == j else 0 for k in range(self.nvars))
            out.append(self._terms.get(exps, Fraction(0)))
        return tuple(out)

    def evaluate(self, point: Sequence) -> Fraction:
        values = [Fraction(v) for v in point]
        if len(values) != self.nvars:
            raise ValueError("point dimension mismatch")
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, exps):
                term *= v**e
            total += term
        return total

    def substitute(self, replacements: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute replacements[j] for x_{j+1}; all must share a variable count."""
        if len(replacements) != self.nvars:
            raise ValueError("need one replacement per variable")
        nvars = replacements[0].nvars
        if any(r.nvars != nvars for r in replacements):
            raise ValueError("replacement variable counts differ")
        total = MultiPoly.zero(nvars)
        for exps, coeff in self._terms.items():
            term = MultiPoly.constant(nvars, coeff)
            for r, e in zip(replacements, exps):
                if e:
                    term = term * r**e
            total = total + term
        return total

    def __str__(self) -> str:
        ordered = sorted(
            self._terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )
        return _format_terms([(c, _monomial_text(e)) for e, c in ordered])

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self!s})"


def compose_with(psi: UniPoly, inner: MultiPoly) -> MultiPoly:
    """psi(inner) by Horner's rule."""
    result = MultiPoly.zero(inner.nvars)
    for c in reversed(psi.coeffs):
        result = result * inner + MultiPoly.constant(inner.nvars, c)
    return result


class PolyParseError(ValueError):
    """Raised for malformed polynomial text; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _poly_tokens(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i))
            i = j
        elif ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolyParseError("variable needs an index, e.g. x1", i)
            tokens.append(("var", int(text[i + 1 : j]), i))
            i = j
        elif ch in "+-*/^":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


def parse_polynomial(text: str, nvars: int) -> MultiPoly:
    """Parse text like "x1^2+x2^2", "3/2*x1*x2^3-x1", or "0".

    Terms are products of an optional rational coefficient and powers of
    x1..x<nvars>, joined by "+" and "-".
    """
    tokens = _poly_tokens(text)
    pos = 0

    def peek():
        return tokens[pos]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_factor() -> MultiPoly:
        kind, value, at = peek()
        if kind != "var":
            raise PolyParseError("expected a variable", at)
        advance()
        if not 1 <= value <= nvars:
            raise PolyParseError(f"variable x{value} out of range (nvars={nvars})", at)
        base = MultiPoly.variable(nvars, value - 1)
        if peek()[0] == "^":
            advance()
            kind, exp, at = peek()
            if kind != "num":
                raise PolyParseError("expected an exponent", at)
            advance()
            return base**exp
        return base

    def parse_term() -> MultiPoly:
        coeff = Fraction(1)
        saw_coeff = False
        if peek()[0] == "num":
            coeff = Fraction(advance()[1])
            saw_coeff = True
            if peek()[0] == "/":
                advance()
                kind, den, at = peek()
                if kind != "num":
                    raise PolyParseError("expected a denominator", at)
                advance()
                if den == 0:
                    raise PolyParseError("division by zero", at)
                coeff /= den
            if peek()[0] == "*":
                advance()
            else:
                return MultiPoly.constant(nvars, coeff)
        result = parse_factor()
        while peek()[0] == "*":
            advance()
            result = result * parse_factor()
        return result * coeff if saw_coeff else result

    total = MultiPoly.zero(nvars)
    negate = False
    if peek()[0] == "-":
        advance()
        negate = True
    term = parse_term()
    total = total + (-term if negate else term)
    while peek()[0] in ("+", "-"):
        op = advance()[0]
        term = parse_term()
        total = total + (-term if op == "-" else term)
    kind, value, at = peek()
    if kind != "end":
        raise PolyParseError(f"unexpected {value!r}", at)
    return total
