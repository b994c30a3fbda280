"""Exact sparse arithmetic in Z[t_1^{+-1}, ..., t_m^{+-1}].

Polynomials are immutable: every operation returns a new ``LaurentPoly``.
Terms are kept sorted by the lexicographic order on exponent vectors, which
is the canonical order used for serialization and for leading terms in
exact division.
"""

from __future__ import annotations

import logging
import operator
import re
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

logger = logging.getLogger(__name__)

Exponents = tuple[int, ...]

_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")
_LATEX_FACTOR = re.compile(r"^([A-Za-z]+(?:_\{\d+\})?)(?:\^\{(-?\d+)\})?$")


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def default_names(nvars: int) -> list[str]:
    return [f"t{index}" for index in range(1, nvars + 1)]


def _add_exps(left: Exponents, right: Exponents) -> Exponents:
    return tuple(map(operator.add, left, right))


def _sub_exps(left: Exponents, right: Exponents) -> Exponents:
    return tuple(map(operator.sub, left, right))


def _merge(nvars: int, items: Iterable[tuple[Sequence[int], int]]) -> tuple[tuple[Exponents, int], ...]:
    merged: dict[Exponents, int] = {}
    for exps, coeff in items:
        key = tuple(int(e) for e in exps)
        if len(key) != nvars:
            raise ValueError(f"exponent vector {key} does not have {nvars} entries")
        merged[key] = merged.get(key, 0) + int(coeff)
    return tuple(sorted((exps, coeff) for exps, coeff in merged.items() if coeff != 0))


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial stored as sorted ``(exponents, coefficient)`` pairs."""

    nvars: int
    terms: tuple[tuple[Exponents, int], ...] = ()

    def __post_init__(self) -> None:
        if self.nvars < 0:
            raise ValueError("nvars must be non-negative")
        terms = self.terms.items() if isinstance(self.terms, Mapping) else self.terms
        object.__setattr__(self, "terms", _merge(self.nvars, terms))

    @classmethod
    def zero(cls, nvars: int) -> LaurentPoly:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> LaurentPoly:
        return cls(nvars, (((0,) * nvars, value),))

    @classmethod
    def one(cls, nvars: int) -> LaurentPoly:
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> LaurentPoly:
        return cls(len(exps), ((tuple(exps), coeff),))

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1) -> LaurentPoly:
        """The monomial ``t_index ** power`` (``index`` is 1-based)."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[index - 1] = power
        return cls.monomial(exps)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def as_dict(self) -> dict[Exponents, int]:
        return dict(self.terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.as_dict().get(tuple(exps), 0)

    def leading_term(self) -> tuple[Exponents, int]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[-1]

    def exponent_box(self) -> tuple[Exponents, Exponents]:
        """Componentwise minimum and maximum exponents over all terms."""
        if not self.terms:
            raise ValueError("the zero polynomial has no exponents")
        columns = list(zip(*(exps for exps, _ in self.terms)))
        return tuple(min(col) for col in columns), tuple(max(col) for col in columns)

    def extend(self, nvars: int) -> LaurentPoly:
        """Embed into a ring with more variables (new variables get exponent 0)."""
        if nvars < self.nvars:
            raise ValueError(f"cannot extend {self.nvars} variables down to {nvars}")
        padding = (0,) * (nvars - self.nvars)
        return LaurentPoly(nvars, tuple((exps + padding, coeff) for exps, coeff in self.terms))

    def restrict(self, nvars: int) -> LaurentPoly:
        """Drop trailing variables, which must not occur in any term."""
        if nvars > self.nvars:
            raise ValueError(f"cannot restrict {self.nvars} variables up to {nvars}")
        for exps, _ in self.terms:
            if any(exps[nvars:]):
                raise ValueError("restricted variables still occur in the polynomial")
        return LaurentPoly(nvars, tuple((exps[:nvars], coeff) for exps, coeff in self.terms))

    def _coerce(self, other: Any) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.nvars, tuple((exps, -coeff) for exps, coeff in self.terms))

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> LaurentPoly:
        if power < 0:
            if not self.is_monomial() or abs(self.terms[0][1]) != 1:
                raise ValueError("only unit monomials can be raised to negative powers")
            exps, coeff = self.terms[0]
            return LaurentPoly.monomial(tuple(-e for e in exps), coeff) ** (-power)
        result = LaurentPoly.one(self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, names: Sequence[str] | None = None) -> str:
        """Canonical text form, e.g. ``-1*t1^-1*t2^-1 + 1*t1*t2``."""
        names = list(names) if names is not None else default_names(self.nvars)
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exps, coeff in self.terms:
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e != 0
            ]
            magnitude = str(abs(coeff)) if pieces else str(coeff)
            body = "*".join([magnitude, *factors])
            if pieces:
                pieces.append(("+ " if coeff > 0 else "- ") + body)
            else:
                pieces.append(body)
        return " ".join(pieces)

    def to_latex(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        if not self.terms:
            return "0"
        latex_names = [_latex_name(name) for name in names]
        parts: list[str] = []
        for exps, coeff in self.terms:
            factors = [
                name if e == 1 else f"{name}^{{{e}}}"
                for name, e in zip(latex_names, exps)
                if e != 0
            ]
            magnitude = abs(coeff)
            body = " ".join(factors)
            if not body:
                body = str(magnitude)
            elif magnitude != 1:
                body = f"{magnitude} {body}"
            if parts:
                parts.append(("+ " if coeff > 0 else "- ") + body)
            else:
                parts.append(body if coeff > 0 else f"-{body}")
        return " ".join(parts)

    def to_json(self) -> dict[str, Any]:
        return {
            "nvars": self.nvars,
            "terms": [{"coeff": str(coeff), "exp": list(exps)} for exps, coeff in self.terms],
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> LaurentPoly:
        nvars = int(payload["nvars"])
        return cls(nvars, tuple((tuple(term["exp"]), int(term["coeff"])) for term in payload["terms"]))

    @classmethod
    def parse(cls, text: str, nvars: int, names: Sequence[str] | None = None) -> LaurentPoly:
        """Parse the canonical text form produced by ``to_text``."""
        names = list(names) if names is not None else default_names(nvars)
        if len(names) != nvars:
            raise ValueError(f"expected {nvars} variable names, got {len(names)}")
        positions = {name: index for index, name in enumerate(names)}
        text = text.strip()
        if text == "0":
            return cls.zero(nvars)

        items = []
        for sign, term in _signed_terms(text):
            coeff_text, *factors = term.split("*")
            try:
                coeff = int(coeff_text)
            except ValueError as exc:
                raise ValueError(f"invalid coefficient {coeff_text!r}") from exc
            exps = [0] * nvars
            for factor in factors:
                match = _FACTOR.match(factor)
                if not match or match.group(1) not in positions:
                    raise ValueError(f"invalid factor {factor!r}")
                exps[positions[match.group(1)]] += int(match.group(2) or 1)
            items.append((tuple(exps), -coeff if sign == "-" else coeff))
        return cls(nvars, tuple(items))

    @classmethod
    def parse_latex(cls, text: str, nvars: int, names: Sequence[str] | None = None) -> LaurentPoly:
        """Parse the LaTeX form produced by ``to_latex``."""
        names = list(names) if names is not None else default_names(nvars)
        if len(names) != nvars:
            raise ValueError(f"expected {nvars} variable names, got {len(names)}")
        positions = {_latex_name(name): index for index, name in enumerate(names)}
        text = text.strip()
        if text == "0":
            return cls.zero(nvars)

        items = []
        for sign, term in _signed_terms(text):
            if term.startswith("-"):
                sign, term = ("-" if sign == "+" else "+"), term[1:]
            tokens = term.split()
            coeff = int(tokens.pop(0)) if tokens and tokens[0].isdigit() else 1
            exps = [0] * nvars
            for token in tokens:
                match = _LATEX_FACTOR.match(token)
                if not match or match.group(1) not in positions:
                    raise ValueError(f"invalid factor {token!r}")
                exps[positions[match.group(1)]] += int(match.group(2) or 1)
            items.append((tuple(exps), -coeff if sign == "-" else coeff))
        return cls(nvars, tuple(items))


def _signed_terms(text: str) -> list[tuple[str, str]]:
    chunks = _TERM_SPLIT.split(text)
    return [("+", chunks[0])] + list(zip(chunks[1::2], chunks[2::2]))


def _latex_name(name: str) -> str:
    match = re.match(r"^([A-Za-z]+)(\d+)$", name)
    if match:
        return f"{match.group(1)}_{{{match.group(2)}}}"
    return name


def _check_nvars(p: LaurentPoly, q: LaurentPoly) -> None:
    if p.nvars != q.nvars:
        raise ValueError(f"variable count mismatch: {p.nvars} != {q.nvars}")


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_nvars(p, q)
    return LaurentPoly(p.nvars, p.terms + q.terms)


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_nvars(p, q)
    product: dict[Exponents, int] = {}
    for left_exps, left_coeff in p.terms:
        for right_exps, right_coeff in q.terms:
            key = _add_exps(left_exps, right_exps)
            product[key] = product.get(key, 0) + left_coeff * right_coeff
    return LaurentPoly(p.nvars, product)


def square_variables(p: LaurentPoly) -> LaurentPoly:
    """The endomorphism sending every t_i to t_i^2."""
    return LaurentPoly(p.nvars, tuple((tuple(2 * e for e in exps), coeff) for exps, coeff in p.terms))


def bar_involution(p: LaurentPoly) -> LaurentPoly:
    """The involution sending every t_i to t_i^-1."""
    return LaurentPoly(p.nvars, tuple((tuple(-e for e in exps), coeff) for exps, coeff in p.terms))


def specialize_one(p: LaurentPoly, var_index: int) -> LaurentPoly:
    """Set variable ``var_index`` (1-based) to 1, keeping the variable count."""
    if not 1 <= var_index <= p.nvars:
        raise ValueError(f"variable index {var_index} out of range 1..{p.nvars}")
    position = var_index - 1
    return LaurentPoly(
        p.nvars,
        tuple((exps[:position] + (0,) + exps[position + 1 :], coeff) for exps, coeff in p.terms),
    )


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return q with q * d == p, or raise ``NotDivisible``."""
    _check_nvars(p, d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.nvars)

    # Degrees in each variable add under multiplication, so any quotient
    # must live in this box.
    p_low, p_high = p.exponent_box()
    d_low, d_high = d.exponent_box()
    q_low = _sub_exps(p_low, d_low)
    q_high = _sub_exps(p_high, d_high)
    if any(low > high for low, high in zip(q_low, q_high)):
        raise NotDivisible(f"{p} is not divisible by {d}")

    # Shift the divisor into an honest polynomial; the shift is undone at the end.
    shift = d_low
    divisor = {_sub_exps(exps, shift): coeff for exps, coeff in d.terms}
    lead_exps, lead_coeff = max(divisor.items())
    box_low = _add_exps(q_low, shift)
    box_high = _add_exps(q_high, shift)

    remainder = p.as_dict()
    quotient: dict[Exponents, int] = {}
    while remainder:
        exps = max(remainder)
        coeff = remainder[exps]
        step = _sub_exps(exps, lead_exps)
        if coeff % lead_coeff or any(
            not low <= e <= high for e, low, high in zip(step, box_low, box_high)
        ):
            raise NotDivisible(f"{p} is not divisible by {d}")
        factor = coeff // lead_coeff
        quotient[step] = factor
        for d_exps, d_coeff in divisor.items():
            key = _add_exps(step, d_exps)
            value = remainder.get(key, 0) - factor * d_coeff
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)

    result = LaurentPoly(p.nvars, {_sub_exps(exps, shift): c for exps, c in quotient.items()})
    if result * d != p:
        raise NotDivisible(f"{p} is not divisible by {d}")
    return result


Matrix = Sequence[Sequence[LaurentPoly]]


def _square_size(matrix: Matrix) -> int:
    size = len(matrix)
    for row in matrix:
        if len(row) != size:
            raise ValueError("determinant needs a square matrix")
    return size


def _matrix_nvars(matrix: Matrix, nvars: int | None) -> int:
    if matrix:
        found = matrix[0][0].nvars
        if any(entry.nvars != found for row in matrix for entry in row):
            raise ValueError("matrix entries do not share a variable count")
        if nvars is not None and nvars != found:
            raise ValueError(f"variable count mismatch: {nvars} != {found}")
        return found
    if nvars is None:
        raise ValueError("nvars is required for the empty matrix")
    return nvars


def determinant(matrix: Matrix, nvars: int | None = None) -> LaurentPoly:
    """Exact determinant by fraction-free Bareiss elimination.

    Each row is first multiplied by a monomial so that its entries are
    ordinary polynomials; the accumulated monomial is restored at the end.
    The determinant of the 0x0 matrix is 1.
    """
    size = _square_size(matrix)
    nvars = _matrix_nvars(matrix, nvars)
    if size == 0:
        return LaurentPoly.one(nvars)

    rows: list[list[LaurentPoly]] = []
    total_shift = (0,) * nvars
    for row in matrix:
        nonzero = [entry for entry in row if not entry.is_zero()]
        if not nonzero:
            return LaurentPoly.zero(nvars)
        low = tuple(min(col) for col in zip(*(entry.exponent_box()[0] for entry in nonzero)))
        unshift = LaurentPoly.monomial(tuple(-e for e in low))
        rows.append([entry * unshift for entry in row])
        total_shift = _add_exps(total_shift, low)

    sign = 1
    previous = LaurentPoly.one(nvars)
    for k in range(size - 1):
        if rows[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not rows[i][k].is_zero()), None)
            if swap is None:
                return LaurentPoly.zero(nvars)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = exact_div(rows[i][j] * pivot - rows[i][k] * rows[k][j], previous)
            rows[i][k] = LaurentPoly.zero(nvars)
        previous = pivot

    logger.debug("Bareiss determinant of size %s over %s variables", size, nvars)
    return rows[-1][-1] * LaurentPoly.monomial(total_shift, sign)


def cofactor_determinant(matrix: Matrix, nvars: int | None = None) -> LaurentPoly:
    """Determinant by Laplace expansion along the first row."""
    size = _square_size(matrix)
    nvars = _matrix_nvars(matrix, nvars)
    if size == 0:
        return LaurentPoly.one(nvars)
    total = LaurentPoly.zero(nvars)
    for column, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:column] + row[column + 1 :] for row in (list(r) for r in matrix[1:])]
        term = entry * cofactor_determinant(minor, nvars)
        total = total - term if column % 2 else total + term
    return total
