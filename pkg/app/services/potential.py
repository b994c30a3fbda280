"""The Conway potential function of a colored braid closure.

Two independent routes are provided: the direct determinant formula over the
reduced Gassner matrix, and the route through the braid axis, which computes
the potential of the closure together with its axis in one extra variable and
then removes the axis by setting that variable to 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Sequence

from app.services.braid import ClosureInfo, ColoredBraid, closure_info, monomial_weight
from app.services.gassner import word_matrix
from app.services.laurent import (
    LaurentPoly,
    NotDivisible,
    bar_involution,
    default_names,
    determinant,
    exact_div,
    specialize_one,
    square_variables,
)

logger = logging.getLogger(__name__)


class PotentialKind(str, Enum):
    POLYNOMIAL = "polynomial"
    KNOT_FRACTION = "knot_fraction"


@dataclass(frozen=True)
class Potential:
    """For knots ``value`` is the numerator D with implied denominator t_k - t_k^-1."""

    kind: PotentialKind
    value: LaurentPoly
    components: int
    knot_color: int | None = None

    def __post_init__(self) -> None:
        if self.kind is PotentialKind.POLYNOMIAL and self.components < 2:
            raise ValueError("a polynomial potential needs at least two components")
        if self.kind is PotentialKind.KNOT_FRACTION and (self.components != 1 or self.knot_color is None):
            raise ValueError("a knot fraction needs exactly one component and its colour")

    @property
    def nvars(self) -> int:
        return self.value.nvars

    def denominator(self) -> LaurentPoly:
        if self.kind is PotentialKind.POLYNOMIAL:
            return LaurentPoly.one(self.nvars)
        t = LaurentPoly.variable(self.nvars, self.knot_color)
        return t - t ** -1

    def denominator_text(self) -> str:
        if self.kind is PotentialKind.POLYNOMIAL:
            return "1"
        return f"t{self.knot_color} - t{self.knot_color}^-1"

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if self.kind is PotentialKind.POLYNOMIAL:
            return self.value.to_text(names)
        names = list(names) if names is not None else default_names(self.nvars)
        t = names[self.knot_color - 1]
        return f"({self.value.to_text(names)}) / ({t} - {t}^-1)"

    def extend(self, nvars: int) -> Potential:
        return Potential(self.kind, self.value.extend(nvars), self.components, self.knot_color)

    def to_json(self) -> dict[str, Any]:
        return {
            "components": self.components,
            "kind": self.kind.value,
            "value": self.value.to_json(),
            "denominator": self.denominator_text(),
        }


def strand_sign(n: int) -> int:
    """The sign (-1)^(n+1) that makes the formula invariant under stabilization."""
    return -1 if n % 2 == 0 else 1


def same_potential(a: Potential, b: Potential, factor: LaurentPoly | None = None) -> bool:
    """Whether a == factor * b, comparing cross-multiplied numerators."""
    nvars = max(a.nvars, b.nvars, factor.nvars if factor is not None else 0)
    a, b = a.extend(nvars), b.extend(nvars)
    scale = factor.extend(nvars) if factor is not None else LaurentPoly.one(nvars)
    return a.value * b.denominator() == scale * b.value * a.denominator()


def _closure_denominator(b: ColoredBraid, nvars: int) -> LaurentPoly:
    total = b.bottom.total_product(nvars)
    return total - bar_involution(total)


def _divide(numerator: LaurentPoly, denominator: LaurentPoly, b: ColoredBraid) -> LaurentPoly:
    try:
        return exact_div(numerator, denominator)
    except NotDivisible:
        logger.error("Potential numerator of %s is not divisible by %s", b, denominator)
        raise


def _to_potential(numerator: LaurentPoly, b: ColoredBraid, info: ClosureInfo) -> Potential:
    nvars = b.mu
    denominator = _closure_denominator(b, nvars)
    if info.component_count > 1:
        return Potential(PotentialKind.POLYNOMIAL, _divide(numerator, denominator, b), info.component_count)
    color = info.components[0].color
    t = LaurentPoly.variable(nvars, color)
    value = _divide(numerator * (t - t ** -1), denominator, b)
    return Potential(PotentialKind.KNOT_FRACTION, value, 1, color)


def potential_function(b: ColoredBraid) -> Potential:
    info = closure_info(b)
    reduced = word_matrix(b)
    det = determinant(reduced.minus_identity(), nvars=b.mu)
    numerator = monomial_weight(b) * square_variables(det) * strand_sign(b.strands)
    logger.debug("Potential numerator of %s: %s", b, numerator)
    return _to_potential(numerator, b, info)


def axis_variable(mu: int) -> LaurentPoly:
    """The axis variable x, housed as variable mu + 1."""
    return LaurentPoly.variable(mu + 1, mu + 1)


def axis_potential(b: ColoredBraid) -> LaurentPoly:
    """Potential of the closure together with the braid axis, in mu + 1 variables."""
    closure_info(b)
    n = b.strands
    nvars = b.mu + 1
    x = axis_variable(b.mu)
    x_inv = x ** -1
    one = LaurentPoly.one(nvars)
    reduced = word_matrix(b)
    shifted = [
        [x_inv * entry.extend(nvars) - (one if i == j else 0) for j, entry in enumerate(row)]
        for i, row in enumerate(reduced.mat)
    ]
    det = determinant(shifted, nvars=nvars)
    sign = 1 if (n - 1) % 2 == 0 else -1
    return x ** (n - 1) * monomial_weight(b).extend(nvars) * square_variables(det) * sign


def potential_via_axis(b: ColoredBraid) -> Potential:
    info = closure_info(b)
    axis = axis_potential(b)
    numerator = specialize_one(axis, b.mu + 1).restrict(b.mu)
    return _to_potential(numerator, b, info)


def linking_product(info: ClosureInfo, mu: int) -> LaurentPoly:
    """Product over components of x^lambda - x^-lambda, in the axis ring."""
    x = axis_variable(mu)
    product = LaurentPoly.one(mu + 1)
    for linking in info.axis_linking:
        product = product * (x ** linking - x ** -linking)
    return product
