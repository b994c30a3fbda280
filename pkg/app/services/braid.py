"""Colored braid words: parsing, colour propagation, composition and closures."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Sequence

from app.services.laurent import LaurentPoly

logger = logging.getLogger(__name__)


class BraidError(ValueError):
    """Raised for malformed braid words, colourings or incompatible boundaries."""


@dataclass(frozen=True)
class ColorSeq:
    """Colours of the n strand endpoints on one boundary of a braid."""

    colors: tuple[int, ...]
    mu: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        if not self.colors:
            raise BraidError("a colour sequence needs at least one strand")
        if self.mu < 1:
            raise BraidError("the number of colours must be at least 1")
        outside = [color for color in self.colors if not 1 <= color <= self.mu]
        if outside:
            raise BraidError(f"colours {outside} are outside 1..{self.mu}")
        missing = sorted(set(range(1, self.mu + 1)) - set(self.colors))
        if missing:
            raise BraidError(f"colouring is not surjective: colours {missing} are unused")

    @classmethod
    def of(cls, colors: Sequence[int]) -> ColorSeq:
        """Build a colour sequence with mu inferred as the largest colour."""
        colors = tuple(colors)
        if not colors:
            raise BraidError("a colour sequence needs at least one strand")
        return cls(colors, max(colors))

    def __len__(self) -> int:
        return len(self.colors)

    def color(self, position: int) -> int:
        """Colour at a 1-based position."""
        return self.colors[position - 1]

    def swap(self, index: int) -> ColorSeq:
        """Exchange the colours at positions ``index`` and ``index + 1``."""
        colors = list(self.colors)
        colors[index - 1], colors[index] = colors[index], colors[index - 1]
        return ColorSeq(tuple(colors), self.mu)

    def extended(self, new_color: int) -> ColorSeq:
        return ColorSeq(self.colors + (new_color,), max(self.mu, new_color))

    def prefix_product(self, length: int, nvars: int | None = None) -> LaurentPoly:
        """The monomial t_{c_1} ... t_{c_length}."""
        nvars = nvars if nvars is not None else self.mu
        exps = [0] * nvars
        for color in self.colors[:length]:
            exps[color - 1] += 1
        return LaurentPoly.monomial(exps)

    def total_product(self, nvars: int | None = None) -> LaurentPoly:
        return self.prefix_product(len(self.colors), nvars)

    def to_text(self) -> str:
        return ",".join(str(color) for color in self.colors)


@dataclass(frozen=True)
class Crossing:
    """The generator sigma_index raised to ``sign``."""

    index: int
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise BraidError(f"crossing sign must be +1 or -1, got {self.sign}")
        if self.index < 1:
            raise BraidError(f"generator index must be positive, got {self.index}")

    def to_int(self) -> int:
        return self.sign * self.index


@dataclass(frozen=True)
class Component:
    """One component of a braid closure: its strands (by starting position) and colour."""

    strands: tuple[int, ...]
    color: int

    @property
    def axis_linking(self) -> int:
        return len(self.strands)


@dataclass(frozen=True)
class ClosureInfo:
    components: tuple[Component, ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def axis_linking(self) -> tuple[int, ...]:
        return tuple(component.axis_linking for component in self.components)


def word_permutation(word: Sequence[Crossing], strands: int) -> tuple[int, ...]:
    """1-based end position of the strand starting at each position."""
    at_position = list(range(1, strands + 1))
    for crossing in word:
        i = crossing.index
        at_position[i - 1], at_position[i] = at_position[i], at_position[i - 1]
    perm = [0] * strands
    for position, strand in enumerate(at_position, start=1):
        perm[strand - 1] = position
    return tuple(perm)


def permutation_cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    cycles = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cycle = []
        current = start
        while current not in seen:
            seen.add(current)
            cycle.append(current)
            current = perm[current - 1]
        cycles.append(tuple(cycle))
    return cycles


@dataclass(frozen=True)
class ColoredBraid:
    """A braid word together with the colour sequence at its first letter."""

    word: tuple[Crossing, ...]
    bottom: ColorSeq
    trace: tuple[ColorSeq, ...] = field(init=False, repr=False, compare=False)
    perm: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        strands = len(self.bottom)
        for crossing in self.word:
            if crossing.index >= strands:
                raise BraidError(
                    f"generator index {crossing.index} needs at least {crossing.index + 1} strands, "
                    f"braid has {strands}"
                )
        trace = [self.bottom]
        for crossing in self.word:
            trace.append(trace[-1].swap(crossing.index))
        object.__setattr__(self, "trace", tuple(trace))
        object.__setattr__(self, "perm", word_permutation(self.word, strands))

    @property
    def strands(self) -> int:
        return len(self.bottom)

    @property
    def mu(self) -> int:
        return self.bottom.mu

    @property
    def top(self) -> ColorSeq:
        return self.trace[-1]

    def is_closed_colorable(self) -> bool:
        return self.top == self.bottom

    def word_text(self) -> str:
        return " ".join(str(crossing.to_int()) for crossing in self.word)

    def __str__(self) -> str:
        return f"[{self.word_text()}] on ({self.bottom.to_text()})"

    def to_json(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "word": [crossing.to_int() for crossing in self.word],
            "bottom": list(self.bottom.colors),
            "top": list(self.top.colors),
            "perm": list(self.perm),
        }
        if self.is_closed_colorable():
            payload["components"] = [
                {"strands": list(component.strands), "color": component.color}
                for component in closure_info(self).components
            ]
        return payload


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise BraidError(f"invalid {what} {token!r}") from exc


def parse_colors(colors: str) -> ColorSeq:
    tokens = [token.strip() for token in colors.split(",")] if colors.strip() else []
    if not tokens:
        raise BraidError("colour list is empty")
    values = []
    for token in tokens:
        value = _parse_int(token, "colour")
        if value < 1:
            raise BraidError(f"invalid colour {token!r}: colours are positive integers")
        values.append(value)
    return ColorSeq.of(values)


def parse_braid(text: str, colors: str) -> ColoredBraid:
    """Parse a whitespace separated signed word such as ``"-1 -1 -2 -2"``."""
    bottom = parse_colors(colors)
    word = []
    for token in text.split():
        value = _parse_int(token, "generator")
        if value == 0:
            raise BraidError("invalid generator '0': generators are nonzero integers")
        word.append(Crossing(abs(value), 1 if value > 0 else -1))
    braid = ColoredBraid(tuple(word), bottom)
    logger.debug("Parsed braid %s", braid)
    return braid


def identity_braid(colors: ColorSeq) -> ColoredBraid:
    return ColoredBraid((), colors)


def generator_braid(index: int, sign: int, colors: ColorSeq, power: int = 1) -> ColoredBraid:
    """The braid sigma_index^(sign * power) starting at ``colors``."""
    return ColoredBraid((Crossing(index, sign),) * power, colors)


def compose(a: ColoredBraid, b: ColoredBraid) -> ColoredBraid:
    """Stack ``a`` on top of ``b``; requires a.top == b.bottom."""
    if a.top != b.bottom:
        raise BraidError(
            f"cannot compose: colours ({a.top.to_text()}) do not match ({b.bottom.to_text()})"
        )
    return ColoredBraid(a.word + b.word, a.bottom)


def include_strand(a: ColoredBraid, new_color: int) -> ColoredBraid:
    """Add a trivial strand of colour ``new_color`` to the right of ``a``."""
    if new_color < 1:
        raise BraidError(f"invalid colour {new_color}: colours are positive integers")
    if new_color > a.mu + 1:
        raise BraidError(f"colour {new_color} would leave colours {a.mu + 1}..{new_color - 1} unused")
    return ColoredBraid(a.word, a.bottom.extended(new_color))


def monomial_weight(b: ColoredBraid) -> LaurentPoly:
    """Product over letters of t_over^(-sign), with over the colour of the over-strand."""
    exps = [0] * b.mu
    for crossing, state in zip(b.word, b.trace):
        position = crossing.index if crossing.sign > 0 else crossing.index + 1
        exps[state.color(position) - 1] -= crossing.sign
    return LaurentPoly.monomial(exps)


def closure_info(b: ColoredBraid) -> ClosureInfo:
    if not b.is_closed_colorable():
        raise BraidError(
            f"braid is not closed-colourable: bottom ({b.bottom.to_text()}) != top ({b.top.to_text()})"
        )
    components = []
    for cycle in permutation_cycles(b.perm):
        colors = {b.bottom.color(strand) for strand in cycle}
        assert len(colors) == 1, f"closure component {cycle} carries colours {colors}"
        components.append(Component(cycle, colors.pop()))
    return ClosureInfo(tuple(components))
