"""Text, JSON and LaTeX renderings shared by the CLI and the HTTP surface."""

from __future__ import annotations

import json
from typing import Any

from app.config import OUTPUT_FORMATS
from app.services.laurent import LaurentPoly, default_names
from app.services.potential import Potential, PotentialKind


def axis_names(mu: int) -> list[str]:
    """t1 .. t_mu followed by the axis variable x."""
    return default_names(mu) + ["x"]


def _check_format(fmt: str) -> str:
    fmt = fmt.strip().lower()
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(f"unknown output format {fmt!r}; expected one of {', '.join(OUTPUT_FORMATS)}")
    return fmt


def potential_latex(p: Potential) -> str:
    value = p.value.to_latex()
    if p.kind is PotentialKind.POLYNOMIAL:
        return rf"\nabla = {value}"
    t = f"t_{{{p.knot_color}}}"
    return rf"\nabla = \frac{{{value}}}{{{t} - {t}^{{-1}}}}"


def axis_payload(poly: LaurentPoly) -> dict[str, Any]:
    return {"variables": axis_names(poly.nvars - 1), "value": poly.to_json()}


def render_potential(p: Potential, fmt: str) -> str:
    fmt = _check_format(fmt)
    if fmt == "json":
        return json.dumps(p.to_json(), indent=2)
    if fmt == "latex":
        return potential_latex(p)
    return f"∇ = {p.to_text()}"


def render_axis(poly: LaurentPoly, fmt: str) -> str:
    fmt = _check_format(fmt)
    names = axis_names(poly.nvars - 1)
    if fmt == "json":
        return json.dumps(axis_payload(poly), indent=2)
    if fmt == "latex":
        return rf"\nabla_{{\mathrm{{axis}}}} = {poly.to_latex(names)}"
    return f"∇ axis = {poly.to_text(names)}"
