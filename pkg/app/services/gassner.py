"""Reduced colored Gassner matrices.

The matrix of a word is an anti-representation: reading the word left to
right, the matrix of each new letter multiplies the accumulated product from
the left, so that B(beta gamma) = B(gamma) B(beta).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Sequence

from app.config import settings
from app.services.braid import BraidError, ColorSeq, ColoredBraid, closure_info
from app.services.laurent import LaurentPoly, exact_div

logger = logging.getLogger(__name__)

Rows = tuple[tuple[LaurentPoly, ...], ...]


def identity_rows(size: int, nvars: int) -> Rows:
    one = LaurentPoly.one(nvars)
    zero = LaurentPoly.zero(nvars)
    return tuple(tuple(one if i == j else zero for j in range(size)) for i in range(size))


def matrix_product(left: Sequence[Sequence[LaurentPoly]], right: Sequence[Sequence[LaurentPoly]], nvars: int) -> Rows:
    inner = len(right)
    if any(len(row) != inner for row in left):
        raise ValueError("matrix dimensions do not agree")
    columns = len(right[0]) if right else 0
    zero = LaurentPoly.zero(nvars)
    product = []
    for row in left:
        entries = []
        for j in range(columns):
            total = zero
            for k in range(inner):
                if not row[k].is_zero() and not right[k][j].is_zero():
                    total = total + row[k] * right[k][j]
            entries.append(total)
        product.append(tuple(entries))
    return tuple(product)


@dataclass(frozen=True)
class GassnerMatrix:
    """An (n-1)x(n-1) matrix over the Laurent ring with its boundary colours."""

    mat: Rows
    source: ColorSeq
    target: ColorSeq

    def __post_init__(self) -> None:
        object.__setattr__(self, "mat", tuple(tuple(row) for row in self.mat))
        if len(self.source) != len(self.target):
            raise ValueError("source and target colour sequences differ in length")
        size = len(self.source) - 1
        if len(self.mat) != size or any(len(row) != size for row in self.mat):
            raise ValueError(f"expected a {size}x{size} matrix")

    @classmethod
    def identity(cls, colors: ColorSeq) -> GassnerMatrix:
        return cls(identity_rows(len(colors) - 1, colors.mu), colors, colors)

    @property
    def size(self) -> int:
        return len(self.mat)

    @property
    def nvars(self) -> int:
        return self.source.mu

    def then(self, later: GassnerMatrix) -> GassnerMatrix:
        """The matrix of the composite braid (self's braid first, then ``later``'s)."""
        if self.target != later.source:
            raise BraidError("boundary colours do not match")
        return GassnerMatrix(matrix_product(later.mat, self.mat, self.nvars), self.source, later.target)

    def minus_identity(self) -> Rows:
        one = LaurentPoly.one(self.nvars)
        return tuple(
            tuple(entry - one if i == j else entry for j, entry in enumerate(row))
            for i, row in enumerate(self.mat)
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "source": list(self.source.colors),
            "target": list(self.target.colors),
            "rows": [[entry.to_json() for entry in row] for row in self.mat],
        }


def _generator_block(sign: int, t: LaurentPoly) -> list[list[LaurentPoly]]:
    nvars = t.nvars
    one = LaurentPoly.one(nvars)
    zero = LaurentPoly.zero(nvars)
    if sign > 0:
        return [[one, t, zero], [zero, -t, zero], [zero, one, one]]
    t_inv = t ** -1
    return [[one, one, zero], [zero, -t_inv, zero], [zero, t_inv, one]]


def generator_matrix(n: int, i: int, sign: int, source: ColorSeq) -> GassnerMatrix:
    """The reduced matrix of sigma_i^sign viewed as a (source, source swapped)-braid.

    The interior block is placed on rows and columns i-1, i, i+1; for sigma_1
    and sigma_{n-1} the rows and columns falling outside the matrix are
    dropped, which yields the border cases.
    """
    if n < 2 or not 1 <= i <= n - 1:
        raise BraidError(f"generator index {i} out of range for {n} strands")
    if len(source) != n:
        raise BraidError(f"colour sequence has {len(source)} entries, expected {n}")
    target = source.swap(i)
    # sigma_i^-1 is the inverse of sigma_i read as a (target, source)-braid
    color = target.color(i + 1) if sign > 0 else source.color(i + 1)
    t = LaurentPoly.variable(source.mu, color)

    rows = [list(row) for row in identity_rows(n - 1, source.mu)]
    for r, block_row in enumerate(_generator_block(sign, t)):
        for c, entry in enumerate(block_row):
            row, column = i - 2 + r, i - 2 + c
            if 0 <= row < n - 1 and 0 <= column < n - 1:
                rows[row][column] = entry
    matrix = GassnerMatrix(tuple(tuple(row) for row in rows), source, target)

    if sign < 0 and settings.GASSNER_DEBUG_CHECKS:
        forward = generator_matrix(n, i, 1, target)
        if matrix.then(forward).mat != identity_rows(n - 1, source.mu):
            raise RuntimeError(f"inverse matrix of sigma_{i} on ({source.to_text()}) is wrong")
        logger.debug("Checked inverse of sigma_%s on (%s)", i, source.to_text())
    return matrix


def word_matrix(b: ColoredBraid) -> GassnerMatrix:
    accumulated = GassnerMatrix.identity(b.bottom)
    for crossing, state in zip(b.word, b.trace):
        accumulated = accumulated.then(generator_matrix(b.strands, crossing.index, crossing.sign, state))
    return accumulated


def connecting_row(colors: ColorSeq, nvars: int | None = None) -> tuple[LaurentPoly, ...]:
    """The row (t_{c_1} - 1, t_{c_1} t_{c_2} - 1, ..., t_{c_1} ... t_{c_n} - 1)."""
    return tuple(colors.prefix_product(k, nvars) - 1 for k in range(1, len(colors) + 1))


def unreduced_extend(b: ColoredBraid) -> Rows:
    """The n x n unreduced matrix [[B, 0], [v, 1]] with v recovered from B.

    Raises ``NotDivisible`` if the recovered row is not a Laurent polynomial
    vector, which can only happen through a convention error.
    """
    closure_info(b)
    reduced = word_matrix(b)
    nvars = b.mu
    size = reduced.size
    weights = connecting_row(b.bottom)
    shifted = reduced.minus_identity()

    row_vector = []
    for column in range(size):
        total = LaurentPoly.zero(nvars)
        for i in range(size):
            total = total + weights[i] * shifted[i][column]
        row_vector.append(-exact_div(total, weights[-1]))

    zero = LaurentPoly.zero(nvars)
    rows = [tuple(row) + (zero,) for row in reduced.mat]
    rows.append(tuple(row_vector) + (LaurentPoly.one(nvars),))
    return tuple(rows)
