"""Seedable randomized checks of the identities the potential function satisfies.

Every check draws its instances from ``random.Random(trial_seed)`` where
``trial_seed = seed * 1_000_003 + trial``, so any failure can be replayed
from the seed it reports.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from app.config import settings
from app.services.braid import (
    BraidError,
    ColorSeq,
    ColoredBraid,
    Crossing,
    closure_info,
    compose,
    generator_braid,
    include_strand,
    monomial_weight,
    permutation_cycles,
    word_permutation,
)
from app.services.gassner import (
    GassnerMatrix,
    connecting_row,
    identity_rows,
    matrix_product,
    unreduced_extend,
    word_matrix,
)
from app.services.laurent import LaurentPoly, bar_involution, specialize_one
from app.services.potential import (
    Potential,
    PotentialKind,
    axis_potential,
    axis_variable,
    linking_product,
    potential_function,
    potential_via_axis,
    same_potential,
)

logger = logging.getLogger(__name__)

SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class CheckFailure:
    seed: int
    relation: str
    braids: tuple[str, ...]
    expected: str
    actual: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "relation": self.relation,
            "braids": list(self.braids),
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True)
class CheckReport:
    name: str
    trials: int
    failures: tuple[CheckFailure, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "trials": self.trials,
            "passed": self.passed,
            "failures": [failure.to_dict() for failure in self.failures],
        }


@dataclass(frozen=True)
class TrialParams:
    trials: int
    max_strands: int
    max_length: int
    max_colors: int
    seed: int

    @classmethod
    def resolve(
        cls,
        trials: int | None = None,
        max_strands: int | None = None,
        max_length: int | None = None,
        max_colors: int | None = None,
        seed: int | None = None,
    ) -> TrialParams:
        """Fill unset parameters from the environment settings."""
        params = cls(
            trials=settings.VERIFY_TRIALS if trials is None else trials,
            max_strands=settings.VERIFY_MAX_STRANDS if max_strands is None else max_strands,
            max_length=settings.VERIFY_MAX_LENGTH if max_length is None else max_length,
            max_colors=settings.VERIFY_MAX_COLORS if max_colors is None else max_colors,
            seed=settings.VERIFY_SEED if seed is None else seed,
        )
        if params.trials < 1:
            raise ValueError("trials must be at least 1")
        if params.max_strands < 2:
            raise ValueError("max_strands must be at least 2")
        if params.max_length < 0:
            raise ValueError("max_length must be non-negative")
        if params.max_colors < 1:
            raise ValueError("max_colors must be at least 1")
        return params


Failures = list[CheckFailure]
Trial = Callable[[random.Random, int, TrialParams], Failures]


def relabel(colors: Sequence[int]) -> tuple[int, ...]:
    """Renumber colours 1, 2, ... in order of first appearance."""
    mapping: dict[int, int] = {}
    for color in colors:
        mapping.setdefault(color, len(mapping) + 1)
    return tuple(mapping[color] for color in colors)


def random_colors(rng: random.Random, strands: int, max_colors: int) -> ColorSeq:
    return ColorSeq.of(relabel([rng.randint(1, max_colors) for _ in range(strands)]))


def random_word(rng: random.Random, strands: int, length: int) -> tuple[Crossing, ...]:
    if strands < 2:
        return ()
    return tuple(Crossing(rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length))


def random_braid(rng: random.Random, bottom: ColorSeq, max_length: int) -> ColoredBraid:
    return ColoredBraid(random_word(rng, len(bottom), rng.randint(0, max_length)), bottom)


def random_closed_braid(
    rng: random.Random,
    max_strands: int,
    max_length: int,
    max_colors: int,
    min_strands: int = 1,
) -> ColoredBraid:
    """A random braid coloured so that its closure is well defined.

    Each cycle of the braid permutation becomes one closure component and
    receives a single random colour.
    """
    strands = rng.randint(min_strands, max(min_strands, max_strands))
    word = random_word(rng, strands, rng.randint(0, max_length))
    colors = [0] * strands
    for cycle in permutation_cycles(word_permutation(word, strands)):
        color = rng.randint(1, max_colors)
        for strand in cycle:
            colors[strand - 1] = color
    return ColoredBraid(word, ColorSeq.of(relabel(colors)))


def _mismatch(seed: int, relation: str, braids: Sequence[Any], expected: Any, actual: Any) -> Failures:
    if expected == actual:
        return []
    return [CheckFailure(seed, relation, tuple(str(b) for b in braids), _describe(expected), _describe(actual))]


def _describe(value: Any) -> str:
    if isinstance(value, GassnerMatrix):
        value = value.mat
    if isinstance(value, (Potential, LaurentPoly)):
        return value.to_text()
    if isinstance(value, tuple) and all(isinstance(entry, LaurentPoly) for entry in value):
        return "(" + ", ".join(entry.to_text() for entry in value) + ")"
    if isinstance(value, tuple) and all(isinstance(row, tuple) for row in value):
        return "[" + "; ".join(", ".join(entry.to_text() for entry in row) for row in value) + "]"
    return str(value)


def _run(name: str, params: TrialParams, trial: Trial) -> CheckReport:
    failures: Failures = []
    for index in range(params.trials):
        trial_seed = params.seed * SEED_STRIDE + index
        rng = random.Random(trial_seed)
        try:
            failures.extend(trial(rng, trial_seed, params))
        except (BraidError, ArithmeticError, ValueError, RuntimeError) as exc:
            logger.error("Check %s raised on seed %s: %s", name, trial_seed, exc)
            failures.append(CheckFailure(trial_seed, "no exception", (), "a result", f"{type(exc).__name__}: {exc}"))
    report = CheckReport(name, params.trials, tuple(failures))
    if report.passed:
        logger.info("Check %s passed %s trials", name, params.trials)
    else:
        logger.warning("Check %s: %s failures in %s trials", name, len(failures), params.trials)
    return report


# Markov moves


def _markov_trial(rng: random.Random, seed: int, params: TrialParams) -> Failures:
    gamma = random_closed_braid(rng, params.max_strands, params.max_length, params.max_colors)
    cut = rng.randint(0, len(gamma.word))
    alpha = ColoredBraid(gamma.word[:cut], gamma.bottom)
    beta = ColoredBraid(gamma.word[cut:], alpha.top)
    failures = _mismatch(
        seed,
        "conjugation",
        (alpha, beta),
        potential_function(compose(alpha, beta)),
        potential_function(compose(beta, alpha)),
    )

    base = random_closed_braid(rng, params.max_strands - 1, params.max_length, params.max_colors)
    n = base.strands
    widened = include_strand(base, base.bottom.color(n))
    stabilized = compose(widened, generator_braid(n, rng.choice((1, -1)), widened.top))
    failures += _mismatch(seed, "stabilization", (base, stabilized), potential_function(base), potential_function(stabilized))
    return failures


def check_markov(
    trials: int | None = None,
    max_strands: int | None = None,
    max_length: int | None = None,
    seed: int | None = None,
    max_colors: int | None = None,
) -> CheckReport:
    """Conjugation and stabilization leave the potential function unchanged."""
    params = TrialParams.resolve(trials, max_strands, max_length, max_colors, seed)
    return _run("markov", params, _markov_trial)


# Gassner matrices and the monomial weight


def _braid_relations_trial(rng: random.Random, seed: int, params: TrialParams) -> Failures:
    failures: Failures = []
    n = rng.randint(3, max(3, params.max_strands))
    bottom = random_colors(rng, n, params.max_colors)

    i = rng.randint(1, n - 2)
    e = rng.choice((1, -1))
    left = ColoredBraid((Crossing(i, e), Crossing(i + 1, e), Crossing(i, e)), bottom)
    right = ColoredBraid((Crossing(i + 1, e), Crossing(i, e), Crossing(i + 1, e)), bottom)
    failures += _mismatch(seed, "braid relation", (left, right), word_matrix(left), word_matrix(right))
    failures += _mismatch(seed, "braid relation weight", (left, right), monomial_weight(left), monomial_weight(right))

    if n >= 4:
        i = rng.randint(1, n - 3)
        j = rng.randint(i + 2, n - 1)
        e, f = rng.choice((1, -1)), rng.choice((1, -1))
        left = ColoredBraid((Crossing(i, e), Crossing(j, f)), bottom)
        right = ColoredBraid((Crossing(j, f), Crossing(i, e)), bottom)
        failures += _mismatch(seed, "far commutation", (left, right), word_matrix(left), word_matrix(right))
        failures += _mismatch(
            seed, "far commutation weight", (left, right), monomial_weight(left), monomial_weight(right)
        )

    i = rng.randint(1, n - 1)
    pair = ColoredBraid((Crossing(i, e), Crossing(i, -e)), bottom)
    failures += _mismatch(seed, "inverse pair", (pair,), identity_rows(n - 1, bottom.mu), word_matrix(pair).mat)
    failures += _mismatch(seed, "inverse pair weight", (pair,), LaurentPoly.one(bottom.mu), monomial_weight(pair))

    alpha = random_braid(rng, bottom, params.max_length)
    beta = random_braid(rng, alpha.top, params.max_length)
    both = compose(alpha, beta)
    failures += _mismatch(
        seed,
        "anti-representation",
        (alpha, beta),
        matrix_product(word_matrix(beta).mat, word_matrix(alpha).mat, bottom.mu),
        word_matrix(both).mat,
    )
    failures += _mismatch(
        seed, "weight product", (alpha, beta), monomial_weight(alpha) * monomial_weight(beta), monomial_weight(both)
    )

    extra = rng.randint(1, bottom.mu + 1)
    widened = include_strand(alpha, extra)
    failures += _mismatch(
        seed, "weight of added strand", (alpha,), monomial_weight(alpha).extend(widened.mu), monomial_weight(widened)
    )

    last = alpha.top.color(n)
    widened = include_strand(alpha, last)
    sign = rng.choice((1, -1))
    stabilized = compose(widened, generator_braid(n, sign, widened.top))
    failures += _mismatch(
        seed,
        "weight of stabilization",
        (alpha, stabilized),
        LaurentPoly.variable(alpha.mu, last, -sign) * monomial_weight(alpha),
        monomial_weight(stabilized),
    )
    return failures


def check_braid_relations(
    trials: int | None = None,
    max_strands: int | None = None,
    max_length: int | None = None,
    seed: int | None = None,
    max_colors: int | None = None,
) -> CheckReport:
    """Gassner matrices satisfy the braid relations and compose as an anti-representation."""
    params = TrialParams.resolve(trials, max_strands, max_length, max_colors, seed)
    return _run("braid_relations", params, _braid_relations_trial)


def _row_times(row: Sequence[LaurentPoly], matrix: Sequence[Sequence[LaurentPoly]], nvars: int) -> tuple[LaurentPoly, ...]:
    return matrix_product((tuple(row),), matrix, nvars)[0]


def _lemma_rows_trial(rng: random.Random, seed: int, params: TrialParams) -> Failures:
    b = random_closed_braid(rng, params.max_strands, params.max_length, params.max_colors)
    extended = unreduced_extend(b)
    boundary = connecting_row(b.bottom)
    failures = _mismatch(seed, "connecting row", (b,), boundary, _row_times(boundary, extended, b.mu))
    last_column = tuple(row[-1] for row in extended)
    expected_column = tuple(LaurentPoly.constant(b.mu, 1 if k == b.strands - 1 else 0) for k in range(b.strands))
    failures += _mismatch(seed, "last column", (b,), expected_column, last_column)
    return failures


def check_lemma_rows(
    trials: int | None = None,
    max_strands: int | None = None,
    max_length: int | None = None,
    seed: int | None = None,
    max_colors: int | None = None,
) -> CheckReport:
    """The unreduced extension preserves the connecting row and has last column (0, ..., 0, 1)."""
    params = TrialParams.resolve(trials, max_strands, max_length, max_colors, seed)
    return _run("lemma_rows", params, _lemma_rows_trial)


# Characterizing relations of the potential function


def hopf_braid(colors: ColorSeq) -> ColoredBraid:
    """sigma_1^-2, whose closure is the positive Hopf link."""
    return generator_braid(1, -1, colors, power=2)


def _jiang_trial(rng: random.Random, seed: int, params: TrialParams) -> Failures:
    hopf = hopf_braid(ColorSeq.of(rng.choice(((1, 2), (1, 1)))))
    failures = _mismatch(seed, "R1", (hopf,), LaurentPoly.one(hopf.mu), potential_function(hopf).value)

    alpha = random_closed_braid(rng, params.max_strands - 1, params.max_length, params.max_colors)
    f_alpha = potential_function(alpha)
    split = include_strand(alpha, rng.randint(1, alpha.mu + 1))
    failures += _mismatch(seed, "R2", (split,), LaurentPoly.zero(split.mu), potential_function(split).value)

    n = alpha.strands
    widened = include_strand(alpha, rng.randint(1, alpha.mu + 1))
    clasped = compose(widened, generator_braid(n, -1, widened.top, power=2))
    f_clasped = potential_function(clasped)
    t = LaurentPoly.variable(clasped.mu, alpha.bottom.color(n))
    factor = t - t ** -1
    if not same_potential(f_clasped, f_alpha, factor):
        failures.append(
            CheckFailure(seed, "R3", (str(alpha), str(clasped)), f"({factor}) * {f_alpha.to_text()}", f_clasped.to_text())
        )

    beta = random_closed_braid(rng, params.max_strands, params.max_length, params.max_colors, min_strands=2)
    plus = compose(generator_braid(1, 1, beta.bottom, power=2), beta)
    minus = compose(generator_braid(1, -1, beta.bottom, power=2), beta)
    c1 = LaurentPoly.variable(beta.mu, beta.bottom.color(1))
    c2 = LaurentPoly.variable(beta.mu, beta.bottom.color(2))
    factor = c1 * c2 + (c1 * c2) ** -1
    failures += _mismatch(
        seed,
        "R4",
        (beta,),
        factor * potential_function(beta).value,
        potential_function(plus).value + potential_function(minus).value,
    )
    return failures


def check_jiang(
    trials: int | None = None,
    max_strands: int | None = None,
    max_length: int | None = None,
    seed: int | None = None,
    max_colors: int | None = None,
) -> CheckReport:
    """The braid-level forms of the relations R1 to R4."""
    params = TrialParams.resolve(trials, max_strands, max_length, max_colors, seed)
    return _run("jiang", params, _jiang_trial)


def torres_check(b: ColoredBraid) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of (x - x^-1) * axis(1, ..., 1, x) == prod (x^lambda - x^-lambda)."""
    info = closure_info(b)
    specialized = axis_potential(b)
    for index in range(1, b.mu + 1):
        specialized = specialize_one(specialized, index)
    x = axis_variable(b.mu)
    return (x - x ** -1) * specialized, linking_product(info, b.mu)


def _routes_trial(rng: random.Random, seed: int, params: TrialParams) -> Failures:
    b = random_closed_braid(rng, params.max_strands, params.max_length, params.max_colors)
    failures = _mismatch(seed, "routes", (b,), potential_function(b), potential_via_axis(b))
    left, right = torres_check(b)
    failures += _mismatch(seed, "axis at t = 1", (b,), right, left)
    return failures


def check_routes(
    trials: int | None = None,
    max_strands: int | None = None,
    max_length: int | None = None,
    seed: int | None = None,
    max_colors: int | None = None,
) -> CheckReport:
    """The direct formula and the axis route agree."""
    params = TrialParams.resolve(trials, max_strands, max_length, max_colors, seed)
    return _run("routes", params, _routes_trial)


def _symmetry_trial(rng: random.Random, seed: int, params: TrialParams) -> Failures:
    b = random_closed_braid(rng, params.max_strands, params.max_length, params.max_colors)
    f = potential_function(b)
    if f.kind is PotentialKind.KNOT_FRACTION:
        expected = f.value
    else:
        expected = f.value if f.components % 2 == 0 else -f.value
    return _mismatch(seed, "bar involution", (b,), expected, bar_involution(f.value))


def check_symmetry(
    trials: int | None = None,
    max_strands: int | None = None,
    max_length: int | None = None,
    seed: int | None = None,
    max_colors: int | None = None,
) -> CheckReport:
    """bar(value) == (-1)^components * value, and bar(D) == D for knots."""
    params = TrialParams.resolve(trials, max_strands, max_length, max_colors, seed)
    return _run("symmetry", params, _symmetry_trial)


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "markov": check_markov,
    "braid_relations": check_braid_relations,
    "lemma_rows": check_lemma_rows,
    "jiang": check_jiang,
    "routes": check_routes,
    "symmetry": check_symmetry,
}


def run_suite(
    checks: Sequence[str] | None = None,
    trials: int | None = None,
    max_strands: int | None = None,
    max_length: int | None = None,
    seed: int | None = None,
    max_colors: int | None = None,
) -> list[CheckReport]:
    names = list(checks) if checks else list(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}; available: {', '.join(CHECKS)}")
    return [
        CHECKS[name](trials=trials, max_strands=max_strands, max_length=max_length, seed=seed, max_colors=max_colors)
        for name in names
    ]
