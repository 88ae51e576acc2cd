"""Floating-point Gamma oracle and numeric cross-checks of symbolic verdicts.

Gamma is evaluated by the 9-term Lanczos series (g = 7) on the right
half-plane and extended left by the reflection formula.  Identities are
checked with a cancellation-aware relative residual: the polynomial value at
a sample divided by the sum of the absolute values of its evaluated terms.
Members must stay below tolerance at every sample; a non-member only has to
exceed the separation threshold somewhere, since isolated near-zeros of a
nonzero function are expected.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .ideal import Verdict
from .poly import GammaPoly
from .shifts import ShiftSystem

LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

EPSILON_POLE = 1e-3
SAMPLE_RE_RANGE = (-3.0, 5.0)
SAMPLE_IM_RANGE = (-3.0, 3.0)


class PoleError(ValueError):
    """Evaluation requested too close to a pole of Gamma."""

    def __init__(self, point: complex, pole: int, clearance: float):
        self.point = point
        self.pole = pole
        self.clearance = clearance
        super().__init__(
            f"point {point} is within {clearance:.3g} of the Gamma pole at {pole}"
        )


class SamplingError(RuntimeError):
    """Could not draw enough pole-clear sample points."""


def nearest_pole(z: complex) -> Tuple[int, float]:
    """The non-positive integer closest to z and its distance."""
    anchor = min(0, round(z.real))
    best_pole, best_dist = 0, abs(z)
    for pole in (anchor - 1, anchor, anchor + 1):
        if pole > 0:
            continue
        dist = abs(z - pole)
        if dist < best_dist:
            best_pole, best_dist = pole, dist
    return best_pole, best_dist


def pole_clearance(s: complex, shifts: Sequence[complex]) -> float:
    """Minimum distance from any shifted argument s + a_m to a Gamma pole."""
    if not shifts:
        return math.inf
    return min(nearest_pole(s + complex(a))[1] for a in shifts)


def gamma_eval(s: complex, epsilon_pole: float = EPSILON_POLE) -> complex:
    """Gamma(s) to about 1e-13 relative accuracy away from the poles."""
    s = complex(s)
    pole, clearance = nearest_pole(s)
    if clearance < epsilon_pole:
        raise PoleError(s, pole, clearance)
    if s.real < 0.5:
        # Reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s).
        return math.pi / (cmath.sin(math.pi * s) * gamma_eval(1 - s, epsilon_pole))
    z = s - 1
    series = LANCZOS_COEFFICIENTS[0]
    for k, coefficient in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        series += coefficient / (z + k)
    t = z + LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * series


@dataclass(frozen=True)
class ComplexSample:
    """A sample point together with its distance to the nearest shifted pole."""

    point: complex
    pole_clearance: float


def draw_samples(
    sys: ShiftSystem,
    n_samples: int,
    seed: int | random.Random,
    epsilon_pole: float = EPSILON_POLE,
) -> List[ComplexSample]:
    """Uniform pole-clear samples from the standard rectangle, seeded."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    shifts = [complex(a) for a in sys.shifts]
    samples: List[ComplexSample] = []
    attempts = 0
    limit = 200 * max(n_samples, 1)
    while len(samples) < n_samples:
        if attempts >= limit:
            raise SamplingError(
                f"drew only {len(samples)} of {n_samples} pole-clear points "
                f"in {limit} attempts (epsilon_pole={epsilon_pole})"
            )
        attempts += 1
        point = complex(
            rng.uniform(*SAMPLE_RE_RANGE), rng.uniform(*SAMPLE_IM_RANGE)
        )
        clearance = pole_clearance(point, shifts)
        if clearance >= epsilon_pole:
            samples.append(ComplexSample(point, clearance))
    return samples


def evaluate_poly(
    p: GammaPoly, sys: ShiftSystem, s: complex
) -> Tuple[complex, float]:
    """Value of p at (s, Gamma(s+a_0), ...) and the cancellation scale.

    The scale is the sum of the absolute values of the individually
    evaluated terms; an identity cancels against it, so value/scale is the
    meaningful relative residual.
    """
    if p.arity != sys.arity:
        raise ValueError(f"arity mismatch: polynomial {p.arity}, shifts {sys.arity}")
    gammas = [gamma_eval(s + complex(a)) for a in sys.shifts]
    value = 0j
    scale = 0.0
    for mono, coeff in p.terms.items():
        term = coeff(complex(s))
        for g, exponent in zip(gammas, mono):
            if exponent:
                term *= g**exponent
        value += term
        scale += abs(term)
    return value, scale


@dataclass(frozen=True)
class SampleResidual:
    point: complex
    residual: float
    scale: float

    @property
    def relative(self) -> float:
        return self.residual / self.scale if self.scale > 0 else 0.0


@dataclass(frozen=True)
class VerificationReport:
    """Numeric evidence for (or against) a symbolic membership verdict."""

    polynomial: GammaPoly
    shifts: Tuple
    member: bool
    samples: Tuple[SampleResidual, ...]
    max_relative_residual: float
    verdict_consistent: bool
    seed: int
    tol: float
    separation: float

    def as_payload(self) -> dict:
        return {
            "member": self.member,
            "seed": self.seed,
            "tol": self.tol,
            "separation": self.separation,
            "samples": [
                {
                    "point": [smp.point.real, smp.point.imag],
                    "residual": smp.residual,
                    "scale": smp.scale,
                    "relative": smp.relative,
                }
                for smp in self.samples
            ],
            "max_relative_residual": self.max_relative_residual,
            "consistent": self.verdict_consistent,
        }


def verify_verdict(
    verdict: Verdict,
    sys: ShiftSystem,
    n_samples: int = 20,
    seed: int = 0,
    tol: float = 1e-8,
    separation: Optional[float] = None,
    epsilon_pole: float = EPSILON_POLE,
) -> VerificationReport:
    """Check a symbolic verdict against seeded samples.

    Member: every relative residual must stay below tol.  Non-member: at
    least one sample must reach the separation threshold (default: tol);
    the verdict is flagged inconsistent only when all samples look like an
    identity.
    """
    if separation is None:
        separation = tol
    p = verdict.certificate.input
    points = draw_samples(sys, n_samples, seed, epsilon_pole)
    rows: List[SampleResidual] = []
    for sample in points:
        value, scale = evaluate_poly(p, sys, sample.point)
        rows.append(SampleResidual(sample.point, abs(value), scale))
    max_relative = max((row.relative for row in rows), default=0.0)
    if verdict.is_member:
        consistent = all(row.relative < tol for row in rows)
    else:
        consistent = any(row.relative >= separation for row in rows)
    return VerificationReport(
        polynomial=p,
        shifts=sys.shifts,
        member=verdict.is_member,
        samples=tuple(rows),
        max_relative_residual=max_relative,
        verdict_consistent=consistent,
        seed=seed if isinstance(seed, int) else -1,
        tol=tol,
        separation=separation,
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    samples: int
    max_relative_error: float
    threshold: float
    passed: bool

    def as_payload(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "max_relative_error": self.max_relative_error,
            "threshold": self.threshold,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class SelftestReport:
    checks: Tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def as_payload(self) -> dict:
        return {
            "checks": [check.as_payload() for check in self.checks],
            "ok": self.ok,
        }


def _clear_samples(rng: random.Random, count: int, margin: float = 0.05) -> List[complex]:
    """Sample points keeping every value used by the identity checks clear of
    poles by at least ``margin`` (the checks look at s, s+1, 2s, 3s, ...)."""
    points: List[complex] = []
    attempts = 0
    while len(points) < count and attempts < 200 * count:
        attempts += 1
        s = complex(rng.uniform(*SAMPLE_RE_RANGE), rng.uniform(*SAMPLE_IM_RANGE))
        probes = [s, s + 1, 2 * s, 3 * s, s + 0.5, s + 1 / 3, s + 2 / 3]
        if all(nearest_pole(z)[1] >= margin for z in probes):
            points.append(s)
    if len(points) < count:
        raise SamplingError(f"drew only {len(points)} of {count} selftest points")
    return points


def selftest_functional_equations(
    n_samples: int = 100, seed: int = 0
) -> SelftestReport:
    """Validate the oracle against the classical Gamma identities.

    Failures are reported, never raised: the caller decides what a red
    check means.
    """
    rng = random.Random(seed)
    points = _clear_samples(rng, n_samples)
    checks: List[CheckResult] = []

    worst = 0.0
    for s in points:
        lhs = gamma_eval(s + 1)
        worst = max(worst, abs(lhs - s * gamma_eval(s)) / abs(lhs))
    checks.append(CheckResult("recurrence", len(points), worst, 1e-10, worst < 1e-10))

    mult_points = points[: max(1, min(50, len(points)))]
    for n in (2, 3):
        worst = 0.0
        for s in mult_points:
            lhs = gamma_eval(n * s)
            rhs = n ** (n * s - 0.5) * (2 * math.pi) ** ((1 - n) / 2)
            for j in range(n):
                rhs *= gamma_eval(s + j / n)
            worst = max(worst, abs(lhs - rhs) / abs(lhs))
        checks.append(
            CheckResult(
                f"multiplication_n{n}", len(mult_points), worst, 1e-8, worst < 1e-8
            )
        )

    worst = 0.0
    strip = [complex(rng.uniform(0.55, 0.95), rng.uniform(-2.0, 2.0)) for _ in points]
    for s in strip:
        direct = gamma_eval(s)
        reflected = math.pi / (cmath.sin(math.pi * s) * gamma_eval(1 - s))
        worst = max(worst, abs(direct - reflected) / abs(direct))
    checks.append(CheckResult("reflection", len(strip), worst, 1e-10, worst < 1e-10))

    half = gamma_eval(0.5)
    err = abs(half * half - math.pi) / math.pi
    checks.append(CheckResult("gamma_half_squared", 1, err, 1e-12, err < 1e-12))

    worst = 0.0
    for k in range(1, 11):
        exact = float(math.factorial(k - 1))
        worst = max(worst, abs(gamma_eval(complex(k)) - exact) / exact)
    checks.append(CheckResult("integer_factorials", 10, worst, 1e-12, worst < 1e-12))

    return SelftestReport(tuple(checks))
