"""Sharp witnesses, the randomized falsifier, and the radius bisection.

The three witnesses are single-coefficient functions z + c z^(n+1) whose
hypothesis sup meets its threshold exactly in the boundary limit r -> 1:

    ex1  c = (1-alpha)/(n+1-alpha)   sharp for the starlike check (thm1)
    ex2  c = (1-alpha)/(n+1)         sharp for the bounded-turning check (thm2),
                                     and for the upper branch of thm3
    ex3  c = alpha/(n+1)             sharp for the lower branch of thm3
                                     (0 < alpha <= 1/2)

Because a monomial's coefficient bound is attained on every circle, all of
their sups have closed forms, which anchors the bracket machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .bounds import GridSpec, coeff_bound
from .checks import (
    HYPOTHESIS_FUNCTIONAL,
    CheckReport,
    Params,
    Theorem,
    VerdictState,
    check,
    threshold,
    validate_params,
)
from .errors import InputError, ParameterError
from .funcspec import function_to_dict
from .functionals import as_polynomial
from .series import SeriesA

__all__ = [
    "Witness",
    "WitnessForms",
    "FalsifyConfig",
    "FalsifySummary",
    "RadiusReport",
    "make_witness",
    "witness_closed_forms",
    "sample_satisfying",
    "falsify",
    "radius_of_validity",
]


class Witness(Enum):
    EX1 = "ex1"
    EX2 = "ex2"
    EX3 = "ex3"


def _witness_coefficient(which: Witness, n: int, alpha: float) -> float:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterError("class index n must be a positive integer")
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise ParameterError("alpha must be finite")
    if which is Witness.EX1:
        if not (0.0 <= alpha < 1.0):
            raise ParameterError(f"ex1 needs 0 <= alpha < 1, got {alpha}")
        return (1.0 - alpha) / (n + 1 - alpha)
    if which is Witness.EX2:
        if not (0.0 <= alpha < 1.0):
            raise ParameterError(f"ex2 needs 0 <= alpha < 1, got {alpha}")
        return (1.0 - alpha) / (n + 1)
    if which is Witness.EX3:
        if not (0.0 < alpha <= 0.5):
            raise ParameterError(f"ex3 needs 0 < alpha <= 1/2, got {alpha}")
        return alpha / (n + 1)
    raise InputError(f"unknown witness {which!r}")


def make_witness(which: Witness, n: int, alpha: float) -> SeriesA:
    """The single-coefficient extremal function z + c z^(n+1)."""
    return SeriesA.from_tail(n, [_witness_coefficient(which, n, alpha)])


@dataclass(frozen=True)
class WitnessForms:
    """Closed-form circle sups of a witness's hypothesis and conclusion."""

    hyp_sup_on_circle: float
    concl_sup_on_circle: float


def witness_closed_forms(which: Witness, n: int, alpha: float, beta: complex, r: float) -> WitnessForms:
    """Exact sup values on |z| = r for the witness z + c z^(n+1).

    ex1 pairs the starlike hypothesis n c r^n |n+1-beta| with the quotient
    sup n c r^n / (1 - c r^n); ex2 and ex3 pair the turning hypothesis
    (n+1) c r^n |n-beta| with the derivative-defect sup (n+1) c r^n.
    """
    c = _witness_coefficient(which, n, alpha)
    beta = complex(beta)
    if not (math.isfinite(beta.real) and math.isfinite(beta.imag)):
        raise InputError("beta must be finite")
    r = float(r)
    if not math.isfinite(r) or not (0.0 < r < 1.0):
        raise InputError("r must lie in (0, 1)")
    rn = r**n
    if which is Witness.EX1:
        return WitnessForms(
            hyp_sup_on_circle=n * c * rn * abs(n + 1 - beta),
            concl_sup_on_circle=n * c * rn / (1.0 - c * rn),
        )
    return WitnessForms(
        hyp_sup_on_circle=(n + 1) * c * rn * abs(n - beta),
        concl_sup_on_circle=(n + 1) * c * rn,
    )


@dataclass(frozen=True)
class FalsifyConfig:
    """Trial count, seed, hypothesis margin, tail length, and check radius."""

    trials: int = 1000
    seed: int = 0
    margin: float = 0.9
    tail_len: int = 6
    r_max: float = 0.999

    def __post_init__(self):
        if isinstance(self.trials, bool) or not isinstance(self.trials, (int, np.integer)) or self.trials < 1:
            raise InputError("trials must be a positive integer")
        if isinstance(self.seed, bool) or not isinstance(self.seed, (int, np.integer)) or self.seed < 0:
            raise InputError("seed must be a nonnegative integer")
        if not (0.0 < float(self.margin) < 1.0):
            raise InputError("margin must lie in (0, 1)")
        if isinstance(self.tail_len, bool) or not isinstance(self.tail_len, (int, np.integer)) or self.tail_len < 0:
            raise InputError("tail_len must be a nonnegative integer")
        if not (0.0 < float(self.r_max) < 1.0):
            raise InputError("r_max must lie in (0, 1)")
        object.__setattr__(self, "trials", int(self.trials))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "margin", float(self.margin))
        object.__setattr__(self, "tail_len", int(self.tail_len))
        object.__setattr__(self, "r_max", float(self.r_max))


def sample_satisfying(
    theorem: Theorem,
    n: int,
    params: Params,
    cfg: FalsifyConfig,
    rng: np.random.Generator,
) -> SeriesA:
    """Draw a random tail and rescale it until the hypothesis provably holds.

    Tail coefficients are uniform in the complex box [-1, 1]^2. When the
    hypothesis polynomial's coefficient bound at radius 1 exceeds
    margin * threshold the whole tail is scaled down by that ratio, which is
    exact because the hypothesis coefficients are linear in the tail. The
    returned function therefore satisfies the hypothesis on the whole open
    disk with a certified margin. tail_len = 0 yields the identity.
    """
    validate_params(theorem, params, n)
    box = rng.uniform(-1.0, 1.0, size=(cfg.tail_len, 2))
    tail = box[:, 0] + 1j * box[:, 1]
    f = SeriesA.from_tail(n, tail)
    if cfg.tail_len == 0:
        return f
    target = cfg.margin * threshold(theorem, params, n)
    bound = coeff_bound(as_polynomial(HYPOTHESIS_FUNCTIONAL[theorem], f, params.beta), 1.0)
    if bound > target:
        f = SeriesA.from_tail(n, tail * (target / bound))
    return f


@dataclass(frozen=True)
class FalsifySummary:
    theorem: Theorem
    n: int
    params: Params
    config: FalsifyConfig
    holds: int
    inconclusive: int
    fails: int
    min_conclusion_margin: float | None
    counterexamples: tuple


def _counterexample_record(trial: int, f: SeriesA, report: CheckReport) -> dict:
    witness = report.witness
    return {
        "trial": trial,
        "function": function_to_dict(f),
        "witness": [witness.real, witness.imag] if witness is not None else None,
        "conclusion_value": report.concl.lower if report.concl is not None else None,
        "conclusion_bound": report.concl_bound,
    }


def falsify(
    theorem: Theorem,
    n: int,
    params: Params,
    cfg: FalsifyConfig,
    spec: GridSpec | None = None,
) -> FalsifySummary:
    """Seeded search for hypothesis-satisfying functions that break a conclusion.

    Every trial draws from its own seed substream (seed, trial index), so
    summaries are reproducible and trials could run in any order. A Fails
    verdict is re-verified at 16x grid density before being reported, to
    exclude grid artifacts; zero fails is the expected outcome for a sound
    checker.
    """
    spec = spec if spec is not None else GridSpec(m=512, refine_depth=2)
    counts = {VerdictState.HOLDS: 0, VerdictState.FAILS: 0, VerdictState.INCONCLUSIVE: 0}
    min_margin: float | None = None
    counterexamples: list[dict] = []
    for trial in range(cfg.trials):
        rng = np.random.default_rng([cfg.seed, trial])
        f = sample_satisfying(theorem, n, params, cfg, rng)
        report = check(theorem, f, params, spec, cfg.r_max)
        if report.verdict.state is VerdictState.FAILS:
            dense = GridSpec(m=16 * spec.m, radii=spec.radii, refine_depth=spec.refine_depth)
            report = check(theorem, f, params, dense, cfg.r_max)
            if report.verdict.state is VerdictState.FAILS:
                counterexamples.append(_counterexample_record(trial, f, report))
        counts[report.verdict.state] += 1
        margin = report.verdict.conclusion_margin
        if margin is not None and (min_margin is None or margin < min_margin):
            min_margin = margin
    return FalsifySummary(
        theorem=theorem,
        n=n,
        params=params,
        config=cfg,
        holds=counts[VerdictState.HOLDS],
        inconclusive=counts[VerdictState.INCONCLUSIVE],
        fails=counts[VerdictState.FAILS],
        min_conclusion_margin=min_margin,
        counterexamples=tuple(counterexamples),
    )


@dataclass(frozen=True)
class RadiusReport:
    """Bisection outcome: r_star is the largest subdisk scale at which the
    hypothesis stays certified. status is "bracketed" after a genuine
    bisection, "saturated" when the hypothesis is certified even at scale 1
    (r_star = 1), and "empty" when not even tiny scales certify (r_star = 0).
    """

    theorem: Theorem
    r_star: float
    iterations: int
    bracket_width: float
    status: str


def radius_of_validity(
    theorem: Theorem,
    f: SeriesA,
    params: Params,
    spec: GridSpec | None = None,
    *,
    tol: float = 1e-6,
) -> RadiusReport:
    """Bisect the subdisk scale r at which f(rz)/r stops satisfying the
    hypothesis with certainty.

    The predicate certifies the hypothesis over the whole open disk through
    the radius-1 coefficient bound of the hypothesis polynomial; grid
    parameters play no role, so the result is a genuine certificate
    matching the closed-form scale for monomial witnesses.
    """
    del spec  # the open-disk certificate needs no grid
    n = f.n
    validate_params(theorem, params, n)
    thr = threshold(theorem, params, n)

    def certified(scale: float) -> bool:
        g = f.scale_radius(scale)
        poly = as_polynomial(HYPOTHESIS_FUNCTIONAL[theorem], g, params.beta)
        return coeff_bound(poly, 1.0) < thr

    lo, hi = 2.0**-30, 1.0
    if certified(hi):
        return RadiusReport(theorem, 1.0, 0, 0.0, "saturated")
    if not certified(lo):
        return RadiusReport(theorem, 0.0, 0, 0.0, "empty")
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if certified(mid):
            lo = mid
        else:
            hi = mid
        iterations += 1
    return RadiusReport(theorem, 0.5 * (lo + hi), iterations, hi - lo, "bracketed")
