"""Grid estimates and certified brackets for sup-moduli on circles and disks.

For analytic g the sup over the closed disk of radius r is attained on the
circle |z| = r (maximum principle), so a dense angular grid already gives a
true lower bound. For polynomials two certified upper bounds are available:
the coefficient-modulus sum, and the best grid sample padded by a derivative
Lipschitz bound over half the arc gap between samples. Rational functionals
only get the grid lower bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import InputError
from .series import PolySeries

__all__ = [
    "DEFAULT_RADII",
    "GridSpec",
    "BracketKind",
    "SupBracket",
    "coeff_bound",
    "circle_max",
    "circle_argmax",
    "poly_sup",
    "disk_sup_profile",
]

#: Radius ladder approaching the boundary: 1 - 2^-1, ..., 1 - 2^-10.
DEFAULT_RADII = tuple(1.0 - 2.0**-k for k in range(1, 11))

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class GridSpec:
    """Angular sample count, radius ladder, and refinement budget for scans."""

    m: int = 4096
    radii: tuple = DEFAULT_RADII
    refine_depth: int = 3

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, (int, np.integer)) or self.m < 16:
            raise InputError("grid needs at least 16 angular samples")
        object.__setattr__(self, "m", int(self.m))
        try:
            radii = tuple(float(r) for r in self.radii)
        except (TypeError, ValueError):
            raise InputError("radii must be a sequence of floats") from None
        if not radii or any(not (0.0 < r < 1.0) for r in radii):
            raise InputError("radii must lie strictly inside (0, 1)")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise InputError("radii must be strictly increasing")
        object.__setattr__(self, "radii", radii)
        if isinstance(self.refine_depth, bool) or not isinstance(
            self.refine_depth, (int, np.integer)
        ) or self.refine_depth < 0:
            raise InputError("refine_depth must be a nonnegative integer")
        object.__setattr__(self, "refine_depth", int(self.refine_depth))


class BracketKind(Enum):
    CERTIFIED = "certified"
    GRID_ONLY = "grid_only"


@dataclass(frozen=True)
class SupBracket:
    """Bracket lower <= sup <= upper for a sup-modulus on the disk of radius r.

    GRID_ONLY brackets carry upper = inf: the lower bound is a genuine sample
    value but no certified cap exists.
    """

    lower: float
    upper: float
    r: float
    kind: BracketKind

    def __post_init__(self):
        if not math.isfinite(self.lower):
            raise InputError("bracket lower bound must be finite")
        if not (0.0 <= self.lower <= self.upper):
            raise InputError("bracket must satisfy 0 <= lower <= upper")

    @property
    def width(self) -> float:
        return self.upper - self.lower


@lru_cache(maxsize=32)
def _unit_circle(m: int) -> np.ndarray:
    pts = np.exp(1j * (_TWO_PI * np.arange(m) / m))
    pts.setflags(write=False)
    return pts


def _check_circle_radius(r: float) -> float:
    r = float(r)
    if not math.isfinite(r) or not (0.0 < r <= 1.0):
        raise InputError("circle radius must lie in (0, 1]")
    return r


def _golden_max(h, a: float, b: float, iters: int, best_val: float, best_x: float):
    """Golden-section shrink of [a, b], maximizing the scalar objective h.

    Runs `iters` interval contractions (one new evaluation each after the
    initial pair) and returns the best value/point seen, so the result is
    always at least the incoming best.
    """
    if iters <= 0:
        return best_val, best_x
    x1 = b - _INV_GOLDEN * (b - a)
    x2 = a + _INV_GOLDEN * (b - a)
    f1 = h(x1)
    f2 = h(x2)
    if f1 > best_val:
        best_val, best_x = f1, x1
    if f2 > best_val:
        best_val, best_x = f2, x2
    for _ in range(iters):
        if f1 < f2:
            a = x1
            x1, f1 = x2, f2
            x2 = a + _INV_GOLDEN * (b - a)
            f2 = h(x2)
            if f2 > best_val:
                best_val, best_x = f2, x2
        else:
            b = x2
            x2, f2 = x1, f1
            x1 = b - _INV_GOLDEN * (b - a)
            f1 = h(x1)
            if f1 > best_val:
                best_val, best_x = f1, x1
    return best_val, best_x


def _circle_argopt(hvec, hscalar, r: float, spec: GridSpec, minimize: bool = False):
    """Grid extremum of a real objective over |z| = r plus golden refinement.

    hvec maps an ndarray of circle points to real values; hscalar maps one
    angle theta to the same objective. Returns (value, argpoint).
    """
    pts = r * _unit_circle(spec.m)
    vals = np.asarray(hvec(pts), dtype=np.float64)
    sign = -1.0 if minimize else 1.0
    svals = sign * vals
    i = int(np.argmax(svals))
    theta = _TWO_PI * i / spec.m
    best_val, best_t = float(svals[i]), theta
    if spec.refine_depth > 0:
        dt = _TWO_PI / spec.m
        if minimize:
            h = lambda t: -hscalar(t)  # noqa: E731
        else:
            h = hscalar
        best_val, best_t = _golden_max(h, theta - dt, theta + dt, spec.refine_depth, best_val, best_t)
    z0 = r * complex(math.cos(best_t), math.sin(best_t))
    return sign * best_val, z0


def circle_argmax(g, r: float, spec: GridSpec | None = None):
    """Grid maximum of |g| over |z| = r and its angular location.

    g must accept both scalar complex arguments and ndarrays of them;
    singular-denominator errors raised by g propagate.
    """
    spec = spec if spec is not None else GridSpec()
    r = _check_circle_radius(r)

    def hvec(zs):
        return np.abs(g(zs))

    def hscalar(t):
        return abs(g(r * complex(math.cos(t), math.sin(t))))

    return _circle_argopt(hvec, hscalar, r, spec, minimize=False)


def circle_max(g, r: float, spec: GridSpec | None = None) -> float:
    """Lower bound for the true circle max of |g|: best of m grid samples
    plus refine_depth rounds of golden-section refinement around it."""
    return circle_argmax(g, r, spec)[0]


def coeff_bound(p: PolySeries, r: float) -> float:
    """Coefficient-modulus bound sum |c_k| r^k, a certified disk sup bound."""
    r = _check_circle_radius(r)
    mags = np.abs(p.coeffs)
    return float(np.sum(mags * np.float64(r) ** np.arange(mags.size)))


def _poly_sup_argmax(p: PolySeries, r: float, spec: GridSpec):
    lower, z0 = circle_argmax(p.eval, r, spec)
    if p.coeffs.size > 1:
        k = np.arange(1, p.coeffs.size)
        lip = float(np.sum(k * np.abs(p.coeffs[1:]) * np.float64(r) ** (k - 1)))
    else:
        lip = 0.0
    pad = lip * math.pi * r / spec.m
    upper = min(coeff_bound(p, r), lower + pad)
    if upper < lower:  # ulp-scale rounding in the coefficient sum
        upper = lower
    return SupBracket(lower, upper, r, BracketKind.CERTIFIED), z0


def poly_sup(p: PolySeries, r: float, spec: GridSpec | None = None) -> SupBracket:
    """Certified bracket on sup of |p| over the closed disk of radius r.

    The lower bound comes from the angular grid (plus refinement); the upper
    bound is the smaller of the coefficient-sum bound and the grid value
    padded by a derivative Lipschitz bound over half the arc gap pi r / m.
    """
    spec = spec if spec is not None else GridSpec()
    r = _check_circle_radius(r)
    return _poly_sup_argmax(p, r, spec)[0]


def disk_sup_profile(g, spec: GridSpec | None = None):
    """Circle maxima of |g| along the radius ladder, as (r, value) pairs.

    For analytic g the values must be nondecreasing in r (maximum
    principle); the property suite asserts this rather than assuming it.
    """
    spec = spec if spec is not None else GridSpec()
    return [(r, circle_max(g, r, spec)) for r in spec.radii]


def _circular_index_gap(i: int, j: int, m: int) -> int:
    d = abs(i - j)
    return min(d, m - d)


def _golden_max_to_tol(h, a: float, b: float, tol: float, max_iter: int, best_val: float, best_x: float):
    x1 = b - _INV_GOLDEN * (b - a)
    x2 = a + _INV_GOLDEN * (b - a)
    f1 = h(x1)
    f2 = h(x2)
    if f1 > best_val:
        best_val, best_x = f1, x1
    if f2 > best_val:
        best_val, best_x = f2, x2
    it = 0
    while (b - a) > tol and it < max_iter:
        if f1 < f2:
            a = x1
            x1, f1 = x2, f2
            x2 = a + _INV_GOLDEN * (b - a)
            f2 = h(x2)
            if f2 > best_val:
                best_val, best_x = f2, x2
        else:
            b = x2
            x2, f2 = x1, f1
            x1 = b - _INV_GOLDEN * (b - a)
            f1 = h(x1)
            if f1 > best_val:
                best_val, best_x = f1, x1
        it += 1
    return best_val, best_x


def _deep_circle_argmax(g, r: float, m: int = 4096, basins: int = 3, theta_tol: float = 1e-10,
                        max_iter: int = 120):
    """Multi-basin argmax of |g| on |z| = r, refined until the golden bracket
    collapses. Used where the location matters, not just the value.

    Returns (value, theta). Refining the few best separated grid basins
    protects against near-tied peaks picking the wrong one.
    """
    pts = r * _unit_circle(m)
    vals = np.abs(g(pts))
    order = np.argsort(vals)[::-1]
    chosen: list[int] = []
    for idx in order:
        idx = int(idx)
        if len(chosen) >= basins:
            break
        if all(_circular_index_gap(idx, j, m) >= 3 for j in chosen):
            chosen.append(idx)

    def h(t):
        return abs(g(r * complex(math.cos(t), math.sin(t))))

    dt = _TWO_PI / m
    best_val, best_t = -math.inf, 0.0
    for idx in chosen:
        t0 = _TWO_PI * idx / m
        val, t = _golden_max_to_tol(h, t0 - dt, t0 + dt, theta_tol, max_iter, float(vals[idx]), t0)
        if val > best_val:
            best_val, best_t = val, t
    return best_val, best_t
