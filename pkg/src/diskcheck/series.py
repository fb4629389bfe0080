"""Truncated complex power series on the unit disk.

Two value types: PolySeries, a plain dense polynomial, and SeriesA, the
normalized family f(z) = z + a_{n+1} z^{n+1} + ... that every checker
accepts. Both are immutable, so they are safe to share between threads.
No operation ever extends the truncation order implicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError

__all__ = ["PolySeries", "SeriesA"]


def _coeff_array(coeffs) -> np.ndarray:
    try:
        arr = np.array(coeffs, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InputError(f"coefficients not interpretable as complex numbers: {exc}") from None
    if arr.ndim != 1 or arr.size == 0:
        raise InputError("coefficients must form a nonempty one-dimensional sequence")
    if not np.isfinite(arr).all():
        raise InputError("non-finite coefficient")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PolySeries:
    """Polynomial c_0 + c_1 z + ... + c_M z^M stored densely from index 0.

    The truncation order M is fixed at construction; trailing zero
    coefficients are allowed and never stripped.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = _coeff_array(self.coeffs)
        object.__setattr__(self, "coeffs", arr)
        # plain-complex mirror for the fast scalar Horner path
        object.__setattr__(self, "_py", tuple(complex(c) for c in arr))

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __eq__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(
            np.all(self.coeffs == other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return f"PolySeries({list(self.coeffs)!r})"

    def eval(self, z):
        """Evaluate by backward (Horner) recursion; z may be scalar or ndarray."""
        if isinstance(z, (int, float, complex)) and not isinstance(z, bool):
            zc = complex(z)
            if not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
                raise InputError("non-finite evaluation point")
            py = self._py
            acc = py[-1]
            for k in range(len(py) - 2, -1, -1):
                acc = acc * zc + py[k]
            return acc
        zz = np.asarray(z, dtype=np.complex128)
        if not np.isfinite(zz).all():
            raise InputError("non-finite evaluation point")
        c = self.coeffs
        acc = np.full(zz.shape, c[-1])
        for k in range(c.size - 2, -1, -1):
            acc = acc * zz + c[k]
        if zz.ndim == 0:
            return complex(acc)
        return acc

    __call__ = eval

    def derivative(self) -> PolySeries:
        """Termwise derivative; the truncation order drops by one."""
        c = self.coeffs
        if c.size == 1:
            return PolySeries(np.zeros(1, dtype=np.complex128))
        return PolySeries(c[1:] * np.arange(1, c.size))


@dataclass(frozen=True, eq=False)
class SeriesA:
    """Normalized series f(z) = z + a_{n+1} z^{n+1} + ... truncated at order M.

    n is the class index: the z^2 .. z^n coefficients vanish exactly, so the
    first admissible tail coefficient sits at z^{n+1}. Trailing truncation
    below z^{n+1} (a bare f(z) = z) is permitted.
    """

    n: int
    body: PolySeries

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InputError("class index n must be a positive integer")
        object.__setattr__(self, "n", int(self.n))
        c = self.body.coeffs
        if c.size < 2:
            raise InputError("series must carry the z coefficient")
        if c[0] != 0:
            raise InputError("constant term must be exactly 0")
        if c[1] != 1:
            raise InputError("z coefficient must be exactly 1")
        upto = min(self.n, c.size - 1)
        if upto >= 2 and np.any(c[2 : upto + 1] != 0):
            raise InputError(f"coefficients of z^2 .. z^{self.n} must vanish for class index {self.n}")

    @classmethod
    def from_tail(cls, n: int, tail=()) -> SeriesA:
        """Build z + tail[0] z^{n+1} + tail[1] z^{n+2} + ..."""
        tail = np.asarray(tail, dtype=np.complex128)
        coeffs = np.zeros(max(2, int(n) + 1 + tail.size), dtype=np.complex128)
        coeffs[1] = 1.0
        if tail.size:
            coeffs[int(n) + 1 :] = tail
        return cls(n, PolySeries(coeffs))

    @property
    def tail(self) -> np.ndarray:
        """Coefficients a_{n+1}, a_{n+2}, ... (possibly empty)."""
        return self.body.coeffs[self.n + 1 :]

    def eval(self, z):
        return self.body.eval(z)

    __call__ = eval

    def derivative(self) -> PolySeries:
        return self.body.derivative()

    def divide_by_z(self) -> PolySeries:
        """f(z)/z as an exact coefficient shift; the constant term is 1."""
        return PolySeries(self.body.coeffs[1:])

    def scale_radius(self, r: float) -> SeriesA:
        """Subdisk restriction f_r(z) = f(r z)/r, which maps a_k to a_k r^(k-1).

        Stays inside the same class; r must lie in (0, 1].
        """
        r = float(r)
        if not math.isfinite(r) or not (0.0 < r <= 1.0):
            raise InputError("scale radius must lie in (0, 1]")
        c = self.body.coeffs
        powers = np.float64(r) ** np.arange(-1, c.size - 1)
        scaled = c * powers
        scaled[0] = 0.0
        scaled[1] = c[1]
        return SeriesA(self.n, PolySeries(scaled))

    def to_zfprime(self) -> SeriesA:
        """The transform f -> z f'(z), which maps a_k to k a_k."""
        return SeriesA(self.n, PolySeries(self.body.coeffs * np.arange(self.body.coeffs.size)))

    def __eq__(self, other):
        if not isinstance(other, SeriesA):
            return NotImplemented
        return self.n == other.n and self.body == other.body

    def __hash__(self):
        return hash((self.n, self.body))
