"""Exact arithmetic on integer combinations of m-th roots of unity.

A value is stored as a length-m integer coefficient vector c with
value = sum_k c[k] * omega_m^k, omega_m = e^{2*pi*i/m}.  Zero testing
reduces the coefficient polynomial modulo the m-th cyclotomic polynomial,
so every vanishing-sum claim is decided with integers only.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

MAX_ORDER = 64


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    """Divide two integer polynomials (ascending coeffs); den must be monic
    and divide num exactly."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coef = num[k + len(den) - 1]
        out[k] = coef
        for i, d in enumerate(den):
            num[k + i] -= coef * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, ascending, computed by exact division of
    x^m - 1 by Phi_d over the proper divisors d of m."""
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _poly_exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def reduction_matrix(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k is the remainder of x^k modulo Phi_m (length phi(m)).

    A coefficient vector c represents zero iff c @ matrix == 0; the same
    linear map backs the vectorized zero tests in the lattice module.
    """
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    # x^k mod Phi_m by repeated shift-and-reduce.
    cur = [0] * deg
    for k in range(m):
        if k == 0:
            cur = [1] + [0] * (deg - 1)
        else:
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for i in range(deg):
                    cur[i] -= lead * phi[i]
        rows.append(tuple(cur))
    return tuple(rows)


@dataclass(frozen=True)
class CyclotomicInt:
    """An integer combination of m-th roots of unity."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"unsupported root order {self.order}")
        if len(self.coeffs) != self.order:
            raise ValueError("coefficient vector length must equal the order")

    @classmethod
    def zero(cls, m: int) -> CyclotomicInt:
        return cls(m, (0,) * m)

    @classmethod
    def from_root(cls, m: int, k: int) -> CyclotomicInt:
        c = [0] * m
        c[k % m] = 1
        return cls(m, tuple(c))

    @classmethod
    def from_counts(cls, m: int, counts) -> CyclotomicInt:
        return cls(m, tuple(counts))

    def __add__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check(other)
        return CyclotomicInt(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check(other)
        return CyclotomicInt(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check(other)
        m = self.order
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % m] += a * b
        return CyclotomicInt(m, tuple(out))

    def conjugate(self) -> CyclotomicInt:
        m = self.order
        return CyclotomicInt(m, tuple(self.coeffs[(-k) % m] for k in range(m)))

    def is_zero(self) -> bool:
        """Exact zero test: remainder modulo Phi_m vanishes."""
        rows = reduction_matrix(self.order)
        deg = len(rows[0])
        rem = [0] * deg
        for k, c in enumerate(self.coeffs):
            if c:
                row = rows[k]
                for i in range(deg):
                    rem[i] += c * row[i]
        return not any(rem)

    def to_complex(self) -> complex:
        """Floating-point evaluation, diagnostics only."""
        m = self.order
        return sum(
            c * cmath.exp(2j * cmath.pi * k / m)
            for k, c in enumerate(self.coeffs)
            if c
        )

    def _check(self, other: CyclotomicInt) -> None:
        if self.order != other.order:
            raise ValueError(
                f"mixed root orders {self.order} and {other.order}"
            )
