"""Exact arithmetic in the fields Q(2 cos(pi/N)).

Every finite edge label m that occurs in a Coxeter graph contributes the
real number 2 cos(pi/m) to the entries of the reflection representation.
All those numbers live in Q(theta) with theta = 2 cos(pi/N), N the lcm of
the finite labels, because 2 cos(k pi / N) = p_k(theta) where p_k is the
integer polynomial p_k(x) = 2 T_k(x/2) (Chebyshev):

    p_0 = 2,  p_1 = x,  p_{k+1} = x p_k - p_{k-1}.

A scalar is a polynomial in theta with Fraction coefficients, reduced mod
the minimal polynomial Psi_N of theta.  Psi_N has degree phi(2N)/2 (N >= 2)
and roots 2 cos(k pi / N) for gcd(k, 2N) = 1; its integer coefficients are
computed numerically at high precision and then certified exactly: Psi_N
must divide p_N + 2 in Z[x] and have the right degree.

Zero testing is exact (reduced coefficients all zero).  The *sign* of a
nonzero scalar is determined by interval arithmetic (mpmath.iv) at doubling
precision — the exact zero test guarantees termination.

Polynomials here are tuples of coefficients, lowest degree first, trimmed.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction

import mpmath
from mpmath import iv


# -- plain polynomial helpers (coefficient tuples, low degree first) ------


def poly_trim(c):
    c = tuple(c)
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    return poly_trim(tuple(x + y for x, y in zip(a, b)) + a[len(b):])


def poly_sub(a, b):
    return poly_add(a, tuple(-x for x in b))


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_divmod_monic(a, b):
    """Divide by a *monic* polynomial; works over Z and over Q.

    >>> poly_divmod_monic((-2, 0, 1), (1, 1))   # (x^2-2) / (x+1)
    ((-1, 1), (-1,))
    """
    assert b and b[-1] == 1
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1]
        if c:
            q[k] = c
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return poly_trim(q), poly_trim(a)


@functools.cache
def chebyshev_like(k: int):
    """p_k = 2 T_k(x/2) as an integer tuple; p_k(2 cos t) = 2 cos(k t).

    >>> chebyshev_like(2)
    (-2, 0, 1)
    >>> chebyshev_like(3)
    (0, -3, 0, 1)
    """
    if k == 0:
        return (2,)
    if k == 1:
        return (0, 1)
    return poly_sub(poly_mul((0, 1), chebyshev_like(k - 1)), chebyshev_like(k - 2))


def totient(n: int) -> int:
    out, p, m = n, 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


@functools.cache
def minimal_polynomial(N: int):
    """Monic integer minimal polynomial of 2 cos(pi/N), low degree first.

    >>> minimal_polynomial(1)
    (2, 1)
    >>> minimal_polynomial(4)
    (-2, 0, 1)
    >>> minimal_polynomial(5)
    (-1, -1, 1)
    """
    if N < 1:
        raise ValueError("modulus must be >= 1")
    if N == 1:
        return (2, 1)  # 2 cos(pi) = -2
    degree = totient(2 * N) // 2
    with mpmath.workprec(256):
        coeffs = [mpmath.mpf(1)]
        for k in range(1, N):
            if math.gcd(k, 2 * N) != 1:
                continue
            root = 2 * mpmath.cos(mpmath.pi * k / N)
            coeffs = [mpmath.mpf(0)] + coeffs
            for j in range(len(coeffs) - 1):
                coeffs[j] -= root * coeffs[j + 1]
        ints = []
        for c in coeffs:
            r = mpmath.nint(c)
            if abs(c - r) > mpmath.mpf(2) ** -60:
                raise AssertionError(f"non-integer coefficient for Psi_{N}")
            ints.append(int(r))
    psi = poly_trim(ints)
    # certify exactly: right degree, monic, and Psi_N | p_N + 2 over Z
    assert len(psi) == degree + 1 and psi[-1] == 1
    _, rem = poly_divmod_monic(poly_add(chebyshev_like(N), (2,)), psi)
    assert rem == (), f"Psi_{N} failed the Chebyshev divisibility check"
    return psi


# -- the field ------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class CosField:
    """Q(2 cos(pi/N)) presented as Q[x] / Psi_N."""

    modulus: int
    psi: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.psi) - 1

    def scalar(self, coeffs) -> "ExactScalar":
        c = tuple(Fraction(x) for x in coeffs)
        if len(c) >= len(self.psi):
            _, c = poly_divmod_monic(c, self.psi)
        c = c + (Fraction(0),) * (self.degree - len(c))
        return ExactScalar(self, c)

    @property
    def zero(self) -> "ExactScalar":
        return self.scalar(())

    @property
    def one(self) -> "ExactScalar":
        return self.scalar((1,))

    @property
    def generator(self) -> "ExactScalar":
        """theta = 2 cos(pi/N)."""
        return self.scalar((0, 1))

    def two_cos(self, m) -> "ExactScalar":
        """2 cos(pi/m) for a label m: finite m must divide the modulus;
        m = 2 gives 0; the infinite label gives 2 (= 2 cos 0)."""
        if isinstance(m, float) and math.isinf(m):
            return self.scalar((2,))
        if m == 2:
            return self.zero
        if m < 2 or self.modulus % m:
            raise ValueError(f"label {m} does not divide modulus {self.modulus}")
        return self.scalar(chebyshev_like(self.modulus // m))


@functools.cache
def field_for_modulus(N: int) -> CosField:
    return CosField(N, minimal_polynomial(N))


@dataclasses.dataclass(frozen=True)
class ExactScalar:
    """An element of a CosField: fixed-length Fraction coefficient tuple."""

    field: CosField
    coeffs: tuple[Fraction, ...]

    def _check(self, other) -> "ExactScalar":
        if isinstance(other, ExactScalar):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("scalars from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return ExactScalar(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return ExactScalar(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        prod = poly_mul(self.coeffs, o.coeffs)
        if len(prod) >= len(self.field.psi):
            _, prod = poly_divmod_monic(prod, self.field.psi)
        prod = prod + (Fraction(0),) * (self.field.degree - len(prod))
        return ExactScalar(self.field, prod)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sign(self) -> int:
        """-1, 0 or +1; exact zero test first, then intervals."""
        nonzero = [c for c in self.coeffs if c]
        if not nonzero:
            return 0
        if len(nonzero) == 1 and self.coeffs[0]:
            return 1 if self.coeffs[0] > 0 else -1  # rational fast path
        N = self.field.modulus
        prec = 64
        while prec <= (1 << 16):
            old = iv.prec
            try:
                iv.prec = prec
                theta = 2 * iv.cos(iv.pi / N)
                acc = iv.mpf(0)
                for c in reversed(self.coeffs):
                    acc = acc * theta + iv.mpf(c.numerator) / c.denominator
                if acc > 0:
                    return 1
                if acc < 0:
                    return -1
            finally:
                iv.prec = old
            prec *= 2
        raise AssertionError("sign undecided at maximum precision (nonzero scalar)")

    def __repr__(self):
        return f"ExactScalar(N={self.field.modulus}, {list(self.coeffs)})"
