"""Exact arithmetic in Z[zeta_N] and its localization Z[zeta_N][1/p].

Elements are integer vectors in the power basis 1, zeta, ..., zeta**(phi(N)-1),
kept reduced modulo the N-th cyclotomic polynomial, so equality is plain
coefficient comparison.  All coefficients are arbitrary-precision ints;
nothing here is floating point.

For an odd prime p the ambient ring is Z[zeta_N] with N = ring_modulus(p)
(4p or 2p).  It contains the primitive 2p-th root A used by the skein
module, the root of unity zeta_p = zeta_N**(N/p), and a square root of
A**(-6 - p(p+1)/2), so every constant of the SO(3) theory at p is exact here.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from functools import lru_cache

from ._backend import mul_reduce
from .errors import (
    ExactDivisionError,
    InvalidPrimeError,
    ModulusMismatchError,
    NonIntegralError,
    PPowerInversionError,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def ring_modulus(p: int) -> int:
    """Conductor N of the cyclotomic ring used at the odd prime p.

    N = 4p when p = 1 (mod 4), else 2p.  For p = 3 (mod 4) the exponent
    -6 - p(p+1)/2 is even modulo 2p, so the phase square root is already a
    power of the 2p-th root; for p = 1 (mod 4) a 4p-th root is needed.
    """
    if p % 2 == 0 or not is_prime(p):
        raise InvalidPrimeError(f"p must be an odd prime, got {p}")
    return 4 * p if p % 4 == 1 else 2 * p


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            out -= out // f
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out -= out // m
    return out


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of ascending-coefficient integer polynomials.

    ``den`` must be monic, which keeps everything in Z.
    """
    num = list(num)
    dn = len(den) - 1
    if len(num) <= dn:
        return [], num + [0] * (dn - len(num))
    quot = [0] * (len(num) - dn)
    for i in reversed(range(len(quot))):
        c = num[i + dn]
        if c:
            quot[i] = c
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    return quot, num[:dn]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, ascending, monic of degree phi(N)."""
    poly = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(N: int) -> tuple[tuple[int, ...], ...]:
    """Rows give x**(phi+k) mod Phi_N for k = 0 .. phi-2 (the mul overflow range)."""
    phi = euler_phi(N)
    head = cyclotomic_polynomial(N)[:phi]
    rows = [tuple(-c for c in head)]
    for _ in range(phi - 2):
        prev = rows[-1]
        lead = prev[-1]
        row = [0] + list(prev[:-1])
        if lead:
            for i, t in enumerate(rows[0]):
                row[i] += lead * t
        rows.append(tuple(row))
    return tuple(rows)


def format_poly(coeffs, symbol: str) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            var = symbol if i == 1 else f"{symbol}^{i}"
            body = var if abs(c) == 1 else f"{abs(c)}{var}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


class CycInt:
    """An element of Z[zeta_N], reduced in the power basis.

    Supports +, -, *, ** with elements of the same ring and with plain ints.
    Instances are immutable and hashable; ** accepts negative exponents only
    for units (the inverse is found by exact division).
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs) -> None:
        coeffs = tuple(operator.index(c) for c in coeffs)
        phi = euler_phi(modulus)
        if len(coeffs) != phi:
            raise ValueError(f"need phi({modulus}) = {phi} coefficients, got {len(coeffs)}")
        self.modulus = modulus
        self.coeffs = coeffs

    @classmethod
    def from_poly(cls, modulus: int, coeffs) -> "CycInt":
        """Reduce an arbitrary-degree coefficient sequence modulo Phi_N."""
        phi = euler_phi(modulus)
        coeffs = [operator.index(c) for c in coeffs]
        if len(coeffs) > phi:
            _, coeffs = _poly_divmod(coeffs, list(cyclotomic_polynomial(modulus)))
        return cls(modulus, coeffs + [0] * (phi - len(coeffs)))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(
                    f"cannot combine Z[zeta_{self.modulus}] with Z[zeta_{other.modulus}]")
            return other
        if isinstance(other, int):
            return from_int(self.modulus, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.modulus, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.modulus, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycInt(self.modulus, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.modulus, [c * other for c in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.modulus,
                      mul_reduce(self.coeffs, o.coeffs, _reduction_table(self.modulus)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return divide_exact(one(self.modulus), self ** (-e))
        result = one(self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = from_int(self.modulus, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self):
        return f"CycInt({self.modulus}, {list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs, f"ζ{self.modulus}")

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "CycInt":
        return cls(data["modulus"], data["coeffs"])


def zero(N: int) -> CycInt:
    return CycInt(N, [0] * euler_phi(N))


def one(N: int) -> CycInt:
    return from_int(N, 1)


def from_int(N: int, n: int) -> CycInt:
    return CycInt(N, [n] + [0] * (euler_phi(N) - 1))


def root(N: int, j: int) -> CycInt:
    """zeta_N**j as a canonical ring element; j may be negative."""
    j %= N
    phi = euler_phi(N)
    if j < phi:
        return CycInt(N, [1 if i == j else 0 for i in range(phi)])
    return CycInt.from_poly(N, [0] * j + [1])


def _solve_rational(matrix, rhs):
    """Solve a square integer system exactly over Q; None when singular."""
    n = len(matrix)
    A = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [a / pv for a in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


def _shift_by_root(coeffs: list, table) -> list:
    """Multiply a power-basis vector by zeta (degree shift plus one reduction)."""
    lead = coeffs[-1]
    out = [0] + list(coeffs[:-1])
    if lead:
        for i, t in enumerate(table[0]):
            out[i] += lead * t
    return out


def divide_exact(x: CycInt, y: CycInt) -> CycInt:
    """The q with q*y = x, or ExactDivisionError when x is not in (y).

    Solves the integer linear system given by the multiplication-by-y matrix
    in the power basis; Z[zeta_N] is a domain so q is unique when it exists.
    """
    if x.modulus != y.modulus:
        raise ModulusMismatchError("operands live in different rings")
    if y.is_zero:
        raise ZeroDivisionError("division by zero in Z[zeta_N]")
    if x.is_zero:
        return zero(x.modulus)
    N = x.modulus
    phi = euler_phi(N)
    table = _reduction_table(N)
    col = list(y.coeffs)
    cols = [col]
    for _ in range(phi - 1):
        col = _shift_by_root(col, table)
        cols.append(col)
    sol = _solve_rational([[cols[j][i] for j in range(phi)] for i in range(phi)], x.coeffs)
    if sol is None:
        raise ExactDivisionError("multiplication matrix is singular")
    if any(f.denominator != 1 for f in sol):
        raise ExactDivisionError(f"({x}) is not divisible by ({y})")
    return CycInt(N, [int(f) for f in sol])


class CycNum:
    """num / p**k with num a CycInt; reduced so k = 0 or p does not divide num."""

    __slots__ = ("num", "p", "k")

    def __init__(self, num: CycInt, p: int, k: int = 0) -> None:
        if k < 0:
            raise ValueError("denominator exponent must be >= 0")
        while k > 0 and all(c % p == 0 for c in num.coeffs):
            num = CycInt(num.modulus, [c // p for c in num.coeffs])
            k -= 1
        self.num = num
        self.p = p
        self.k = k

    @property
    def modulus(self) -> int:
        return self.num.modulus

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.p != self.p:
                raise ValueError(f"cannot mix denominators {self.p} and {other.p}")
            if other.modulus != self.modulus:
                raise ModulusMismatchError("operands live in different rings")
            return other
        if isinstance(other, CycInt):
            return CycNum(other, self.p, 0)
        if isinstance(other, int):
            return CycNum(from_int(self.modulus, other), self.p, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = max(self.k, o.k)
        a = self.num * self.p ** (k - self.k)
        b = o.num * o.p ** (k - o.k)
        return CycNum(a + b, self.p, k)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycNum(-self.num, self.p, self.k)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycNum(self.num * other, self.p, self.k)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.num * o.num, self.p, self.k + o.k)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of CycNum are not defined")
        return CycNum(self.num ** e, self.p, self.k * e)

    def __eq__(self, other):
        if isinstance(other, (int, CycInt)):
            other = self._coerce(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return (self.p == other.p and self.k == other.k and self.num == other.num)

    def __hash__(self):
        return hash((self.num, self.p, self.k))

    def __repr__(self):
        return f"CycNum({self.num!r}, p={self.p}, k={self.k})"

    def __str__(self):
        if self.k == 0:
            return str(self.num)
        return f"({self.num}) / {self.p}^{self.k}"

    def as_integral(self) -> CycInt:
        """The underlying CycInt, requiring the reduced denominator to be 1."""
        if self.k:
            raise NonIntegralError(f"value has denominator {self.p}^{self.k}")
        return self.num

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "coeffs": list(self.num.coeffs),
                "p": self.p, "k": self.k}

    @classmethod
    def from_json(cls, data: dict) -> "CycNum":
        return cls(CycInt(data["modulus"], data["coeffs"]), data["p"], data["k"])


class ResidueClass:
    """Image of a CycInt in Z[zeta_N]/p, stored coefficient-wise mod p."""

    __slots__ = ("modulus", "p", "coeffs")

    def __init__(self, modulus: int, p: int, coeffs) -> None:
        coeffs = tuple(operator.index(c) % p for c in coeffs)
        if len(coeffs) != euler_phi(modulus):
            raise ValueError("wrong coefficient count")
        self.modulus = modulus
        self.p = p
        self.coeffs = coeffs

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other):
        if not isinstance(other, ResidueClass):
            return None
        if other.modulus != self.modulus or other.p != self.p:
            raise ModulusMismatchError("residues live in different quotients")
        return other

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ResidueClass(self.modulus, self.p,
                            [a + b for a, b in zip(self.coeffs, o.coeffs)])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = mul_reduce(self.coeffs, o.coeffs, _reduction_table(self.modulus))
        return ResidueClass(self.modulus, self.p, prod)

    def __eq__(self, other):
        if not isinstance(other, ResidueClass):
            return NotImplemented
        return (self.modulus == other.modulus and self.p == other.p
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.modulus, self.p, self.coeffs))

    def __repr__(self):
        return f"ResidueClass({self.modulus}, {self.p}, {list(self.coeffs)})"


def mod_p(x: CycInt, p: int) -> ResidueClass:
    """Coefficient-wise reduction Z[zeta_N] -> Z[zeta_N]/p (a ring map)."""
    return ResidueClass(x.modulus, p, x.coeffs)


def invert_p_power(x: CycInt, p: int, cap: int | None = None) -> CycNum:
    """Smallest k <= cap with p**k in the ideal (x), returned as q/p**k.

    The result is the inverse of x in Z[zeta_N][1/p] when it exists with
    exponent at most cap (default 2(p-1)).
    """
    if x.is_zero:
        raise ZeroDivisionError("cannot invert zero")
    if cap is None:
        cap = 2 * (p - 1)
    target = one(x.modulus)
    for k in range(cap + 1):
        try:
            q = divide_exact(target, x)
        except ExactDivisionError:
            target = target * p
            continue
        return CycNum(q, p, k)
    raise PPowerInversionError(f"no q with q*x = {p}**k for k <= {cap}")


def valuation(x, p: int):
    """Largest k with x in (1 - zeta_p)**k Z[zeta_N]; math.inf for 0.

    Uses p = unit * (1 - zeta_p)**(p-1) to strip integer factors of p first,
    then divides by (1 - zeta_p) until the division stops being exact.  For
    a CycNum y/p**j this is valuation(y) - j*(p-1).
    """
    if isinstance(x, CycNum):
        v = valuation(x.num, p)
        return v if v == math.inf else v - x.k * (p - 1)
    if x.is_zero:
        return math.inf
    N = x.modulus
    if N % p:
        raise ValueError(f"zeta_{p} does not lie in Z[zeta_{N}]")
    v = 0
    while all(c % p == 0 for c in x.coeffs):
        x = CycInt(N, [c // p for c in x.coeffs])
        v += p - 1
    u = one(N) - root(N, N // p)
    while True:
        try:
            x = divide_exact(x, u)
        except ExactDivisionError:
            return v
        v += 1
