"""Finite fields F_q with q = p^k.

An element a_0 + a_1*α + ... + a_{k-1}*α^{k-1} of F_p[α]/(m) is stored as
the integer code a_0 + a_1*p + ... + a_{k-1}*p^{k-1}, so for k = 1 the
codes are the residues in [0, p). The modulus m is the first monic
irreducible of degree k in lexicographic order, which makes the codes
stable across runs and processes. Extension-field products go through
log/exp tables over a primitive element; sums go through base-p digits.
Both have numpy forms for the residue scan.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np
import sympy.polys.galoistools as gf
from sympy import factorint
from sympy.polys.domains import ZZ

from ..errors import DomainMismatch


def prime_power(q: int) -> tuple[int, int]:
    """(p, k) with q = p^k, or DomainMismatch."""
    if q < 2:
        raise DomainMismatch(f"Field size must be a prime power, got {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise DomainMismatch(f"Field size must be a prime power, got {q}")
    ((p, k),) = factors.items()
    return int(p), int(k)


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p, dense and highest degree first."""
    for tail in product(range(p), repeat=k):
        candidate = [ZZ(1)] + [ZZ(c) for c in tail]
        if gf.gf_irreducible_p(candidate, p, ZZ):
            return tuple(int(c) for c in candidate)
    raise DomainMismatch(f"No irreducible of degree {k} over F_{p}")


class FiniteField:
    def __init__(self, order: int):
        self.order = order
        self.characteristic, self.degree = prime_power(order)
        p, k = self.characteristic, self.degree
        self.modulus = default_modulus(p, k) if k > 1 else (1, 0)
        if k > 1:
            self._weights = p ** np.arange(k, dtype=np.int64)
            codes = np.arange(order, dtype=np.int64)
            self._digits = (codes[:, None] // self._weights) % p
            self._exp, self._log = self._tables()

    # -- galoistools bridge -------------------------------------------------

    def _dense(self, code: int) -> list:
        p = self.characteristic
        digits = [(code // p**i) % p for i in range(self.degree)]
        return gf.gf_strip([ZZ(d) for d in reversed(digits)])

    def _code(self, dense: list) -> int:
        p = self.characteristic
        return sum(int(c) * p**i for i, c in enumerate(reversed(dense)))

    def _slow_mul(self, a: int, b: int) -> int:
        p = self.characteristic
        prod = gf.gf_mul(self._dense(a), self._dense(b), p, ZZ)
        return self._code(gf.gf_rem(prod, [ZZ(c) for c in self.modulus], p, ZZ))

    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.order
        powers = [1]
        for g in range(2, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._slow_mul(x, g)
            if len(powers) == q - 1:
                break
        exp = np.array(powers + powers, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1, dtype=np.int64)
        return exp, log

    # -- scalars ------------------------------------------------------------

    def element(self, code: int) -> int:
        if self.degree == 1:
            return code % self.characteristic
        if not 0 <= code < self.order:
            raise DomainMismatch(f"{code} is not an element code of GF({self.order})")
        return code

    def from_integer(self, n: int) -> int:
        """Image of the integer n under Z -> F_q; lands in the prime subfield."""
        return n % self.characteristic

    def add(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a + b) % self.characteristic
        return int((self._digits[a] + self._digits[b]) % self.characteristic @ self._weights)

    def neg(self, a: int) -> int:
        if self.degree == 1:
            return (-a) % self.characteristic
        return int((-self._digits[a]) % self.characteristic @ self._weights)

    def mul(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a * b) % self.characteristic
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainMismatch(f"0 has no inverse in GF({self.order})")
        if self.degree == 1:
            return pow(a, -1, self.characteristic)
        return int(self._exp[(-self._log[a]) % (self.order - 1)])

    def pow(self, a: int, exp: int) -> int:
        if self.degree == 1:
            return pow(a, exp, self.characteristic)
        if exp == 0:
            return 1
        if a == 0:
            return 0
        return int(self._exp[(int(self._log[a]) * exp) % (self.order - 1)])

    # -- arrays -------------------------------------------------------------

    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.degree == 1:
            return (a + b) % self.characteristic
        return (self._digits[a] + self._digits[b]) % self.characteristic @ self._weights

    def mul_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.degree == 1:
            return a * b % self.characteristic
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def rank(self, rows: list[list[int]]) -> int:
        """Row rank by Gaussian elimination with this field's operations."""
        matrix = [list(row) for row in rows]
        rank = 0
        n_cols = len(matrix[0]) if matrix else 0
        for col in range(n_cols):
            pivot = next((i for i in range(rank, len(matrix)) if matrix[i][col]), None)
            if pivot is None:
                continue
            matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
            scale = self.inv(matrix[rank][col])
            matrix[rank] = [self.mul(scale, v) for v in matrix[rank]]
            for i in range(len(matrix)):
                if i != rank and matrix[i][col]:
                    factor = self.neg(matrix[i][col])
                    matrix[i] = [
                        self.add(v, self.mul(factor, w))
                        for v, w in zip(matrix[i], matrix[rank], strict=True)
                    ]
            rank += 1
        return rank


@lru_cache(maxsize=32)
def finite_field(order: int) -> FiniteField:
    return FiniteField(order)
