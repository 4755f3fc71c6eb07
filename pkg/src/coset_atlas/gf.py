"""Exact arithmetic in GF(p^m) and dense linear algebra over it.

An element c0 + c1*x + ... + c_{m-1}*x^(m-1) is encoded as the integer
index c0 + c1*p + ... + c_{m-1}*p^(m-1).  Index order is the canonical
element order: zero first, the prime subfield on indices 0..p-1.
Vectors and matrices are numpy integer arrays of indices; all arithmetic
goes through precomputed addition/multiplication tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .errors import (
    DivisionByZero,
    InconsistentSystem,
    MixedFields,
    NonPrimeCharacteristic,
    ReducibleModulus,
    UnsupportedOrder,
)

MAX_ORDER = 128

# Conway polynomials, coefficients low degree first.
DEFAULT_MODULI: dict[int, tuple[int, ...]] = {
    8: (1, 1, 0, 1),
    16: (1, 1, 0, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
    128: (1, 1, 0, 0, 0, 0, 0, 1),
    9: (2, 2, 1),
    27: (1, 2, 0, 1),
    81: (2, 0, 0, 2, 1),
    25: (2, 4, 1),
    125: (3, 3, 0, 1),
    49: (3, 6, 1),
    121: (2, 7, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p**m, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    return (p, m) if r == 1 else None


# -- polynomials over GF(p), coefficient lists low degree first --------------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        f = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        a = _poly_trim(a)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus) - 1
    if m <= 1:
        return True
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int
    degree: int
    modulus: tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        p, m = self.characteristic, self.degree
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if m < 1:
            raise UnsupportedOrder(f"degree must be positive, got {m}")
        q = p**m
        if q < 5 or q > MAX_ORDER:
            raise UnsupportedOrder(f"q = {q} outside supported range 5..{MAX_ORDER}")
        mod = tuple(int(c) for c in self.modulus) if self.modulus else None
        if m == 1:
            if mod not in (None, (0, 1)):
                raise ReducibleModulus("prime fields take the placeholder modulus [0, 1]")
            mod = (0, 1)
        else:
            if mod is None:
                raise ReducibleModulus(f"no modulus given for GF({p}^{m})")
            if len(mod) != m + 1 or mod[-1] != 1:
                raise ReducibleModulus(f"modulus {list(mod)} is not monic of degree {m}")
            if any(not 0 <= c < p for c in mod):
                raise ReducibleModulus(f"modulus coefficients must lie in [0, {p})")
            if not is_irreducible(mod, p):
                raise ReducibleModulus(f"modulus {list(mod)} is reducible over GF({p})")
        object.__setattr__(self, "modulus", mod)

    @property
    def order(self) -> int:
        return self.characteristic**self.degree

    q = order

    def __str__(self):
        p, m = self.characteristic, self.degree
        if m == 1:
            return f"GF({p})"
        return f"GF({p}^{m}) mod " + ",".join(map(str, self.modulus))

    def spec_string(self) -> str:
        return f"{self.characteristic}^{self.degree}:" + ",".join(map(str, self.modulus))

    # -- representation --

    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.characteristic
        out = []
        for _ in range(self.degree):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        p = self.characteristic
        if len(coeffs) != self.degree or any(not 0 <= c < p for c in coeffs):
            raise ValueError(f"bad coefficient list {coeffs!r} for {self}")
        return sum(c * p**i for i, c in enumerate(coeffs))

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.characteristic

    # -- tables --

    @cached_property
    def add_table(self) -> np.ndarray:
        p, q = self.characteristic, self.order
        digits = np.array([self.coeffs(a) for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(self.degree, dtype=np.int64)
        s = (digits[:, None, :] + digits[None, :, :]) % p
        t = s @ weights
        t.flags.writeable = False
        return t

    @cached_property
    def mul_table(self) -> np.ndarray:
        p, q, m = self.characteristic, self.order, self.degree
        t = np.zeros((q, q), dtype=np.int64)
        polys = [self.coeffs(a) for a in range(q)]
        for a in range(1, q):
            for b in range(a, q):
                prod = [0] * (2 * m - 1)
                for i, ca in enumerate(polys[a]):
                    if ca:
                        for j, cb in enumerate(polys[b]):
                            prod[i + j] += ca * cb
                prod = [c % p for c in prod]
                r = _poly_mod(prod, self.modulus, p) if m > 1 else [prod[0] % p]
                r = r + [0] * (m - len(r))
                t[a, b] = t[b, a] = self.from_coeffs(r)
        t.flags.writeable = False
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        t = np.argmin(self.add_table, axis=1).astype(np.int64)
        t.flags.writeable = False
        return t

    @cached_property
    def inv_table(self) -> np.ndarray:
        t = np.zeros(self.order, dtype=np.int64)
        t[1:] = np.argmax(self.mul_table[1:] == 1, axis=1)
        t.flags.writeable = False
        return t

    # -- scalar arithmetic on indices --

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, a) for a in range(self.order)]

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields("element belongs to another field")
            return value
        return FieldElement(self, int(value))

    # -- vectorised helpers --

    def vsum(self, arr: np.ndarray, axis: int = -1) -> np.ndarray:
        """Field sum of ``arr`` along ``axis``."""
        arr = np.moveaxis(np.asarray(arr), axis, 0)
        acc = arr[0].copy()
        for row in arr[1:]:
            acc = self.add_table[acc, row]
        return acc

    def dot(self, a, b) -> int:
        return int(self.vsum(self.mul_table[np.asarray(a), np.asarray(b)]))

    def matmul(self, A, B) -> np.ndarray:
        A, B = np.asarray(A), np.asarray(B)
        prods = self.mul_table[A[:, :, None], B[None, :, :]]
        return self.vsum(prods, axis=1)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"{self.value} is not an element index of {self.field}")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(self.field(self._other(other)), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return mul(self, inv(self.field(self._other(other))))

    def __pow__(self, e: int):
        return pow_(self, e)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.value} in {self.field})"

    def __str__(self):
        return str(self.value)


def _pair(a: FieldElement, b) -> tuple[FieldSpec, int, int]:
    if not isinstance(a, FieldElement):
        raise TypeError("expected a FieldElement")
    return a.field, a.value, a._other(b)


def add(a: FieldElement, b) -> FieldElement:
    F, x, y = _pair(a, b)
    return FieldElement(F, F.add(x, y))


def sub(a: FieldElement, b) -> FieldElement:
    F, x, y = _pair(a, b)
    return FieldElement(F, F.sub(x, y))


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.neg(a.value))


def mul(a: FieldElement, b) -> FieldElement:
    F, x, y = _pair(a, b)
    return FieldElement(F, F.mul(x, y))


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv(a.value))


def pow_(a: FieldElement, e: int) -> FieldElement:
    return FieldElement(a.field, a.field.pow(a.value, e))


def build_field(p: int, m: int = 1, modulus=None) -> FieldSpec:
    """Validated GF(p^m); ``modulus`` defaults to the built-in table."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if m < 1:
        raise UnsupportedOrder(f"degree must be positive, got {m}")
    q = p**m
    if q < 5 or q > MAX_ORDER:
        raise UnsupportedOrder(f"q = {q} outside supported range 5..{MAX_ORDER}")
    if modulus is None and m > 1:
        modulus = DEFAULT_MODULI[q]
    return FieldSpec(p, m, tuple(modulus) if modulus is not None else ())


def field_of_order(q: int, overrides: dict[int, FieldSpec] | None = None) -> FieldSpec:
    if overrides and q in overrides:
        return overrides[q]
    pm = prime_power(q)
    if pm is None:
        raise UnsupportedOrder(f"{q} is not a prime power")
    return build_field(*pm)


def parse_field_spec(text: str) -> FieldSpec:
    """Parse ``p^m:c0,c1,...,cm`` (modulus low degree first)."""
    text = text.strip()
    head, _, tail = text.partition(":")
    p_str, _, m_str = head.partition("^")
    try:
        p = int(p_str)
        m = int(m_str) if m_str else 1
        modulus = [int(c) for c in tail.split(",")] if tail else None
    except ValueError as exc:
        raise ValueError(f"malformed field spec {text!r}") from exc
    return build_field(p, m, modulus)


def parse_field_table(text: str) -> dict[int, FieldSpec]:
    """One field spec per line; blank lines and ``#`` comments ignored."""
    table = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            spec = parse_field_spec(line)
            table[spec.order] = spec
    return table


def all_elements(spec: FieldSpec) -> list[FieldElement]:
    return spec.elements()


# -- linear algebra ----------------------------------------------------------

def rref(F: FieldSpec, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = F.mul_table[F.inv_table[R[r, c]], R[r]]
        for i in range(rows):
            if i != r and R[i, c]:
                f = F.neg_table[R[i, c]]
                R[i] = F.add_table[R[i], F.mul_table[f, R[r]]]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: FieldSpec, A) -> int:
    return len(rref(F, A)[1])


def null_space(F: FieldSpec, A) -> np.ndarray:
    """Basis of {v : A v = 0} as rows, itself in reduced echelon form."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, pivots = rref(F, A)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = F.neg_table[R[i, f]]
    if len(free) > 1:
        basis = rref(F, basis)[0]
    return basis


def solve_linear(F: FieldSpec, A, b) -> tuple[np.ndarray, int]:
    """One solution of A x = b and the dimension of the solution space."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    rows, cols = A.shape
    if b.shape[0] != rows:
        raise ValueError(f"right-hand side has {b.shape[0]} rows, matrix has {rows}")
    R, pivots = rref(F, np.hstack([A, b]))
    if cols in pivots:
        raise InconsistentSystem("system has no solution")
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, cols]
    return x, cols - len(pivots)
