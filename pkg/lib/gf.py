"""Exact arithmetic in prime fields F_q.

`FieldSpec` validates the modulus once (primality is checked eagerly so
downstream code never re-validates) and hands out `galois` field arrays
for everything vector/matrix shaped. `Fe` is the scalar type: an
immutable canonical residue bound to its FieldSpec.

Only prime fields are supported, no GF(p^m) extension fields.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import galois
import numpy as np


class FieldError(ValueError):
    """Invalid modulus or a value that is not a canonical residue."""


class FieldMismatchError(ValueError):
    """Operands come from two different fields (usage error)."""


class ZeroInverseError(ZeroDivisionError):
    """Raised by `inv(0)`."""


@lru_cache(maxsize=None)
def _field_class(q: int) -> type[galois.FieldArray]:
    return galois.GF(q)


def smallest_prime_at_least(n: int) -> int:
    """Smallest prime p with p >= n (n <= 2 gives 2)."""
    if n <= 2:
        return 2
    return int(galois.next_prime(n - 1))


@dataclass(frozen=True)
class FieldSpec:
    """A prime modulus q; values built through it are always reduced mod q."""

    q: int

    def __post_init__(self) -> None:
        if isinstance(self.q, bool) or not isinstance(self.q, int):
            raise FieldError(f"modulus must be an int, got {type(self.q).__name__}")
        if self.q < 2:
            raise FieldError(f"modulus must be >= 2, got {self.q}")
        if not galois.is_prime(self.q):
            raise FieldError(f"modulus {self.q} is not prime (only prime fields are supported)")

    @property
    def GF(self) -> type[galois.FieldArray]:
        return _field_class(self.q)

    # ---------- scalars ----------

    def element(self, value: int | Fe) -> Fe:
        if isinstance(value, Fe):
            self.require_same(value.spec)
            return value
        return Fe(int(value) % self.q, self)

    def zero(self) -> Fe:
        return Fe(0, self)

    def one(self) -> Fe:
        return Fe(1, self)

    def elements(self) -> list[Fe]:
        return [Fe(v, self) for v in range(self.q)]

    # ---------- arrays ----------

    def array(self, values: Any) -> galois.FieldArray:
        """Build a field array from ints / Fe / nested lists, reducing mod q."""
        if isinstance(values, galois.FieldArray):
            if type(values) is not self.GF:
                raise FieldMismatchError(
                    f"array over GF({type(values).order}) used with GF({self.q})"
                )
            return values
        grid = np.array(_to_ints(values, self), dtype=np.int64)
        return self.GF(np.mod(grid, self.q))

    def vector(self, values: Sequence[int | Fe] | galois.FieldArray) -> galois.FieldArray:
        out = self.array(list(values) if not isinstance(values, galois.FieldArray) else values)
        if out.ndim != 1:
            raise FieldError(f"expected a vector, got shape {out.shape}")
        return out

    def matrix(self, rows: Any, n_cols: int | None = None) -> galois.FieldArray:
        if not isinstance(rows, galois.FieldArray) and len(rows) == 0:
            return self.zeros((0, n_cols or 0))
        out = self.array(rows)
        if out.ndim != 2:
            raise FieldError(f"expected a matrix, got shape {out.shape}")
        return out

    def zeros(self, shape: int | tuple[int, ...]) -> galois.FieldArray:
        return self.GF.Zeros(shape)

    def identity(self, n: int) -> galois.FieldArray:
        return self.GF.Identity(n)

    def random(self, shape: int | tuple[int, ...], rng: np.random.Generator) -> galois.FieldArray:
        """Uniform i.i.d. entries drawn from a seeded numpy Generator."""
        return self.GF(rng.integers(0, self.q, size=shape, dtype=np.int64))

    def owns(self, arr: Any) -> bool:
        return isinstance(arr, galois.FieldArray) and type(arr) is self.GF

    def require_same(self, other: FieldSpec) -> None:
        if other.q != self.q:
            raise FieldMismatchError(f"mixed moduli: {self.q} vs {other.q}")


def _to_ints(values: Any, spec: FieldSpec) -> Any:
    if isinstance(values, Fe):
        spec.require_same(values.spec)
        return values.value
    if isinstance(values, galois.FieldArray):
        if not spec.owns(values):
            raise FieldMismatchError(f"array over GF({type(values).order}) used with GF({spec.q})")
        return values.view(np.ndarray).tolist()
    if isinstance(values, np.ndarray):
        return values.astype(np.int64).tolist()
    if isinstance(values, (list, tuple)):
        return [_to_ints(v, spec) for v in values]
    return int(values)


@dataclass(frozen=True)
class Fe:
    """Canonical residue `value` in [0, q)."""

    value: int
    spec: FieldSpec

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.spec.q:
            raise FieldError(f"{self.value} is not a canonical residue mod {self.spec.q}")

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Fe({self.value} mod {self.spec.q})"

    def _scalar(self) -> galois.FieldArray:
        return self.spec.GF(self.value)

    def _coerce(self, other: Fe | int) -> Fe:
        if isinstance(other, Fe):
            self.spec.require_same(other.spec)
            return other
        return self.spec.element(other)

    def __add__(self, other: Fe | int) -> Fe:
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Fe | int) -> Fe:
        return sub(self, self._coerce(other))

    def __rsub__(self, other: Fe | int) -> Fe:
        return sub(self._coerce(other), self)

    def __mul__(self, other: Fe | int) -> Fe:
        return mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Fe | int) -> Fe:
        return mul(self, inv(self._coerce(other)))

    def __neg__(self) -> Fe:
        return neg(self)

    def __pow__(self, e: int) -> Fe:
        return power(self, e)


def _check_pair(a: Fe, b: Fe) -> FieldSpec:
    if a.spec.q != b.spec.q:
        raise FieldMismatchError(f"mixed moduli: {a.spec.q} vs {b.spec.q}")
    return a.spec


def add(a: Fe, b: Fe) -> Fe:
    spec = _check_pair(a, b)
    return Fe(int(a._scalar() + b._scalar()), spec)


def sub(a: Fe, b: Fe) -> Fe:
    spec = _check_pair(a, b)
    return Fe(int(a._scalar() - b._scalar()), spec)


def mul(a: Fe, b: Fe) -> Fe:
    spec = _check_pair(a, b)
    return Fe(int(a._scalar() * b._scalar()), spec)


def neg(a: Fe) -> Fe:
    return Fe(int(-a._scalar()), a.spec)


def inv(a: Fe) -> Fe:
    if a.value == 0:
        raise ZeroInverseError("inverse of zero")
    return Fe(int(np.reciprocal(a._scalar())), a.spec)


def power(a: Fe, e: int) -> Fe:
    """Repeated-product power; 0**0 is 1 (empty product)."""
    if e < 0:
        raise FieldError(f"exponent must be non-negative, got {e}")
    if e == 0:
        return a.spec.one()
    return Fe(int(a._scalar() ** e), a.spec)
