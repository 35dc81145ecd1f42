"""Sparse Clifford algebra over a non-degenerate signature (p, q).

Multivectors are immutable maps from basis-blade bitmask to coefficient.
Bit ``i - 1`` of a mask stands for basis vector ``e_i``; blades are kept in
ascending index order and reordering signs come from transposition counts.
The first ``p`` basis vectors square to +1, the next ``q`` to -1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _backend
from .errors import HyperconicError, SignatureMismatchError

ZERO_THRESHOLD = 1e-14
DEFAULT_TOL = 1e-9
MAX_DIM = 16


@dataclass(frozen=True)
class Signature:
    p: int
    q: int = 0

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"signature counts must be non-negative, got ({self.p}, {self.q})")
        if self.p + self.q < 1:
            raise ValueError("signature needs at least one basis vector")
        if self.p + self.q > MAX_DIM:
            raise ValueError(f"dimension {self.p + self.q} exceeds the cap of {MAX_DIM}")

    @property
    def dim(self) -> int:
        return self.p + self.q

    @property
    def neg_mask(self) -> int:
        """Bitmask of the basis vectors that square to -1."""
        return ((1 << self.q) - 1) << self.p

    def square(self, i: int) -> int:
        """e_i e_i for the 1-based index ``i``."""
        if not 1 <= i <= self.dim:
            raise IndexError(f"basis index {i} outside 1..{self.dim}")
        return 1 if i <= self.p else -1

    def __str__(self):
        return f"({self.p},{self.q})"


def grade_of(mask: int) -> int:
    return bin(mask).count("1")


def mask_indices(mask: int) -> tuple[int, ...]:
    """1-based basis indices wedged in ``mask``, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def indices_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated basis index {i}")
        mask |= bit
    return mask


def blade_name(mask: int, dim: int) -> str:
    if mask == 0:
        return ""
    sep = "" if dim < 10 else "_"
    return "e" + sep.join(str(i) for i in mask_indices(mask))


class Multivector:
    """Immutable sparse element of Cl(p, q).

    Operators: ``*`` geometric product (or scaling by a real), ``^`` outer
    product, ``|`` inner product (left contraction), ``+``/``-``.
    """

    __slots__ = ("_terms", "_sig")

    def __init__(self, terms: Mapping[int, float], sig: Signature):
        limit = 1 << sig.dim
        clean = {}
        for mask, coef in terms.items():
            mask = int(mask)
            if not 0 <= mask < limit:
                raise ValueError(f"blade mask {mask:#b} outside signature {sig}")
            coef = float(coef)
            if abs(coef) >= ZERO_THRESHOLD:
                clean[mask] = coef
        self._terms = MappingProxyType(dict(sorted(clean.items(), key=_blade_order)))
        self._sig = sig

    # construction

    @classmethod
    def zero(cls, sig: Signature) -> Multivector:
        return cls({}, sig)

    @classmethod
    def scalar(cls, value: float, sig: Signature) -> Multivector:
        return cls({0: value}, sig)

    @classmethod
    def basis(cls, indices: int | Sequence[int], sig: Signature, coef: float = 1.0) -> Multivector:
        """The blade e_{i1 i2 ...}; indices may be unsorted, the sign follows."""
        if isinstance(indices, int):
            indices = (indices,)
        for i in indices:
            if not 1 <= i <= sig.dim:
                raise IndexError(f"basis index {i} outside 1..{sig.dim}")
        out = cls.scalar(coef, sig)
        for i in indices:
            out = out ^ cls({1 << (i - 1): 1.0}, sig)
        if indices and not out.terms:
            raise ValueError(f"repeated basis index in {tuple(indices)}")
        return out

    @classmethod
    def vector(cls, coords: Iterable[float], sig: Signature | None = None) -> Multivector:
        """Grade-1 multivector sum_i coords[i] e_{i+1}; defaults to Euclidean signature."""
        coords = [float(c) for c in coords]
        if sig is None:
            sig = Signature(len(coords))
        if len(coords) != sig.dim:
            raise ValueError(f"{len(coords)} coordinates for a {sig.dim}-dimensional signature")
        return cls({1 << i: c for i, c in enumerate(coords)}, sig)

    # inspection

    @property
    def terms(self) -> Mapping[int, float]:
        return self._terms

    @property
    def signature(self) -> Signature:
        return self._sig

    def grades(self) -> set[int]:
        return {grade_of(m) for m in self._terms}

    def grade(self, k: int) -> Multivector:
        return Multivector({m: c for m, c in self._terms.items() if grade_of(m) == k}, self._sig)

    def is_zero(self) -> bool:
        return not self._terms

    def is_vector(self) -> bool:
        return all(grade_of(m) == 1 for m in self._terms)

    def scalar_part(self) -> float:
        return self._terms.get(0, 0.0)

    def coords(self) -> np.ndarray:
        """Dense coordinates of the grade-1 part on e_1..e_d."""
        out = np.zeros(self._sig.dim)
        for m, c in self._terms.items():
            if grade_of(m) == 1:
                out[m.bit_length() - 1] = c
        return out

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return math.sqrt(sum(c * c for c in self._terms.values()))

    def reverse(self) -> Multivector:
        return Multivector(
            {m: -c if (grade_of(m) // 2) % 2 else c for m, c in self._terms.items()}, self._sig
        )

    def allclose(self, other: Multivector, rtol: float = 1e-12, atol: float = 0.0) -> bool:
        _check(self, other)
        scale = max(self.norm(), other.norm())
        keys = set(self._terms) | set(other._terms)
        return all(
            abs(self._terms.get(k, 0.0) - other._terms.get(k, 0.0)) <= atol + rtol * scale
            for k in keys
        )

    # arithmetic

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = Multivector.scalar(other, self._sig)
        if not isinstance(other, Multivector):
            return NotImplemented
        _check(self, other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0.0) + c
        return Multivector(terms, self._sig)

    __radd__ = __add__

    def __neg__(self):
        return Multivector({m: -c for m, c in self._terms.items()}, self._sig)

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = Multivector.scalar(other, self._sig)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector({m: c * other for m, c in self._terms.items()}, self._sig)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return self * (1.0 / other)
        return NotImplemented

    def __xor__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return outer_product(self, other)

    def __or__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return inner_product(self, other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._sig == other._sig and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash((self._sig, tuple(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self._terms.items()):
            name = blade_name(m, self._sig.dim)
            mag = f"{abs(c):g}"
            body = f"{mag} {name}" if name else mag
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Multivector({str(self)!r}, sig={self._sig})"


def _blade_order(item):
    mask = item[0]
    return (grade_of(mask), mask)


def _check(a: Multivector, b: Multivector):
    if a.signature != b.signature:
        raise SignatureMismatchError(f"signatures differ: {a.signature} vs {b.signature}")


def _product(kind: int, a: Multivector, b: Multivector) -> Multivector:
    _check(a, b)
    sig = a.signature
    if not a.terms or not b.terms:
        return Multivector.zero(sig)
    if _backend.BACKEND == "cython":
        ma = np.fromiter(a.terms.keys(), dtype=np.longlong, count=len(a.terms))
        ca = np.fromiter(a.terms.values(), dtype=np.float64, count=len(a.terms))
        mb = np.fromiter(b.terms.keys(), dtype=np.longlong, count=len(b.terms))
        cb = np.fromiter(b.terms.values(), dtype=np.float64, count=len(b.terms))
    else:
        ma, ca = tuple(a.terms.keys()), tuple(a.terms.values())
        mb, cb = tuple(b.terms.keys()), tuple(b.terms.values())
    out = _backend.kernels.blade_product(kind, ma, ca, mb, cb, sig.neg_mask, sig.dim)
    return Multivector(out, sig)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return _product(_backend.GEOMETRIC, a, b)


def outer_product(a: Multivector, b: Multivector) -> Multivector:
    return _product(_backend.OUTER, a, b)


def inner_product(a: Multivector, b: Multivector) -> Multivector:
    """Left contraction a ⌋ b.

    Grade j onto grade k gives grade k - j, zero when j > k; on two vectors
    it is the ordinary symmetric dot product.
    """
    return _product(_backend.LEFT_CONTRACTION, a, b)


def wedge_all(vectors: Sequence[Multivector]) -> Multivector:
    """Outer product of a list of vectors; zero iff they are linearly dependent."""
    if not vectors:
        raise ValueError("need at least one vector")
    sig = vectors[0].signature
    if len(vectors) > sig.dim:
        raise ValueError(f"{len(vectors)} vectors exceed dimension {sig.dim}")
    for v in vectors:
        _check(vectors[0], v)
        if not v.is_vector():
            raise HyperconicError(f"wedge_all expects grade-1 inputs, got grades {sorted(v.grades())}")
    out = vectors[0]
    for v in vectors[1:]:
        out = out ^ v
    return out


def pseudoscalar(sig: Signature) -> Multivector:
    """I = e_1 ∧ ... ∧ e_d."""
    return Multivector({(1 << sig.dim) - 1: 1.0}, sig)


def inverse_pseudoscalar(sig: Signature) -> Multivector:
    ps = pseudoscalar(sig)
    square = (ps * ps).scalar_part()
    return ps * (1.0 / square)


def dual(a: Multivector) -> Multivector:
    """A* = A I⁻¹ (geometric product with the inverse pseudoscalar)."""
    return a * inverse_pseudoscalar(a.signature)


def undual(a: Multivector) -> Multivector:
    """Inverse of :func:`dual`: multiply by I, so undual(dual(A)) == A."""
    return a * pseudoscalar(a.signature)


def _membership(product, blade: Multivector, x: Multivector, tol: float) -> bool:
    _check(blade, x)
    bnorm = blade.norm()
    if bnorm == 0.0:
        raise HyperconicError("null-space test against the zero blade")
    if not x.is_vector():
        raise HyperconicError("null-space membership is defined for vectors")
    return product(x, blade).norm() <= tol * x.norm() * bnorm


def opns_contains(blade: Multivector, x: Multivector, tol: float = DEFAULT_TOL) -> bool:
    """x lies in the outer product null space of ``blade``: x ∧ A = 0."""
    return _membership(outer_product, blade, x, tol)


def ipns_contains(blade: Multivector, x: Multivector, tol: float = DEFAULT_TOL) -> bool:
    """x lies in the inner product null space of ``blade``: x ⌋ A = 0."""
    return _membership(inner_product, blade, x, tol)
