"""Exact arithmetic in the real field Q(sqrt3, sqrt11).

Elements are stored on the Q-basis {1, sqrt3, sqrt11, sqrt33}.  Basis
index ``i`` is a two-bit mask: bit 0 selects sqrt3, bit 1 selects sqrt11,
so the product of basis elements ``i`` and ``j`` is basis element
``i ^ j`` scaled by the squares of the shared radicals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

_RADICALS = (1.0, math.sqrt(3.0), math.sqrt(11.0), math.sqrt(33.0))
_NAMES = ("", "sqrt3", "sqrt11", "sqrt33")


def _shared_square(i: int, j: int) -> int:
    common = i & j
    return (3 if common & 1 else 1) * (11 if common & 2 else 1)


# (i, j) -> (scale, k): e_i * e_j = scale * e_k
_MUL_TABLE = {(i, j): (_shared_square(i, j), i ^ j) for i in range(4) for j in range(4)}

Scalar = Union[int, Fraction]


class QReal:
    """An element ``q0 + q1*sqrt3 + q2*sqrt11 + q3*sqrt33`` with rational q's.

    Immutable and hashable.  Equality is component-wise, which is exact
    because the four radicals are linearly independent over Q.
    """

    __slots__ = ("_c",)

    def __init__(self, q0: Scalar = 0, q1: Scalar = 0, q2: Scalar = 0, q3: Scalar = 0):
        object.__setattr__(self, "_c", (Fraction(q0), Fraction(q1), Fraction(q2), Fraction(q3)))

    def __setattr__(self, name, value):
        raise AttributeError("QReal is immutable")

    @classmethod
    def _raw(cls, comps) -> QReal:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_c", tuple(comps))
        return obj

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    q0 = property(lambda self: self._c[0])
    q1 = property(lambda self: self._c[1])
    q2 = property(lambda self: self._c[2])
    q3 = property(lambda self: self._c[3])

    @staticmethod
    def _coerce(other) -> QReal | None:
        if isinstance(other, QReal):
            return other
        if isinstance(other, Rational):
            return QReal(Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QReal._raw(a + b for a, b in zip(self._c, o._c))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QReal._raw(a - b for a, b in zip(self._c, o._c))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QReal._raw(-a for a in self._c)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Rational):
            f = Fraction(other)
            return QReal._raw(a * f for a in self._c)
        if not isinstance(other, QReal):
            return NotImplemented
        out = [Fraction(0)] * 4
        for i, a in enumerate(self._c):
            if not a:
                continue
            for j, b in enumerate(other._c):
                if not b:
                    continue
                scale, k = _MUL_TABLE[i, j]
                out[k] += scale * a * b
        return QReal._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return any(self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    def to_float(self) -> float:
        return math.fsum(float(q) * r for q, r in zip(self._c, _RADICALS))

    def __float__(self):
        return self.to_float()

    def __str__(self):
        parts = []
        for q, name in zip(self._c, _NAMES):
            text = str(q)
            parts.append(f"{text}*{name}" if name else text)
        return " + ".join(parts)

    def __repr__(self):
        return f"QReal({', '.join(repr(str(q)) for q in self._c)})"


def is_zero(x: QReal) -> bool:
    return x.is_zero()


def equals(x: QReal, y: QReal) -> bool:
    return x == y


def to_float(x: QReal) -> float:
    return x.to_float()


ZERO = QReal()
ONE = QReal(1)
SQRT3 = QReal(0, 1)
SQRT11 = QReal(0, 0, 1)
SQRT33 = QReal(0, 0, 0, 1)


@dataclass(frozen=True)
class XYVec:
    """A plane vector with exact coordinates in Q(sqrt3, sqrt11)."""

    x: QReal
    y: QReal

    def __add__(self, other: XYVec) -> XYVec:
        return XYVec(self.x + other.x, self.y + other.y)

    def __sub__(self, other: XYVec) -> XYVec:
        return XYVec(self.x - other.x, self.y - other.y)

    def __neg__(self) -> XYVec:
        return XYVec(-self.x, -self.y)

    def __mul__(self, k: Scalar) -> XYVec:
        return XYVec(self.x * k, self.y * k)

    __rmul__ = __mul__

    def to_float(self) -> tuple[float, float]:
        return (self.x.to_float(), self.y.to_float())

    def __str__(self):
        return f"({self.x}, {self.y})"


def dot(v: XYVec, w: XYVec) -> QReal:
    return v.x * w.x + v.y * w.y


def norm_sq(v: XYVec) -> QReal:
    return dot(v, v)


def is_unit(v: XYVec) -> bool:
    return norm_sq(v) == ONE


# Closed forms of cos/sin for the spindle angles.  With
# t = arccos(1/(2*sqrt3)) we have cos t = sqrt3/6 and sin t = sqrt33/6;
# the pi/6 and pi/3 shifts follow from angle addition.
COS_ALPHA = QReal(Fraction(1, 4), 0, 0, Fraction(1, 12))
SIN_ALPHA = QReal(0, Fraction(-1, 12), Fraction(1, 4), 0)
COS_BETA = QReal(Fraction(1, 4), 0, 0, Fraction(-1, 12))
SIN_BETA = QReal(0, Fraction(1, 12), Fraction(1, 4), 0)

UNIT_X = XYVec(ONE, ZERO)
UNIT_Y = XYVec(ZERO, ONE)
ALPHA = XYVec(COS_ALPHA, SIN_ALPHA)
ALPHA_BAR = XYVec(COS_ALPHA, -SIN_ALPHA)
BETA = XYVec(COS_BETA, SIN_BETA)
BETA_BAR = XYVec(COS_BETA, -SIN_BETA)
