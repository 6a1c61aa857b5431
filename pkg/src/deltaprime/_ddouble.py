"""Minimal double-double arithmetic (~32 significant digits).

Numbers are (hi, lo) pairs with hi + lo the represented value and
|lo| <= ulp(hi)/2.  Only the handful of operations needed to evaluate the
product-rule boundary conditions near their pole is provided; the error-free
transforms are the classic Dekker/Knuth ones.
"""

from __future__ import annotations

__all__ = ["two_sum", "two_prod", "from_float", "add", "sub", "mul_f",
           "div", "reciprocal", "to_float"]

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def from_float(a: float) -> tuple[float, float]:
    return a, 0.0


def add(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    s, e = two_sum(x[0], y[0])
    e += x[1] + y[1]
    return two_sum(s, e)


def sub(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    return add(x, (-y[0], -y[1]))


def mul_f(x: tuple[float, float], f: float) -> tuple[float, float]:
    p, e = two_prod(x[0], f)
    e += x[1] * f
    return two_sum(p, e)


def div(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    q1 = x[0] / y[0]
    r = add(x, mul_f(y, -q1))
    q2 = r[0] / y[0]
    return two_sum(q1, q2)


def reciprocal(y: tuple[float, float]) -> tuple[float, float]:
    return div((1.0, 0.0), y)


def to_float(x: tuple[float, float]) -> float:
    return x[0] + x[1]
