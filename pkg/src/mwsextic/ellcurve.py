"""Chord-tangent group law on y^2 = x^3 + G(t) with coordinates in F(t).

The usual case is G = A t^6 + B; any G works, which is what linear changes of
the variable t need. The law never looks at G because a1 = a2 = a3 = a4 = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .funcfield import RatFunc, RatPoly, format_poly, parse_ratfunc


class InversionFailure(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class CurvePoint:
    x: RatFunc | None
    y: RatFunc | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @classmethod
    def affine(cls, x, y) -> "CurvePoint":
        return cls(_as_ratfunc(x), _as_ratfunc(y))

    def __neg__(self):
        if self.x is None:
            return self
        return CurvePoint(self.x, -self.y)

    def map(self, f) -> "CurvePoint":
        """Apply a coefficient map (e.g. a conjugation) to both coordinates."""
        if self.x is None:
            return self
        return CurvePoint(self.x.map(f), self.y.map(f))

    def __str__(self):
        if self.x is None:
            return "O"
        return f"({_fmt(self.x)}, {_fmt(self.y)})"


INFINITY = CurvePoint(None, None)


def _as_ratfunc(c) -> RatFunc:
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, RatPoly):
        return RatFunc.poly(c)
    if isinstance(c, (list, tuple)):
        return RatFunc.poly(RatPoly(c))
    return RatFunc(c)


def _fmt(f: RatFunc) -> str:
    if f.den.deg == 0:
        return format_poly(f.num)
    return f"({format_poly(f.num)})/({format_poly(f.den)})"


def parse_point(text: str) -> CurvePoint:
    s = text.strip()
    if s in ("O", "inf", "infinity"):
        return INFINITY
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"point must look like (x, y): {text!r}")
    body = s[1:-1]
    depth = 0
    for i, ch in enumerate(body):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "," and depth == 0:
            return CurvePoint.affine(parse_ratfunc(body[:i]), parse_ratfunc(body[i + 1:]))
    raise ValueError(f"missing comma in point {text!r}")


def sextic(A, B) -> RatPoly:
    zero = A * 0
    return RatPoly([B, zero, zero, zero, zero, zero, A])


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + G(t)."""
    G: RatPoly

    @classmethod
    def sextic(cls, A, B) -> "Curve":
        return cls(sextic(A, B))

    def on_curve(self, pt: CurvePoint) -> bool:
        if pt.is_infinity:
            return True
        x, y = pt.x, pt.y
        # y^2 - x^3 - G with denominators cleared
        lhs = y.num * y.num * (x.den**3)
        rhs = (x.num**3 + self.G * x.den**3) * (y.den * y.den)
        return lhs == rhs

    def add(self, p1: CurvePoint, p2: CurvePoint) -> CurvePoint:
        return add(p1, p2)

    def neg(self, p: CurvePoint) -> CurvePoint:
        return -p

    def mul(self, n: int, p: CurvePoint) -> CurvePoint:
        return scalar_mul(n, p)


def on_curve(A, B, pt: CurvePoint) -> bool:
    return Curve.sextic(A, B).on_curve(pt)


def add(p1: CurvePoint, p2: CurvePoint) -> CurvePoint:
    if p1.is_infinity:
        return p2
    if p2.is_infinity:
        return p1
    try:
        if p1.x == p2.x:
            if p1.y == p2.y:
                if not p1.y:
                    return INFINITY
                lam = (p1.x * p1.x * 3) / (p1.y * 2)
            else:
                return INFINITY
        else:
            lam = (p2.y - p1.y) / (p2.x - p1.x)
    except ZeroDivisionError as e:
        raise InversionFailure(str(e)) from e
    x3 = lam * lam - p1.x - p2.x
    y3 = lam * (p1.x - x3) - p1.y
    return CurvePoint(x3, y3)


def sub(p1: CurvePoint, p2: CurvePoint) -> CurvePoint:
    return add(p1, -p2)


def scalar_mul(n: int, pt: CurvePoint) -> CurvePoint:
    if n < 0:
        return scalar_mul(-n, -pt)
    out = INFINITY
    base = pt
    while n:
        if n & 1:
            out = add(out, base)
        n >>= 1
        if n:
            base = add(base, base)
    return out


def combine(terms) -> CurvePoint:
    """Sum of n_i * P_i for an iterable of (n_i, P_i)."""
    out = INFINITY
    for n, p in terms:
        if n:
            out = add(out, scalar_mul(n, p))
    return out


def rational_point(xcoeffs, ycoeffs) -> CurvePoint:
    """Polynomial point over Q from coefficient lists (lowest degree first)."""
    return CurvePoint.affine(RatPoly([Fraction(c) for c in xcoeffs]),
                             RatPoly([Fraction(c) for c in ycoeffs]))
