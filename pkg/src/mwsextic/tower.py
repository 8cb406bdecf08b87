"""Exact arithmetic in Q(z, w) and in the ring Q[z,u,v,w]/(z^2+z+1, u^6-A, v^6-B, w^3-2).

z is a primitive cube root of unity, w = 2^(1/3), u = A^(1/6), v = B^(1/6).
Ring elements are stored sparsely as {(i, j): c} meaning sum c * u^i * v^j with
c in Q(z, w), which gives the 216-dimensional monomial basis.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction


class ZeroDivisor(ZeroDivisionError):
    """Raised when an element has no inverse in the quotient ring."""


def _norm7(a, d):
    g = math.gcd(d, *a)
    if d < 0:
        g = -g
    if g != 1:
        a = tuple(x // g for x in a)
        d //= g
    return a, d


class QzwElem:
    """Element of Q(z, w); coefficient index 2k+i holds z^i w^k, over a common denominator."""

    __slots__ = ("a", "d")

    def __init__(self, a=(0, 0, 0, 0, 0, 0), d=1):
        self.a, self.d = _norm7(tuple(a), d)

    @classmethod
    def _raw(cls, a, d):
        e = object.__new__(cls)
        e.a, e.d = _norm7(a, d)
        return e

    @classmethod
    def rational(cls, q) -> "QzwElem":
        q = Fraction(q)
        return cls._raw((q.numerator, 0, 0, 0, 0, 0), q.denominator)

    @classmethod
    def from_parts(cls, coeffs) -> "QzwElem":
        """coeffs: dict {(i, k): rational} for z^i w^k with i in {0,1}, k in {0,1,2}."""
        fr = {key: Fraction(v) for key, v in coeffs.items()}
        d = 1
        for v in fr.values():
            d = d * v.denominator // math.gcd(d, v.denominator)
        a = [0] * 6
        for (i, k), v in fr.items():
            a[2 * k + i] += v.numerator * (d // v.denominator)
        return cls._raw(tuple(a), d)

    def __bool__(self):
        return any(self.a)

    def __eq__(self, other):
        if not isinstance(other, QzwElem):
            if isinstance(other, (int, Fraction)):
                other = QzwElem.rational(other)
            else:
                return NotImplemented
        return self.a == other.a and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.d))

    def is_rational(self) -> bool:
        return not any(self.a[1:])

    def in_qz(self) -> bool:
        return not any(self.a[2:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.a[0], self.d)

    def part(self, i: int, k: int) -> Fraction:
        return Fraction(self.a[2 * k + i], self.d)

    def __neg__(self):
        return QzwElem._raw(tuple(-x for x in self.a), self.d)

    def __add__(self, other):
        if not isinstance(other, QzwElem):
            other = QzwElem.rational(other)
        d1, d2 = self.d, other.d
        if d1 == d2:
            return QzwElem._raw(tuple(x + y for x, y in zip(self.a, other.a)), d1)
        return QzwElem._raw(tuple(x * d2 + y * d1 for x, y in zip(self.a, other.a)), d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QzwElem):
            other = QzwElem.rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q) -> "QzwElem":
        q = Fraction(q)
        return QzwElem._raw(tuple(x * q.numerator for x in self.a), self.d * q.denominator)

    def __mul__(self, other):
        if not isinstance(other, QzwElem):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        p0, q0, p1, q1, p2, q2 = self.a
        r0, s0, r1, s1, r2, s2 = other.a
        # (p+qz)(r+sz) = (pr - qs) + (ps + qr - qs) z

        def m(p, q, r, s):
            qs = q * s
            return p * r - qs, p * s + q * r - qs

        a00 = m(p0, q0, r0, s0)
        a01 = m(p0, q0, r1, s1)
        a02 = m(p0, q0, r2, s2)
        a10 = m(p1, q1, r0, s0)
        a11 = m(p1, q1, r1, s1)
        a12 = m(p1, q1, r2, s2)
        a20 = m(p2, q2, r0, s0)
        a21 = m(p2, q2, r1, s1)
        a22 = m(p2, q2, r2, s2)
        c0 = (a00[0] + 2 * (a12[0] + a21[0]), a00[1] + 2 * (a12[1] + a21[1]))
        c1 = (a01[0] + a10[0] + 2 * a22[0], a01[1] + a10[1] + 2 * a22[1])
        c2 = (a02[0] + a11[0] + a20[0], a02[1] + a11[1] + a20[1])
        return QzwElem._raw((c0[0], c0[1], c1[0], c1[1], c2[0], c2[1]), self.d * other.d)

    __rmul__ = __mul__

    def conj_w(self, e: int = 1) -> "QzwElem":
        """Image under w -> z^e w (z fixed)."""
        out = list(self.a)
        for k in (1, 2):
            p, q = out[2 * k], out[2 * k + 1]
            for _ in range((e * k) % 3):
                p, q = -q, p - q
            out[2 * k], out[2 * k + 1] = p, q
        return QzwElem._raw(tuple(out), self.d)

    def conj_z(self) -> "QzwElem":
        """Image under z -> z^2 (w fixed)."""
        out = []
        for k in range(3):
            p, q = self.a[2 * k], self.a[2 * k + 1]
            out += [p - q, -q]
        return QzwElem._raw(tuple(out), self.d)

    def inverse(self) -> "QzwElem":
        if not self:
            raise ZeroDivisor("inverse of zero in Q(z, w)")
        c = self.conj_w(1) * self.conj_w(2)
        n = self * c
        n0, n1 = n.a[0], n.a[1]
        den = n0 * n0 - n0 * n1 + n1 * n1
        inv_n = QzwElem._raw(((n0 - n1) * n.d, -n1 * n.d, 0, 0, 0, 0), den)
        return c * inv_n

    def __truediv__(self, other):
        if not isinstance(other, QzwElem):
            return self.scale(1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QzwElem.rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / 3)
        w = 2 ** (1 / 3)
        return sum(self.a[2 * k + i] * z**i * w**k for k in range(3) for i in range(2)) / self.d

    def __repr__(self):
        return f"QzwElem({self})"

    def __str__(self):
        names = ["", "z", "w", "z*w", "w^2", "z*w^2"]
        parts = []
        for idx, x in enumerate(self.a):
            if x:
                q = Fraction(x, self.d)
                parts.append(f"{q}{'*' + names[idx] if names[idx] else ''}")
        return " + ".join(parts) if parts else "0"


ZERO_ZW = QzwElem()
ONE_ZW = QzwElem.rational(1)
Z = QzwElem((0, 1, 0, 0, 0, 0))
W = QzwElem((0, 0, 1, 0, 0, 0))
SQRT_M3 = QzwElem((1, 2, 0, 0, 0, 0))  # 1 + 2z
ZETA6 = QzwElem((1, 1, 0, 0, 0, 0))  # 1 + z = -z^2
_ZETA6_POW = [ZETA6**k for k in range(6)]


class TowerRing:
    """The quotient ring for fixed non-zero rationals A, B."""

    def __init__(self, A, B):
        self.A = Fraction(A)
        self.B = Fraction(B)
        if not self.A or not self.B:
            raise ValueError("A and B must be non-zero")

    def __eq__(self, other):
        return isinstance(other, TowerRing) and (self.A, self.B) == (other.A, other.B)

    def __hash__(self):
        return hash((self.A, self.B))

    def __repr__(self):
        return f"TowerRing(A={self.A}, B={self.B})"

    def elem(self, c=1, i: int = 0, j: int = 0) -> "TowerElem":
        """c * u^i * v^j with c rational or in Q(z, w)."""
        if not isinstance(c, QzwElem):
            c = QzwElem.rational(c)
        e = TowerElem(self, {})
        return e._with_term(i, j, c)

    def zero(self) -> "TowerElem":
        return TowerElem(self, {})

    def one(self) -> "TowerElem":
        return self.elem(1)

    @property
    def z(self):
        return self.elem(Z)

    @property
    def u(self):
        return self.elem(1, 1, 0)

    @property
    def v(self):
        return self.elem(1, 0, 1)

    @property
    def w(self):
        return self.elem(W)


class TowerElem:
    __slots__ = ("ring", "t")

    def __init__(self, ring: TowerRing, terms: dict):
        self.ring = ring
        self.t = {k: c for k, c in terms.items() if c}

    def _with_term(self, i, j, c):
        A, B = self.ring.A, self.ring.B
        f = Fraction(1)
        if i < 0 or i >= 6:
            f *= A ** (i // 6)
            i %= 6
        if j < 0 or j >= 6:
            f *= B ** (j // 6)
            j %= 6
        if f != 1:
            c = c.scale(f)
        t = dict(self.t)
        t[(i, j)] = t[(i, j)] + c if (i, j) in t else c
        return TowerElem(self.ring, t)

    def _coerce(self, other) -> "TowerElem":
        if isinstance(other, TowerElem):
            return other
        if isinstance(other, (int, Fraction, QzwElem)):
            return self.ring.elem(other)
        raise TypeError(f"cannot coerce {type(other).__name__} into the tower")

    def __bool__(self):
        return bool(self.t)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.t == other.t

    def __hash__(self):
        return hash(frozenset(self.t.items()))

    def __neg__(self):
        return TowerElem(self.ring, {k: -c for k, c in self.t.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if not other.t:
            return self
        t = dict(self.t)
        for k, c in other.t.items():
            t[k] = t[k] + c if k in t else c
        return TowerElem(self.ring, t)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return TowerElem(self.ring, {})
            return TowerElem(self.ring, {k: c.scale(other) for k, c in self.t.items()})
        other = self._coerce(other)
        A, B = self.ring.A, self.ring.B
        out: dict = {}
        for (i1, j1), x in self.t.items():
            for (i2, j2), y in other.t.items():
                p = x * y
                i, j = i1 + i2, j1 + j2
                f = 1
                if i >= 6:
                    i -= 6
                    f = A
                if j >= 6:
                    j -= 6
                    f = f * B
                if f != 1:
                    p = p.scale(f)
                key = (i, j)
                out[key] = out[key] + p if key in out else p
        return TowerElem(self.ring, out)

    __rmul__ = __mul__

    def is_homogeneous(self) -> bool:
        return len(self.t) <= 1

    def scaled(self, su: int = 0, sv: int = 0, sw: int = 0, conj: bool = False) -> "TowerElem":
        """Image under u -> zeta6^su u, v -> zeta6^sv v, w -> z^sw w, and z -> z^2 if conj."""
        out = {}
        for (i, j), c in self.t.items():
            if conj:
                c = c.conj_z()
            if sw % 3:
                c = c.conj_w(sw)
            k = (su * i + sv * j) % 6
            if k:
                c = c * _ZETA6_POW[k]
            out[(i, j)] = c
        return TowerElem(self.ring, out)

    def inverse(self) -> "TowerElem":
        if not self.t:
            raise ZeroDivisor("inverse of zero")
        A, B = self.ring.A, self.ring.B
        if len(self.t) == 1:
            (i, j), c = next(iter(self.t.items()))
            f = Fraction(1)
            if i:
                f /= A
            if j:
                f /= B
            return TowerElem(self.ring, {((6 - i) % 6, (6 - j) % 6): c.inverse().scale(f)})
        # multiply through by conjugates in v, then in u, landing in Q(z, w)
        cof = self.ring.one()
        cur = self
        for axis in (1, 0):
            g = 6
            for key in cur.t:
                g = math.gcd(g, key[axis])
            n = 6 // g
            if n == 1:
                continue
            prod = self.ring.one()
            for b in range(1, n):
                prod = prod * (cur.scaled(sv=b) if axis == 1 else cur.scaled(su=b))
            cof = cof * prod
            cur = cur * prod
        if set(cur.t) - {(0, 0)} or not cur.t:
            raise ZeroDivisor("element is a zero divisor in the tower ring")
        n0 = cur.t[(0, 0)]
        return cof * n0.inverse()

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def coefficient(self, i: int, j: int) -> QzwElem:
        return self.t.get((i, j), ZERO_ZW)

    def is_rational(self) -> bool:
        return not self.t or (set(self.t) == {(0, 0)} and self.t[(0, 0)].is_rational())

    def to_fraction(self) -> Fraction:
        if not self.t:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.t[(0, 0)].to_fraction()

    def to_complex(self) -> complex:
        """Value under the principal real embedding (needs A, B > 0 for a real u, v)."""
        u = complex(self.ring.A) ** (1 / 6)
        v = complex(self.ring.B) ** (1 / 6)
        return sum(c.to_complex() * u**i * v**j for (i, j), c in self.t.items())

    def __repr__(self):
        return f"TowerElem({self})"

    def __str__(self):
        if not self.t:
            return "0"
        parts = []
        for (i, j), c in sorted(self.t.items()):
            mono = "".join(s for s in (f"u^{i}" if i else "", f"v^{j}" if j else "") if s)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
