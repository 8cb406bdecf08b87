"""Univariate polynomials and reduced rational functions in t.

Coefficients may be Fractions or any exact field element supporting the usual
operators, truth testing for zero, and ``1 / c`` for inversion.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction


class ZeroDenominator(ZeroDivisionError):
    pass


class NoSolution(ValueError):
    pass


class ParseError(ValueError):
    pass


def _coerce(c):
    return Fraction(c) if isinstance(c, int) else c


class RatPoly:
    """Dense polynomial, lowest degree first, no trailing zeros."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.c = tuple(cs)

    @classmethod
    def _raw(cls, cs):
        p = object.__new__(cls)
        cs = list(cs)
        while cs and not cs[-1]:
            cs.pop()
        p.c = tuple(cs)
        return p

    @classmethod
    def monomial(cls, coeff, k: int) -> "RatPoly":
        coeff = _coerce(coeff)
        return cls._raw([coeff * 0] * k + [coeff])

    @classmethod
    def const(cls, coeff) -> "RatPoly":
        return cls([coeff])

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def lc(self):
        return self.c[-1]

    def coeff(self, k: int):
        return self.c[k] if 0 <= k < len(self.c) else 0

    def __eq__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly.const(other) if other != 0 else RatPoly()
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly.const(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return RatPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly._raw([-x for x in self.c])

    def __sub__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatPoly):
            return self.scale(other)
        a, b = self.c, other.c
        if not a or not b:
            return RatPoly()
        if len(a) > 8 and len(b) > 8:
            fast = _mul_int(self, other)
            if fast is not None:
                return fast
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                k = i + j
                out[k] = x * y if out[k] is None else out[k] + x * y
        zero = a[0] * 0
        return RatPoly._raw([zero if v is None else v for v in out])

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, k):
        if not k:
            return RatPoly()
        return RatPoly._raw([x * k for x in self.c])

    def __pow__(self, n: int):
        out = RatPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "RatPoly"):
        if not other:
            raise ZeroDenominator("polynomial division by zero")
        r = list(self.c)
        dq = other.deg
        if len(r) <= dq:
            return RatPoly(), self
        inv = 1 / other.lc()
        q = [None] * (len(r) - dq)
        b = other.c
        for k in range(len(r) - 1 - dq, -1, -1):
            f = r[k + dq] * inv
            q[k] = f
            if f:
                for i, y in enumerate(b):
                    r[k + i] = r[k + i] - f * y
        return RatPoly._raw(q), RatPoly._raw(r[:dq])

    def __floordiv__(self, other):
        q = _exact_quotient_int(self, other)
        return q if q is not None else self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "RatPoly":
        if not self.c:
            return self
        lc = self.c[-1]
        if lc == 1:
            return self
        inv = 1 / lc
        return RatPoly._raw([x * inv for x in self.c[:-1]] + [lc * inv])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.c):
            acc = acc * x + c
        return acc

    def compose(self, other: "RatPoly") -> "RatPoly":
        acc = RatPoly()
        for c in reversed(self.c):
            acc = acc * other + c
        return acc

    def reverse(self, n: int | None = None) -> "RatPoly":
        """Coefficients reversed as a polynomial of formal degree n."""
        n = self.deg if n is None else n
        cs = list(self.c) + [self.c[0] * 0 if self.c else 0] * (n + 1 - len(self.c))
        return RatPoly(cs[::-1])

    def low_order(self) -> int:
        """Order of vanishing at t = 0."""
        for i, x in enumerate(self.c):
            if x:
                return i
        raise ValueError("order of the zero polynomial")

    def map(self, f) -> "RatPoly":
        return RatPoly._raw([f(x) for x in self.c])

    def sqrt(self) -> "RatPoly | None":
        """Square root if self is a square of a polynomial with the same leading coefficient form; monic input only."""
        if not self.c:
            return RatPoly()
        if self.deg % 2:
            return None
        if self.lc() != 1:
            raise ValueError("sqrt expects a monic polynomial")
        k = self.deg // 2
        n = self.deg
        # determine q = t^k + ... from the top k coefficients
        q = [None] * (k + 1)
        q[k] = self.c[-1]
        for i in range(1, k + 1):
            s = self.c[n - i]
            for j in range(1, i):
                s = s - q[k - j] * q[k - i + j]
            q[k - i] = s / 2
        root = RatPoly(q)
        return root if root * root == self else None

    def __repr__(self):
        return f"RatPoly({list(self.c)!r})"

    def __str__(self):
        return format_poly(self)


def _integer_primitive(p: RatPoly) -> list[int] | None:
    """Coefficients of p scaled to a primitive integer polynomial, or None for non-Fraction ones."""
    if not all(isinstance(c, Fraction) for c in p.c):
        return None
    den = 1
    for c in p.c:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.c]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return [x // g for x in ints]


def _eval_int(cs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _divides_int(d: list[int], f: list[int]) -> bool:
    """Does d divide f in Z[t]?"""
    r = list(f)
    lc = d[-1]
    n = len(d) - 1
    for k in range(len(r) - 1 - n, -1, -1):
        q, rem = divmod(r[k + n], lc)
        if rem:
            return False
        if q:
            for i, y in enumerate(d):
                r[k + i] -= q * y
    return not any(r[:n])


def _scaled_ints(p: RatPoly) -> tuple[list[int], int] | None:
    """p = ints / den with integer coefficients; None for non-Fraction coefficients."""
    if not all(isinstance(c, Fraction) for c in p.c):
        return None
    den = 1
    for c in p.c:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in p.c], den


def _kronecker_mul(f: list[int], g: list[int]) -> list[int]:
    """Integer polynomial product by packing coefficients into one big integer."""
    bound = max(map(abs, f)) * max(map(abs, g)) * min(len(f), len(g))
    shift = bound.bit_length() + 2   # room for the sign

    def pack(cs):
        acc = 0
        for c in reversed(cs):
            acc = (acc << shift) + c
        return acc
    h = pack(f) * pack(g)
    out = []
    half = 1 << (shift - 1)
    mask = (1 << shift) - 1
    for _ in range(len(f) + len(g) - 1):
        c = h & mask
        if c >= half:
            c -= 1 << shift
        out.append(c)
        h = (h - c) >> shift
    return out


def _mul_int(a: RatPoly, b: RatPoly) -> RatPoly | None:
    sa, sb = _scaled_ints(a), _scaled_ints(b)
    if sa is None or sb is None:
        return None
    prod = _kronecker_mul(sa[0], sb[0])
    d = sa[1] * sb[1]
    return RatPoly._raw([Fraction(x, d) for x in prod])


def _exact_quotient_int(a: RatPoly, b: RatPoly) -> RatPoly | None:
    """a / b over Z when b divides a exactly; None when that cannot be done with integers."""
    if not a or not b or a.deg < b.deg:
        return None
    sa, sb = _scaled_ints(a), _scaled_ints(b)
    if sa is None or sb is None:
        return None
    fa, da = sa
    fb, db = sb
    cb = math.gcd(*fb)
    fb = [x // cb for x in fb]
    # b = cb/db * fb with fb primitive, so fb | fa in Z[t] whenever b | a (Gauss)
    r = list(fa)
    n = len(fb) - 1
    lc = fb[-1]
    q = [0] * (len(r) - n)
    for k in range(len(r) - 1 - n, -1, -1):
        c, rem = divmod(r[k + n], lc)
        if rem:
            return None
        q[k] = c
        if c:
            for i, y in enumerate(fb):
                r[k + i] -= c * y
    if any(r[:n]):
        return None
    scale = Fraction(db, da * cb)
    return RatPoly._raw([Fraction(x) * scale for x in q])


def _heuristic_gcd(f: list[int], g: list[int]) -> list[int] | None:
    """gcd of primitive integer polynomials via evaluation at a large integer; None if unlucky."""
    # start above a Mignotte-type bound on the gcd's coefficients, so the base-xi digits are exact
    n = min(len(f), len(g)) - 1
    xi = 2 ** (n + 1) * min(max(map(abs, f)), max(map(abs, g))) * (n + 1) + 29
    for _ in range(6):
        h = math.gcd(_eval_int(f, xi), _eval_int(g, xi))
        cs = []
        while h:
            c = h % xi
            if c > xi // 2:
                c -= xi
            cs.append(c)
            h = (h - c) // xi
        if cs:
            cont = math.gcd(*cs)
            cs = [c // cont for c in cs]
            if cs[-1] < 0:
                cs = [-c for c in cs]
            if _divides_int(cs, f) and _divides_int(cs, g):
                return cs
        xi = xi * 73794 // 27011
    return None


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    if a and b:
        # split off the power of t first; a single term then settles the rest
        ka, kb = a.low_order(), b.low_order()
        k = min(ka, kb)
        one = a.c[-1] * 0 + 1
        if ka == a.deg or kb == b.deg:
            return RatPoly._raw([one * 0] * k + [one])
        if k:
            a = RatPoly._raw(a.c[ka:])
            b = RatPoly._raw(b.c[kb:])
            g = poly_gcd(a, b)
            return RatPoly._raw([one * 0] * k + list(g.c)) if g.deg else RatPoly._raw([one * 0] * k + [one])
        fa, fb = _integer_primitive(a), _integer_primitive(b)
        if fa is not None and fb is not None:
            h = _heuristic_gcd(fa, fb)
            if h is not None:
                return RatPoly([Fraction(c) for c in h]).monic()
    while b:
        a, b = b, a % b
    return a.monic()


T = RatPoly([0, 1])


class RatFunc:
    """num/den with gcd 1 and monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, RatPoly):
            num = RatPoly.const(num) if num else RatPoly()
        if den is None:
            self.num, self.den = num, RatPoly.const(1)
            return
        if not isinstance(den, RatPoly):
            den = RatPoly.const(den)
        n, d = reduce_pair(num, den)
        self.num, self.den = n, d

    @classmethod
    def _raw(cls, num, den):
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def poly(cls, p: RatPoly) -> "RatFunc":
        return cls._raw(p, RatPoly.const(1))

    def is_poly(self) -> bool:
        return self.den.deg == 0

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        if not self.num:
            return other
        if not other.num:
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.deg == 0 and d.deg == 0:
            return RatFunc._raw(a + c, b)
        g = poly_gcd(b, d)
        if g.deg == 0:
            return RatFunc._raw(a * d + c * b, b * d)
        b1, d1 = b // g, d // g
        n = a * d1 + c * b1
        if not n:
            return RatFunc._raw(RatPoly(), RatPoly.const(1))
        h = poly_gcd(n, g)
        if h.deg > 0:
            n, g = n // h, g // h
        return RatFunc._raw(n, b1 * d1 * g)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, RatPoly):
                other = RatFunc.poly(other)
            else:
                if not other:
                    return RatFunc(RatPoly())
                return RatFunc._raw(self.num.scale(other), self.den)
        if not self.num or not other.num:
            return RatFunc(RatPoly())
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d) if d.deg > 0 else None
        g2 = poly_gcd(c, b) if b.deg > 0 else None
        if g1 is not None and g1.deg > 0:
            a, d = a // g1, d // g1
        if g2 is not None and g2.deg > 0:
            c, b = c // g2, b // g2
        return RatFunc._normalized(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDenominator("inverse of zero rational function")
        return RatFunc._normalized(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num**n, self.den**n)

    @classmethod
    def _normalized(cls, num: RatPoly, den: RatPoly) -> "RatFunc":
        # num, den known coprime; only make den monic
        lc = den.lc()
        if lc != 1:
            inv = 1 / lc
            num, den = num.scale(inv), den.scale(inv)
        return cls._raw(num, den)

    def map(self, f) -> "RatFunc":
        return RatFunc(self.num.map(f), self.den.map(f))

    def subs(self, num_sub: RatPoly, den_sub: RatPoly) -> "RatFunc":
        """Substitute t -> num_sub/den_sub (a Mobius map when both are linear)."""
        n = _homog(self.num, num_sub, den_sub)
        d = _homog(self.den, num_sub, den_sub)
        k = self.num.deg - self.den.deg if self.num else 0
        if k > 0:
            d = d * den_sub**k
        elif k < 0:
            n = n * den_sub ** (-k)
        return RatFunc(n, d)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.deg == 0 and self.den.lc() == 1:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


def _homog(p: RatPoly, a: RatPoly, b: RatPoly) -> RatPoly:
    """den^deg p * p(a/den): the homogenized substitution."""
    n = p.deg
    acc = RatPoly()
    for k, c in enumerate(p.c):
        if c:
            acc = acc + (a**k) * (b ** (n - k)) * c
    return acc


def reduce_pair(num: RatPoly, den: RatPoly) -> tuple[RatPoly, RatPoly]:
    if not den:
        raise ZeroDenominator("zero denominator")
    if not num:
        return RatPoly(), RatPoly.const(1)
    g = poly_gcd(num, den)
    if g.deg > 0:
        num, den = num // g, den // g
    lc = den.lc()
    if lc != 1:
        inv = 1 / lc
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def reduce(num: RatPoly, den: RatPoly) -> RatFunc:
    n, d = reduce_pair(num, den)
    return RatFunc._raw(n, d)


def infinity_chart(x: RatFunc) -> tuple[RatFunc, int]:
    """x(1/s) * s^2 in lowest terms, with the pole order at s = 0 (clamped at 0)."""
    if not x.num:
        return x, 0
    dn, dd = x.num.deg, x.den.deg
    num = x.num.reverse()
    den = x.den.reverse()
    k = dd - dn + 2  # power of s multiplying num/den
    if k >= 0:
        val = RatFunc(num * RatPoly.monomial(1, k), den)
    else:
        val = RatFunc(num, den * RatPoly.monomial(1, -k))
    return val, max(0, -k)


def verify_3sq_decomposition(G: RatPoly, C, G1: RatPoly, G2: RatPoly) -> bool:
    return G == (G1 * G1 * 3 + G2 * G2) * Fraction(C)


def _nullspace_first(rows: list[list[Fraction]], ncols: int) -> list[Fraction] | None:
    """First null vector in reduced row echelon order (first free variable set to 1)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    vec = [Fraction(0)] * ncols
    vec[f] = Fraction(1)
    for i, pc in enumerate(pivots):
        vec[pc] = -m[i][f]
    return vec


def radical_ratio(f: RatPoly, delta) -> tuple[RatPoly, RatPoly]:
    """Find P, Q with deg P <= d, deg Q <= d-1 and P(a) = delta * Q(a) modulo f."""
    if not f or f.deg % 2:
        raise ValueError("f must be non-zero of even degree")
    d = f.deg // 2
    delta = RatPoly([Fraction(c) for c in delta]) % f
    # column j: delta * t^j reduced mod f
    cols = [(delta * RatPoly.monomial(1, j)) % f for j in range(d)]
    rows = [[cols[j].coeff(k) for j in range(d)] for k in range(d + 1, 2 * d)]
    rows = [[Fraction(x) for x in row] for row in rows]
    b = _nullspace_first(rows, d)
    if b is None or not any(b):
        raise NoSolution("only the trivial solution Q = 0 exists")
    Q = RatPoly(b)
    P = (delta * Q) % f
    if P.deg > d:
        raise NoSolution("reduced product has degree above d")
    return P, Q


# --- text grammar -----------------------------------------------------------

_TERM = re.compile(r"([+-]?)([^+-]+)")


def _parse_number(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad coefficient {s!r}") from e


def parse_poly(text: str, var: str = "t") -> RatPoly:
    """Parse e.g. '27*t^6+16', '-t^2 + 1/2*t', '3/4'."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ParseError("empty polynomial")
    terms: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m:
            raise ParseError(f"cannot parse {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        pos = m.end()
        coeff = Fraction(1)
        k = 0
        if var in body:
            if "*" in body:
                cpart, vpart = body.split("*", 1)
                coeff = _parse_number(cpart)
            else:
                vpart = body
            if vpart == var:
                k = 1
            elif vpart.startswith(var + "^"):
                try:
                    k = int(vpart[len(var) + 1:])
                except ValueError as e:
                    raise ParseError(f"bad exponent in {body!r}") from e
            else:
                raise ParseError(f"bad term {body!r}")
        else:
            coeff = _parse_number(body)
        terms[k] = terms.get(k, Fraction(0)) + sign * coeff
    n = max(terms) if terms else 0
    return RatPoly([terms.get(i, Fraction(0)) for i in range(n + 1)])


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return f"({c})"


def format_poly(p: RatPoly, var: str = "t") -> str:
    if not p.c:
        return "0"
    parts = []
    for k in range(p.deg, -1, -1):
        c = p.c[k]
        if not c:
            continue
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        if k == 0:
            body = _fmt_coeff(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


def parse_ratfunc(text: str, var: str = "t") -> RatFunc:
    """'num' or 'num/den' where a denominator polynomial is parenthesized."""
    s = text.strip()
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0 and s[:i].endswith(")"):
            return RatFunc(parse_poly(_strip(s[:i]), var), parse_poly(_strip(s[i + 1:]), var))
    return RatFunc(parse_poly(_strip(s), var))


def _strip(s: str) -> str:
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        return s[1:-1]
    return s
