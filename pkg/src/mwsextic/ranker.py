"""Generic rank of E_{A,B}(Q(t)) from cube and square tests on A, B and 4AB."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactnum import ZeroInput, is_cube, is_minus3_square, is_square, sixth_power_free


class NotCoprime(ValueError):
    pass


class SingularSubstitution(ValueError):
    pass


def quad_field_degree(x: int) -> int:
    """Degree of Q(sqrt(x), zeta_3) over Q."""
    if x == 0:
        raise ZeroInput("input must be non-zero")
    return 2 if is_square(x) or is_minus3_square(x) else 4


def subcase(x: int) -> str:
    if is_square(x):
        return "square"
    if is_minus3_square(x):
        return "minus3square"
    return "neither"


@dataclass(frozen=True)
class RankCertificate:
    A: int
    B: int
    path: str
    subcases: tuple[str, str]
    rank: int
    v_ranks: tuple[int, int, int, int]

    def to_json(self) -> dict:
        return {"A": self.A, "B": self.B, "rank": self.rank, "path": self.path,
                "subcases": list(self.subcases), "v_ranks": list(self.v_ranks)}


def _yn(b: bool) -> str:
    return "Y" if b else "N"


def _path(A: int, B: int) -> str:
    """The Y/N answers met while walking the decision diagrams."""
    a4 = quad_field_degree(A) == 4
    b4 = quad_field_degree(B) == 4
    path = _yn(a4) + _yn(b4)
    if a4 and b4:
        return path
    c4ab = is_cube(4 * A * B)
    path += _yn(c4ab)
    if a4:
        return path + _yn(is_cube(A))
    if b4:
        return path + _yn(is_cube(B))
    if c4ab:
        if is_cube(A):
            return path + "Y"
        return path + "N" + _yn(is_cube(B))
    return path + _yn(is_cube(A)) + _yn(is_cube(B))


def decide_rank(A: int, B: int) -> RankCertificate:
    if A == 0:
        raise ZeroInput("A must be non-zero")
    if B == 0:
        raise ZeroInput("B must be non-zero")
    sa, sb = subcase(A), subcase(B)
    a_ok, b_ok = sa != "neither", sb != "neither"
    c4ab = is_cube(4 * A * B)
    r1 = int(is_cube(B) and a_ok)
    r2 = int(is_cube(A) and b_ok)
    r3 = int(c4ab and a_ok)
    r4 = int(c4ab and b_ok)
    v = (r1, r2, r3, r4)
    return RankCertificate(A, B, _path(A, B), (sa, sb), sum(v), v)


# --- sextic twists ------------------------------------------------------------

# Rank-1 rows (|A|, |B|) as exponent data: (2-exp, 3-exp, p-exp, q-exp) for A then B
_TABLE1 = [
    ((0, 1, 2, 4), (4, 2, 4, 2)),
    ((0, 3, 2, 4), (4, 0, 4, 2)),
    ((0, 5, 2, 4), (4, 4, 4, 2)),
    ((2, 1, 2, 4), (2, 2, 4, 2)),
    ((2, 3, 2, 4), (2, 0, 4, 2)),
    ((2, 5, 2, 4), (2, 4, 4, 2)),
    ((4, 1, 2, 4), (0, 2, 4, 2)),
    ((4, 3, 2, 4), (0, 0, 4, 2)),
    ((4, 5, 2, 4), (0, 4, 4, 2)),
]


def _exps(x: int) -> tuple[int, int, dict[int, int]]:
    """Exponents of 2, 3 and of the primes >= 5 in a sixth-power-free integer."""
    from .exactnum import factor
    f = factor(abs(x))
    rest = {p: e for p, e in f.factors if p > 3}
    return f.exponent(2), f.exponent(3), rest


def _pq_split(ea: dict, eb: dict, pa: int, qa: int, pb: int, qb: int):
    """Find coprime cube-free p, q prime to 6 with A-part p^pa q^qa and B-part p^pb q^qb (mod 6)."""
    primes = set(ea) | set(eb)
    p = q = 1
    for r in primes:
        a, b = ea.get(r, 0), eb.get(r, 0)
        hits = []
        for i in range(3):          # exponent of r in p (cube-free)
            for j in range(3):      # exponent of r in q
                if i and j:
                    continue
                if (pa * i + qa * j) % 6 == a and (pb * i + qb * j) % 6 == b:
                    hits.append((i, j))
        if not hits:
            return None
        i, j = hits[0]
        p *= r ** i
        q *= r ** j
    return p, q


def match_twist_rule(A: int, B: int):
    """Which rank rule the sixth-power-free pair matches, trying both orders."""
    A0, _ = sixth_power_free(A)
    B0, _ = sixth_power_free(B)
    for X, Y, swapped in ((A0, B0, False), (B0, A0, True)):
        tag = " (swapped)" if swapped else ""
        if X == 27 and Y == 16:
            return "rank 2: A=3^3 a^6, B=2^4 b^6" + tag
        if X == -1 and Y == -432:
            return "rank 2: A=-a^6, B=-2^4 3^3 b^6" + tag
    for X, Y, swapped in ((A0, B0, False), (B0, A0, True)):
        tag = " (swapped)" if swapped else ""
        e2y, e3y, ry = _exps(Y)
        if X == 27 and Y > 0 and e2y == 0 and e3y == 0 and _pq_split({}, ry, 0, 0, 2, 0):
            return "rank 1: A=3^3, B=p^2" + tag
        if X == -1 and Y < 0 and e2y == 0 and e3y == 1 and _pq_split({}, ry, 0, 0, 2, 0):
            return "rank 1: A=-1, B=-3p^2" + tag
        if (X > 0) == (Y > 0):
            e2x, e3x, rx = _exps(X)
            for k, ((a2, a3, ap, aq), (b2, b3, bp, bq)) in enumerate(_TABLE1):
                if (e2x, e3x, e2y, e3y) == (a2, a3, b2, b3) and _pq_split(rx, ry, ap, aq, bp, bq):
                    return f"rank 1: table row {k + 1}" + tag
    return None


def classify_sextic_twist(a: int, b: int, c: int):
    """Rank of y^2 = x^3 + 3ca^2 t^6 + cb^2 and the rule it matches."""
    if 0 in (a, b, c):
        raise ZeroInput("a, b, c must be non-zero")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    A, B = 3 * c * a * a, c * b * b
    cert = decide_rank(A, B)
    return cert, match_twist_rule(A, B)


# --- linear substitutions -----------------------------------------------------

@dataclass(frozen=True)
class LinearReduction:
    A: int
    B: int
    a: int
    b: int
    c: int
    d: int

    def substitution(self) -> str:
        return f"u = ({self.a}*t{self.b:+d})/({self.c}*t{self.d:+d})"

    def pull_back(self, pt):
        """Map a point of E_{A,B} over Q(u) to y^2 = x^3 + A(at+b)^6 + B(ct+d)^6."""
        from .ellcurve import CurvePoint
        from .funcfield import RatFunc, RatPoly
        if pt.is_infinity:
            return pt
        num = RatPoly([self.b, self.a])
        den = RatPoly([self.d, self.c])
        x = pt.x.subs(num, den)
        y = pt.y.subs(num, den)
        dd = RatFunc.poly(den)
        return CurvePoint(x * dd * dd, y * dd * dd * dd)

    def sextic(self):
        from .funcfield import RatPoly
        p = RatPoly([self.b, self.a]) ** 6
        q = RatPoly([self.d, self.c]) ** 6
        return p.scale(self.A) + q.scale(self.B)


def reduce_linear_form(A: int, ab: tuple[int, int], B: int, cd: tuple[int, int]) -> LinearReduction:
    """y^2 = x^3 + A(at+b)^6 + B(ct+d)^6 is E_{A,B} in the variable u = (at+b)/(ct+d)."""
    a, b = ab
    c, d = cd
    if a * d - b * c == 0:
        raise SingularSubstitution("ad - bc must be non-zero")
    if A == 0 or B == 0:
        raise ZeroInput("A and B must be non-zero")
    return LinearReduction(A, B, a, b, c, d)
