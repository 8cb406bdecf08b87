"""Heights of sections, the height pairing, and small-lattice fingerprints."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ellcurve import CurvePoint, add
from .funcfield import infinity_chart, poly_gcd


class NonSquareDenominator(ValueError):
    pass


class OddPoleOrder(ValueError):
    pass


class NotPositiveDefinite(ValueError):
    pass


def naive_height(A, B, pt: CurvePoint) -> int:
    """2 + 2(deg q + delta) where x = p/q^2 and delta comes from the chart at infinity."""
    if pt.is_infinity:
        return 0
    x = pt.x
    q = x.den.sqrt()
    if q is None:
        raise NonSquareDenominator(f"denominator of x is not a square: {x.den}")
    _, pole = infinity_chart(x)
    if pole % 2:
        raise OddPoleOrder(f"pole order {pole} at infinity is odd")
    return 2 + 2 * (q.deg + pole // 2)


def height_pairing(A, B, p1: CurvePoint, p2: CurvePoint) -> int:
    s = naive_height(A, B, add(p1, p2))
    d = s - naive_height(A, B, p1) - naive_height(A, B, p2)
    if d % 2:
        raise ValueError("pairing is not an integer")
    return d // 2


def gram_matrix(A, B, points) -> list[list[int]]:
    pts = list(points)
    h = [naive_height(A, B, p) for p in pts]
    n = len(pts)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = h[i]
        for j in range(i + 1, n):
            s = naive_height(A, B, add(pts[i], pts[j]))
            g[i][j] = g[j][i] = (s - h[i] - h[j]) // 2
    return g


def is_polynomial_section(pt: CurvePoint) -> bool:
    return (not pt.is_infinity and pt.x.den.deg == 0 and pt.y.den.deg == 0
            and pt.x.num.deg <= 2 and pt.y.num.deg <= 3)


def section_intersection(p1: CurvePoint, p2: CurvePoint) -> int:
    """Intersection number of two distinct height-2 sections (polynomial x, y of degree <= 2, 3)."""
    dx = p1.x.num - p2.x.num
    dy = p1.y.num - p2.y.num
    if not dx and not dy:
        raise ValueError("sections coincide")
    finite = poly_gcd(dx, dy).deg
    inf_x = 2 - dx.deg if dx else 10**9
    inf_y = 3 - dy.deg if dy else 10**9
    return finite + min(inf_x, inf_y)


def section_pairing(p1: CurvePoint, p2: CurvePoint) -> int:
    """<P,Q> = 1 - P.Q for distinct height-2 sections; 2 on the diagonal."""
    if not (is_polynomial_section(p1) and is_polynomial_section(p2)):
        raise ValueError("section_pairing needs height-2 polynomial sections")
    if p1.x == p2.x and p1.y == p2.y:
        return 2
    return 1 - section_intersection(p1, p2)


# --- lattices ---------------------------------------------------------------

def determinant(g) -> Fraction:
    m = [[Fraction(x) for x in row] for row in g]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def rank_of(g) -> int:
    m = [[Fraction(x) for x in row] for row in g]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _ldl(g):
    """Exact LDL^T; returns (L, D) or raises NotPositiveDefinite."""
    n = len(g)
    L = [[Fraction(0)] * n for _ in range(n)]
    D = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1):
            s = Fraction(g[i][j]) - sum(L[i][k] * L[j][k] * D[k] for k in range(j))
            if i == j:
                if s <= 0:
                    raise NotPositiveDefinite("Gram matrix is not positive definite")
                D[i] = s
                L[i][i] = Fraction(1)
            else:
                L[i][j] = s / D[j]
    return L, D


def _isqrt_floor(q: Fraction) -> int:
    """Largest integer k with k^2 <= q (q >= 0)."""
    from math import isqrt
    k = isqrt(q.numerator // q.denominator)
    while (k + 1) ** 2 <= q:
        k += 1
    return k


def enumerate_short_vectors(g, bound) -> list[tuple[int, ...]]:
    """All non-zero integer vectors v with v^T g v <= bound (Fincke-Pohst, exact)."""
    n = len(g)
    if n == 0:
        return []
    L, D = _ldl(g)
    bound = Fraction(bound)
    # q(v) = sum_i D_i (v_i + sum_{j>i} L[j][i] v_j)^2
    out = []
    v = [0] * n

    def rec(i, remaining):
        c = -sum(L[j][i] * v[j] for j in range(i + 1, n))
        r = remaining / D[i]
        # v_i in [c - sqrt(r), c + sqrt(r)]
        lo = _ceil_frac(c - _sqrt_upper(r))
        hi = _floor_frac(c + _sqrt_upper(r))
        for x in range(lo, hi + 1):
            t = (x - c) ** 2 * D[i]
            if t > remaining:
                continue
            v[i] = x
            if i == 0:
                if any(v):
                    out.append(tuple(v))
            else:
                rec(i - 1, remaining - t)
        v[i] = 0

    rec(n - 1, bound)
    return out


def _sqrt_upper(r: Fraction) -> Fraction:
    # a rational upper bound for sqrt(r), tight enough for integer rounding
    if r <= 0:
        return Fraction(0)
    k = _isqrt_floor(r)
    return Fraction(k + 1)


def _floor_frac(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil_frac(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def quad(g, v) -> int:
    return sum(g[i][j] * v[i] * v[j] for i in range(len(v)) for j in range(len(v)))


@dataclass(frozen=True)
class LatticeType:
    name: str
    invariants: tuple[int, int, int, int] | None = None
    gram: tuple | None = None

    @property
    def classified(self) -> bool:
        return self.name != "Unclassified"

    def __str__(self):
        return self.name


# (rank, det, #norm 2, #norm 4)
CATALOG: dict[tuple[int, int, int, int], str] = {
    (1, 2, 2, 0): "<2>",
    (1, 4, 0, 2): "<4>",
    (1, 6, 0, 0): "<6>",
    (1, 12, 0, 0): "<12>",
    (2, 4, 4, 4): "<2>+<2>",
    (2, 8, 2, 2): "<2>+<4>",
    (2, 12, 2, 0): "<2>+<6>",
    (2, 36, 0, 0): "<6>+<6>",
    (2, 3, 6, 0): "A2",
    (2, 12, 0, 6): "A2(2)",
    (4, 9, 12, 36): "A2+A2",
    (3, 8, 6, 12): "<2>+<2>+<2>",
    (3, 24, 2, 6): "<2>+A2(2)",
    (4, 4, 24, 24): "D4",
    (6, 3, 72, 270): "E6",
    (8, 1, 240, 2160): "E8",
}


def invariants(g) -> tuple[int, int, int, int]:
    n = len(g)
    det = determinant(g)
    vecs = enumerate_short_vectors(g, 4)
    n2 = sum(1 for v in vecs if quad(g, v) == 2)
    n4 = sum(1 for v in vecs if quad(g, v) == 4)
    return n, int(det), n2, n4


def classify_lattice(g) -> LatticeType:
    if not g:
        return LatticeType("0", (0, 1, 0, 0))
    inv = invariants(g)
    name = CATALOG.get(inv)
    if name is None:
        return LatticeType("Unclassified", inv, tuple(tuple(r) for r in g))
    return LatticeType(name, inv)
