"""Explicit generators of E_{A,B}(Q(t)) from the per-case recipes.

Each recipe names its basis as integer combinations of sections over the radical
tower (P, Q, R, S, their first conjugates, and the U/V/W/X families). The sums
are formed once in the tower and then pushed to Q(t) through an embedding, which
chooses sixth roots of A and B and a cube root of 2. The first embedding under
which every point is rational and the Gram matrix, relations and height sets
agree with the recipe is taken.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .ellcurve import INFINITY, CurvePoint, Curve, add, scalar_mul
from .exactnum import factor
from .funcfield import RatFunc, RatPoly
from .heightlat import classify_lattice, determinant, gram_matrix, naive_height
from .qbar import (U_point, V_point, W_point, X_point, apply_conjugation, base_points,
                   orbit_points)
from .ranker import RankCertificate, decide_rank
from .tower import SQRT_M3, W, TowerElem, TowerRing


class BranchSearchExhausted(RuntimeError):
    """No embedding makes the recipe verify; the recipe itself is wrong."""


class IrrationalRadical(ValueError):
    pass


# --- Q(zeta_12) -----------------------------------------------------------------

class Cyc12:
    """Q(x) with x = exp(i pi / 6), x^4 = x^2 - 1."""

    __slots__ = ("c",)

    def __init__(self, c=(0, 0, 0, 0)):
        self.c = tuple(Fraction(v) for v in c)

    @classmethod
    def power(cls, n: int) -> "Cyc12":
        return _XPOW[n % 12]

    def __add__(self, o):
        return Cyc12(tuple(a + b for a, b in zip(self.c, o.c)))

    def __mul__(self, o):
        if not isinstance(o, Cyc12):
            return Cyc12(tuple(a * o for a in self.c))
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    prod[i + j] += a * b
        for k in (6, 5, 4):  # x^k = x^(k-2) - x^(k-4)
            v = prod[k]
            if v:
                prod[k - 2] += v
                prod[k - 4] -= v
                prod[k] = 0
        return Cyc12(prod[:4])

    def __bool__(self):
        return any(self.c)

    def rational(self) -> Fraction | None:
        return self.c[0] if not any(self.c[1:]) else None


def _make_powers():
    x = Cyc12((0, 1, 0, 0))
    out = [Cyc12((1, 0, 0, 0))]
    for _ in range(11):
        out.append(out[-1] * x)
    return out


_XPOW = _make_powers()
_SQRT3 = Cyc12((0, 2, 0, -1))  # 2x - x^3


def _qz(p: Fraction, q: Fraction) -> Cyc12:
    """p + q z with z = x^4 = x^2 - 1."""
    return Cyc12((p - q, 0, q, 0))


# --- embeddings ---------------------------------------------------------------

class Embedding:
    """u -> |A|^(1/6) e^{i pi (sA + 2 eu)/6}, v likewise, w -> 2^(1/3) z^ew, z -> e^{2 pi i/3}."""

    def __init__(self, A: int, B: int, eu: int, ev: int, ew: int, fa=None, fb=None):
        self.A, self.B = A, B
        self.eu, self.ev, self.ew = eu, ev, ew
        self.fa = fa if fa is not None else dict(factor(abs(A)).factors)
        self.fb = fb if fb is not None else dict(factor(abs(B)).factors)
        self._phase_u = (0 if A > 0 else 1) + 2 * eu
        self._phase_v = (0 if B > 0 else 1) + 2 * ev
        self._cache: dict = {}

    def __repr__(self):
        return f"Embedding(eu={self.eu}, ev={self.ev}, ew={self.ew})"

    def monomial(self, i: int, j: int, k: int):
        """(kappa, value) with u^i v^j w^k = value * kappa^(1/6), kappa sixth-power-free."""
        key = (i, j, k)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        exps: dict[int, int] = {}
        for p, e in self.fa.items():
            exps[p] = exps.get(p, 0) + i * e
        for p, e in self.fb.items():
            exps[p] = exps.get(p, 0) + j * e
        exps[2] = exps.get(2, 0) + 2 * k
        kappa, root = 1, 1
        sqrt3 = False
        for p, e in exps.items():
            root *= p ** (e // 6)
            r = e % 6
            if p == 3 and r >= 3:
                sqrt3 = True
                r -= 3
            kappa *= p**r
        n = i * self._phase_u + j * self._phase_v + 4 * self.ew * k
        val = Cyc12.power(n) * Fraction(root)
        if sqrt3:
            val = val * _SQRT3
        out = (kappa, val)
        self._cache[key] = out
        return out

    def scalar(self, e) -> Fraction | None:
        if not isinstance(e, TowerElem):
            return Fraction(e)
        acc: dict[int, Cyc12] = {}
        for (i, j), c in e.t.items():
            for k in range(3):
                p, q = c.a[2 * k], c.a[2 * k + 1]
                if p or q:
                    kappa, val = self.monomial(i, j, k)
                    term = val * _qz(Fraction(p, c.d), Fraction(q, c.d))
                    acc[kappa] = acc[kappa] + term if kappa in acc else term
        out = Fraction(0)
        for kappa, v in acc.items():
            if not v:
                continue
            if kappa != 1:
                return None
            r = v.rational()
            if r is None:
                return None
            out = r
        return out

    def poly(self, p: RatPoly) -> RatPoly | None:
        cs = []
        for c in p.c:
            r = self.scalar(c)
            if r is None:
                return None
            cs.append(r)
        return RatPoly(cs)

    def point(self, pt: CurvePoint) -> CurvePoint | None:
        if pt.is_infinity:
            return pt
        parts = []
        for f in (pt.x, pt.y):
            n, d = self.poly(f.num), self.poly(f.den)
            if n is None or d is None:
                return None
            parts.append(RatFunc(n, d))
        return CurvePoint(*parts)


def embeddings(A: int, B: int):
    fa = dict(factor(abs(A)).factors)
    fb = dict(factor(abs(B)).factors)
    for eu, ev, ew in product(range(6), range(6), range(3)):
        yield Embedding(A, B, eu, ev, ew, fa, fb)


# --- templates ------------------------------------------------------------------

def _table4(ring: TowerRing) -> dict[str, CurvePoint]:
    """Closed forms of R+S, R-S, P+2P^s, Q+2Q^s and R+-S+2(R+-S)^s in the tower."""
    e = ring.elem
    A, B = ring.A, ring.B
    z0 = ring.zero()
    sA, sB, cA, cB = e(1, 3, 0), e(1, 0, 3), e(1, 2, 0), e(1, 0, 2)
    s = e(W * W, 2, 2)                      # cbrt(4AB)
    r3A, r3B = e(SQRT_M3, 3, 0), e(SQRT_M3, 0, 3)  # sqrt(-3A), sqrt(-3B)

    def poly(*terms):
        """poly((k, c), ...) = sum c t^k."""
        n = max(k for k, _ in terms) + 1
        cs = [z0] * n
        for k, c in terms:
            cs[k] = cs[k] + c
        return RatPoly(cs)

    def over(p, k):
        return RatFunc(p, RatPoly([z0] * k + [e(1)]))

    big_a = poly((0, e(B * B)), (6, e(16 * A * B)), (12, e(16 * A * A)))
    big_b = poly((0, e(16 * B * B)), (6, e(16 * A * B)), (12, e(A * A)))
    return {
        "RpS": CurvePoint(over(poly((0, B / s)), 2),
                          over(poly((0, -B / (2 * sA)), (6, -sA)), 3)),
        "RmS": CurvePoint(over(poly((4, A / s)), 0),
                          over(poly((0, -sB), (6, -A / (2 * sB))), 0)),
        "P2Ps": CurvePoint(over(poly((0, -cB), (6, -4 * A * cB / (3 * B))), 0),
                           over(poly((3, r3A), (9, 8 * A * r3A / (9 * B))), 0)),
        "Q2Qs": CurvePoint(over(poly((0, -4 * B * cA / (3 * A)), (6, -cA)), 4),
                           over(poly((0, 8 * B * r3B / (9 * A)), (6, r3B)), 6)),
        "RpS2": CurvePoint(
            over(big_a * (-1 / (3 * B * s)), 2),
            over(poly((0, e(B)), (6, e(2 * A)))
                 * poly((0, e(B * B)), (6, e(-32 * A * B)), (12, e(-32 * A * A)))
                 * (-1 / (6 * B * B * r3A)), 3)),
        "RmS2": CurvePoint(
            over(big_b * (-1 / (3 * A * s)), 8),
            over(poly((0, e(2 * B)), (6, e(A)))
                 * poly((0, e(-32 * B * B)), (6, e(-32 * A * B)), (12, e(A * A)))
                 * (-1 / (6 * A * A * r3B)), 12)),
    }


TEMPLATE_TITLES = {
    "P": "P", "Q": "Q", "R": "R", "S": "S",
    "Ps": "P^s", "Qs": "Q^s", "Rs": "R^s", "Ss": "S^s",
    "RpS": "R+S", "RmS": "R-S", "P2Ps": "P+2P^s", "Q2Qs": "Q+2Q^s",
    "RpS2": "R+S+2(R+S)^s", "RmS2": "R-S+2(R-S)^s",
}
TABLE4_HEIGHTS = {"RpS": 4, "RmS": 4, "P2Ps": 6, "Q2Qs": 6, "RpS2": 12, "RmS2": 12}

_FAMILY = {"U": U_point, "V": V_point, "W": W_point, "X": X_point}


class Atoms:
    """Named sections over the tower, built on demand and cached."""

    def __init__(self, ring: TowerRing):
        self.ring = ring
        self._cache: dict = {}

    def __getitem__(self, name: str) -> CurvePoint:
        if name in self._cache:
            return self._cache[name]
        if name[0] in _FAMILY and name[1:].isdigit():
            pt = _FAMILY[name[0]](self.ring, *(int(ch) for ch in name[1:]))
            self._cache[name] = pt
        elif name in ("P", "Q", "R", "S", "Ps", "Qs", "Rs", "Ss"):
            self._cache.update(base_points(self.ring))
        elif name in TABLE4_HEIGHTS:
            self._cache.update(_table4(self.ring))
        else:
            raise KeyError(f"unknown template {name!r}")
        return self._cache[name]

    def combo(self, expr) -> CurvePoint:
        return combine_named(self, expr)


def combine_named(table, expr) -> CurvePoint:
    out = INFINITY
    for c, name in expr:
        p = table[name]
        out = add(out, p if c == 1 else (-p if c == -1 else scalar_mul(c, p)))
    return out


def _expr(text: str):
    """'q + 2v - w1' -> [(1, 'q'), (2, 'v'), (-1, 'w1')]."""
    terms = []
    sign = 1
    for tok in text.replace("-", " - ").replace("+", " + ").split():
        if tok in "+-":
            sign = -1 if tok == "-" else 1
            continue
        k = 0
        while k < len(tok) and tok[k].isdigit():
            k += 1
        terms.append((sign * (int(tok[:k]) if k else 1), tok[k:]))
        sign = 1
    return terms


def instantiate_template(name: str, A: int, B: int, branch: tuple[int, int, int] | None = None):
    """The template as a Q(t)-point; branch (eu, ev, ew) fixes the radicals, else the first rational one."""
    atoms = Atoms(TowerRing(A, B))
    pt = atoms.combo(_expr(name))
    embs = [Embedding(A, B, *branch)] if branch is not None else embeddings(A, B)
    for emb in embs:
        q = emb.point(pt)
        if q is not None:
            return q
    raise IrrationalRadical(f"{name} is not rational at ({A}, {B}) under any branch")


# --- recipes ----------------------------------------------------------------------

@dataclass(frozen=True)
class Recipe:
    """blocks: rational sections built in the tower; everything else is over Q(t)."""
    label: str
    blocks: tuple[tuple[str, str], ...]
    basis: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    relations: tuple[tuple[str, str], ...] = ()
    # (points, allowed heights of their non-zero {0,1}-combinations)
    height_sets: tuple[tuple[tuple[str, ...], frozenset], ...] = ()


def _diag(*d):
    n = len(d)
    return tuple(tuple(d[i] if i == j else 0 for j in range(n)) for i in range(n))


SQ, M3 = "square", "minus3square"
_A22 = ((2, 0, 0), (0, 4, -2), (0, -2, 4))
_RANK1 = [  # per module V1..V4: (coefficient whose class decides, {class: (template, height)})
    (0, {SQ: ("P", 2), M3: ("P2Ps", 6)}),
    (1, {SQ: ("Q", 2), M3: ("Q2Qs", 6)}),
    (0, {SQ: ("RpS", 4), M3: ("RpS2", 12)}),
    (1, {SQ: ("RmS", 4), M3: ("RmS2", 12)}),
]


def _R(label, blocks, basis, gram, relations=(), height_sets=()):
    return Recipe(label, tuple(blocks.items()), tuple(basis), gram, tuple(relations),
                  tuple((tuple(p), frozenset(h)) for p, h in height_sets))


RECIPES: dict[tuple[str, str, str], Recipe] = {
    ("YNYY", "*", SQ): _R("YNYY / B=sq", {"q": "Q", "d": "RmS"}, ["q", "d"], _diag(2, 4),
                          height_sets=[(["q", "d"], {2, 4, 6})]),
    ("YNYY", "*", M3): _R("YNYY / B=-3sq", {"q": "Q2Qs", "d": "RmS2", "v": "V001"},
                          ["v", "q + v"], _diag(2, 4),
                          relations=[("q + d", "-3v")],
                          height_sets=[(["q", "v"], {2, 4, 6})]),
    ("NYYY", SQ, "*"): _R("NYYY / A=sq", {"p": "P", "a": "RpS"}, ["p", "a"], _diag(2, 4),
                          height_sets=[(["p", "a"], {2, 4, 6})]),
    ("NYYY", M3, "*"): _R("NYYY / A=-3sq", {"p": "P2Ps", "a": "RpS2", "u": "U001"},
                          ["u", "p + u"], _diag(2, 4),
                          relations=[("p + a", "-3u")]),
    ("NNYNN", SQ, SQ): _R("NNYNN / A=sq, B=sq", {"r": "R", "s": "S"}, ["r", "s"], _diag(2, 2)),
    ("NNYNN", M3, SQ): _R("NNYNN / A=-3sq, B=sq", {"c": "R + Rs + Ss", "d": "RmS"},
                          ["c", "-d"], ((4, 2), (2, 4))),
    ("NNYNN", SQ, M3): _R("NNYNN / A=sq, B=-3sq", {"c": "R + Rs - Ss", "a": "RpS"},
                          ["c", "-a"], ((4, 2), (2, 4))),
    ("NNYNN", M3, M3): _R("NNYNN / A=-3sq, B=-3sq", {"r": "R + 2Rs", "s": "S + 2Ss"},
                          ["r", "s"], _diag(6, 6)),
    ("NNNYY", SQ, SQ): _R("NNNYY / A=sq, B=sq", {"p": "P", "q": "Q"}, ["p", "q"], _diag(2, 2)),
    ("NNNYY", SQ, M3): _R("NNNYY / A=sq, B=-3sq", {"p": "P", "q": "Q2Qs"}, ["p", "q"], _diag(2, 6)),
    ("NNNYY", M3, SQ): _R("NNNYY / A=-3sq, B=sq", {"q": "Q", "p": "P2Ps"}, ["q", "p"], _diag(2, 6)),
    ("NNNYY", M3, M3): _R("NNNYY / A=-3sq, B=-3sq", {"p": "P2Ps", "q": "Q2Qs"}, ["p", "q"],
                          _diag(6, 6)),
    ("NNYY", SQ, SQ): _R("NNYY / A=sq, B=sq", {"q": "Q", "r": "R", "s": "S"}, ["q", "r", "s"],
                         _diag(2, 2, 2)),
    ("NNYY", M3, SQ): _R("NNYY / A=-3sq, B=sq", {"q": "Q", "c": "R + Rs + Ss", "d": "RmS"},
                         ["q", "c", "-d"], _A22,
                         height_sets=[(["q", "c", "-d"], {2, 4, 6, 12, 14})]),
    ("NNYY", SQ, M3): _R("NNYY / A=sq, B=-3sq",
                         {"q": "Q2Qs", "a": "RpS", "d": "RmS2", "v": "V001",
                          "w1": "W0201", "w2": "W0211"},
                         ["w2", "w1", "v"], _diag(2, 2, 2),
                         relations=[("q + d", "-3v"), ("q + v + a", "2w1"), ("q - w1 + v", "w2")]),
    ("NNYY", M3, M3): _R("NNYY / A=-3sq, B=-3sq",
                         {"q": "Q2Qs", "a": "RpS2", "d": "RmS2", "v": "V001",
                          "w": "W0201 + W2101 + W2110"},
                         ["v", "q + v", "-w"], _A22,
                         relations=[("q + d", "-3v"), ("q + a + v", "2w")],
                         height_sets=[(["q", "w", "v"], {2, 4, 6, 12, 14})]),
    ("NNYNY", SQ, SQ): _R("NNYNY / A=sq, B=sq", {"p": "P", "r": "R", "s": "S"}, ["p", "r", "s"],
                          _diag(2, 2, 2), height_sets=[(["p", "r", "s"], {2, 4, 6})]),
    ("NNYNY", SQ, M3): _R("NNYNY / A=sq, B=-3sq", {"p": "P", "a": "RpS", "c": "R + Rs - Ss"},
                          ["p", "a", "-c"], _A22,
                          height_sets=[(["p", "a", "c"], {2, 4, 6, 12, 14})]),
    ("NNYNY", M3, SQ): _R("NNYNY / A=-3sq, B=sq",
                          {"p": "P2Ps", "c": "R + Rs + Ss", "d": "RmS", "x1": "X1201",
                           "u": "U002", "x2": "X1210"},
                          ["u", "x1", "x2"], _diag(2, 2, 2),
                          relations=[("p - c - d", "3x1"), ("p - 2x1 - d", "u"), ("x1 + d", "x2")],
                          height_sets=[(["p", "x1", "d"], {2, 4, 6, 10, 12})]),
    ("NNYNY", M3, M3): _R("NNYNY / A=-3sq, B=-3sq",
                          {"p": "P2Ps", "u": "U001", "r": "R + 2Rs", "s": "S + 2Ss"},
                          ["u", "-u - s", "2u + r + s"], _A22,
                          relations=[("p + r + s", "-3u")]),
}


def select_recipe(cert: RankCertificate) -> Recipe | None:
    if cert.rank == 0:
        return None
    if cert.rank == 1:
        i = cert.v_ranks.index(1)
        which, table = _RANK1[i]
        name, h = table[cert.subcases[which]]
        return _R(f"{cert.path} / V{i + 1}: {TEMPLATE_TITLES[name]}", {"e": name}, ["e"], ((h,),))
    sa, sb = cert.subcases
    for key in ((cert.path, sa, sb), (cert.path, "*", sb), (cert.path, sa, "*")):
        if key in RECIPES:
            return RECIPES[key]
    raise KeyError(f"no recipe for path {cert.path} with {sa}, {sb}")


# --- reports --------------------------------------------------------------------

@dataclass
class BasisReport:
    certificate: RankCertificate
    basis: list
    gram: list
    lattice_type: str
    verified: bool
    case_label: str
    embedding: tuple | None = None
    diagnostics: list = field(default_factory=list)

    @property
    def rank(self) -> int:
        return self.certificate.rank

    def to_json(self) -> dict:
        return {"rank": self.rank, "case_label": self.case_label,
                "basis": [str(p) for p in self.basis], "gram": self.gram,
                "lattice_type": self.lattice_type, "verified": self.verified}


def _same(p: CurvePoint, q: CurvePoint) -> bool:
    if p.is_infinity or q.is_infinity:
        return p.is_infinity and q.is_infinity
    return p.x == q.x and p.y == q.y


def _gram_up_to_signs(g, want) -> bool:
    n = len(g)
    if n != len(want):
        return False
    for signs in product((1, -1), repeat=n):
        if signs[0] == -1:
            continue
        if all(g[i][j] == signs[i] * signs[j] * want[i][j] for i in range(n) for j in range(n)):
            return True
    return False


def _combo_heights(A, B, pts) -> set[int]:
    out = set()
    for coeffs in product((0, 1), repeat=len(pts)):
        if any(coeffs):
            p = INFINITY
            for c, q in zip(coeffs, pts):
                if c:
                    p = add(p, q)
            out.add(naive_height(A, B, p))
    return out


def _try_embedding(A, B, emb, recipe, tower_blocks, diag):
    blocks = {}
    for name, tp in tower_blocks.items():
        q = emb.point(tp)
        if q is None:
            return None
        blocks[name] = q
    curve = Curve.sextic(Fraction(A), Fraction(B))
    if not all(curve.on_curve(p) for p in blocks.values()):
        diag.append(f"{emb}: point off the curve")
        return None
    basis = [combine_named(blocks, _expr(e)) for e in recipe.basis]
    g = gram_matrix(A, B, basis)
    if not _gram_up_to_signs(g, recipe.gram):
        diag.append(f"{emb}: Gram {g} differs from {recipe.gram}")
        return None
    for lt, rt in recipe.relations:
        if not _same(combine_named(blocks, _expr(lt)), combine_named(blocks, _expr(rt))):
            diag.append(f"{emb}: relation {lt} = {rt} fails")
            return None
    for exprs, allowed in recipe.height_sets:
        hs = _combo_heights(A, B, [combine_named(blocks, _expr(e)) for e in exprs])
        if not hs <= allowed:
            diag.append(f"{emb}: combination heights {sorted(hs)} not within {sorted(allowed)}")
            return None
    return basis, g


def rational_basis(A: int, B: int) -> BasisReport:
    cert = decide_rank(A, B)
    recipe = select_recipe(cert)
    if recipe is None:
        return BasisReport(cert, [], [], "0", True, cert.path + " / rank 0")
    atoms = Atoms(TowerRing(A, B))
    # each block is rational on its own, so only the blocks go through the tower
    tower_blocks = {name: atoms.combo(_expr(e)) for name, e in recipe.blocks}
    diag: list[str] = []
    for emb in embeddings(A, B):
        hit = _try_embedding(A, B, emb, recipe, tower_blocks, diag)
        if hit is None:
            continue
        basis, g = hit
        rep = BasisReport(cert, basis, g, classify_lattice(g).name, False, recipe.label,
                          (emb.eu, emb.ev, emb.ew))
        rep.verified = verify_basis(rep)
        return rep
    raise BranchSearchExhausted(
        f"no embedding verifies recipe {recipe.label} at ({A}, {B}): {diag[:3]}")


# --- independent verification -------------------------------------------------------

def rational_height_two(A: int, B: int) -> list[CurvePoint]:
    """All Q(t)-rational sections of height 2, read off the 240 tower sections."""
    ring = TowerRing(A, B)
    emb = Embedding(A, B, 0, 0, 0)
    out = []
    for i in range(1, 9):
        for p in orbit_points(i, ring).values():
            q = emb.point(p)
            if q is not None:
                out.append(q)
    return out


def _divisible(A, B, target: CurvePoint, m: int, k: int, cache: dict) -> bool | None:
    """Is target = m * Y for a rational Y of height k? None when undecidable here."""
    if k < 2 or k % 2:
        return False  # the lattice is even with minimum 2
    if k != 2:
        return None
    if "h2" not in cache:
        cache["h2"] = rational_height_two(A, B)
    return any(_same(scalar_mul(m, y), target) for y in cache["h2"])


def saturation_diagnostics(A, B, basis, gram) -> list[str]:
    out = []
    det = int(determinant(gram))
    n = len(basis)
    cache: dict = {}
    for m in (2, 3, 5, 7):
        if det % (m * m):
            continue
        for coeffs in product(range(m), repeat=n):
            if not any(coeffs):
                continue
            h = sum(gram[i][j] * coeffs[i] * coeffs[j] for i in range(n) for j in range(n))
            if h % (m * m):
                continue
            p = INFINITY
            for c, q in zip(coeffs, basis):
                if c:
                    p = add(p, scalar_mul(c, q))
            verdict = _divisible(A, B, p, m, h // (m * m), cache)
            if verdict is None:
                out.append(f"cannot decide {m}-divisibility of combination {coeffs}")
            elif verdict:
                out.append(f"combination {coeffs} is {m}-divisible")
    return out


def verify_basis(report: BasisReport, diagnostics: list | None = None) -> bool:
    diag = report.diagnostics if diagnostics is None else diagnostics
    diag.clear()
    cert = report.certificate
    A, B = cert.A, cert.B
    if len(report.basis) != cert.rank:
        diag.append(f"basis has {len(report.basis)} points, rank is {cert.rank}")
        return False
    if cert.rank == 0:
        return not report.gram
    curve = Curve.sextic(Fraction(A), Fraction(B))
    for p in report.basis:
        if not curve.on_curve(p):
            diag.append(f"{p} is not on the curve")
    if diag:
        return False
    g = gram_matrix(A, B, report.basis)
    if g != report.gram:
        diag.append(f"Gram {report.gram} does not match recomputed {g}")
        return False
    if not determinant(g):
        diag.append("basis is dependent")
        return False
    if classify_lattice(g).name != report.lattice_type:
        diag.append("lattice type does not match")
        return False
    diag.extend(saturation_diagnostics(A, B, report.basis, g))
    return not diag
