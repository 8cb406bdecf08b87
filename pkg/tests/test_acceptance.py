"""One check per acceptance criterion; each prints a PASS/FAIL line.

Run directly with `python3 tests/test_acceptance.py` for the summary alone; under
pytest the lines are collected and shown in the terminal summary.
"""
import random
import time
from fractions import Fraction
from math import gcd, isqrt

from sympy import factorint

from mwsextic.basisgen import Atoms, Embedding, instantiate_template, rational_basis, verify_basis
from mwsextic.ellcurve import INFINITY, Curve, add, scalar_mul
from mwsextic.exactnum import sixth_power_free
from mwsextic.heightlat import naive_height
from mwsextic.qbar import EXPECTED_TYPES, ORBIT_SIZES, verify_galois_decomposition, verify_orbit
from mwsextic.ranker import decide_rank
from mwsextic.rootnum import PLUS, MINUS, NOT_COVERED, TwistFamily, constant_root_number, \
    fibre_root_number_product
from mwsextic.funcfield import RatFunc, RatPoly
from mwsextic.tower import TowerRing

LINES: dict[int, str] = {}


def _report(n, ok, detail=""):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    LINES[n] = line
    print(line)
    assert ok, line


# --- 1 -------------------------------------------------------------------------

RANK3 = [(1, 16), (-27, 16), (-27, -432), (1, -432)]


def test_criterion_1_rank_three_families():
    t0 = time.time()
    fams = set()
    bad = []
    for a0, b0 in RANK3:
        for al in (1, 2):
            for be in (1, 2):
                for A, B in ((a0 * al ** 6, b0 * be ** 6), (b0 * be ** 6, a0 * al ** 6)):
                    fams.add((A, B))
                    rep = rational_basis(A, B)
                    if not (decide_rank(A, B).rank == 3 and len(rep.basis) == 3
                            and rep.verified and verify_basis(rep)):
                        bad.append((A, B))
    reps = {(a, b) for a, b in RANK3} | {(b, a) for a, b in RANK3}
    grid_bad = []
    for A in range(-50, 51):
        for B in range(-50, 51):
            if A == 0 or B == 0 or sixth_power_free(A)[0] != A or sixth_power_free(B)[0] != B:
                continue
            r = decide_rank(A, B).rank
            if r > 3 or (r == 3) != ((A, B) in reps):
                grid_bad.append((A, B, r))
    dt = time.time() - t0
    _report(1, len(fams) == 32 and not bad and not grid_bad and dt < 60,
            f"{len(fams)} pairs, failures {bad + grid_bad}, {dt:.1f}s")


# --- 2, 3 ----------------------------------------------------------------------

def test_criterion_2_example_27_16():
    rep = rational_basis(27, 16)
    xs = {str(p.x): p for p in rep.basis}
    first = [p for p in rep.basis
             if p.x == RatFunc(RatPoly([0, 0, -3])) and p.y == RatFunc(RatPoly([4]))]
    second = [p for p in rep.basis if p.x == RatFunc(RatPoly([0, 0, 0, 0, Fraction(9, 4)]))]
    ok = (decide_rank(27, 16).rank == 2 and len(first) == 1 and len(second) == 1
          and naive_height(27, 16, second[0]) == 4
          and Curve.sextic(27, 16).on_curve(second[0])
          and rep.gram == [[2, 0], [0, 4]] and rep.lattice_type == "<2>+<4>" and rep.verified)
    _report(2, ok, f"basis x-coordinates {sorted(xs)}, gram {rep.gram}")


def test_criterion_3_example_162_6():
    rep = rational_basis(162, 6)
    _report(3, decide_rank(162, 6).rank == 0 and rep.basis == [] and verify_basis(rep))


# --- 4, 5 ----------------------------------------------------------------------

NORM2 = {"A2": 6, "A2+A2": 12, "D4": 24, "E6": 72, "E8": 240}


def test_criterion_4_orbit_suite():
    from mwsextic.heightlat import classify_lattice
    t0 = time.time()
    bad = []
    for pair in ((5, 7), (2, 3)):
        sizes = []
        for i in range(1, 9):
            rep = verify_orbit(i, *pair)
            sizes.append(rep.size)
            inv = classify_lattice(rep.gram).invariants
            if not (rep.ok and rep.relations_checked > 0 and rep.lattice_type == EXPECTED_TYPES[i]
                    and inv[2] == NORM2[EXPECTED_TYPES[i]]):
                bad.append((pair, i))
        if tuple(sizes) != (6, 6, 12, 18, 18, 36, 36, 108) or sum(sizes) != 240:
            bad.append((pair, "sizes"))
    dt = time.time() - t0
    _report(4, not bad and dt < 600 and sum(ORBIT_SIZES.values()) == 240,
            f"failures {bad}, {dt:.1f}s")


def test_criterion_5_galois_suite():
    bad = []
    for pair in ((5, 7), (2, 3)):
        g = verify_galois_decomposition(*pair)
        if not (g.kronecker_ok and g.det == 81 and g.orthogonality["<R+S, R-S>"] == 0 and g.ok):
            bad.append(pair)
    _report(5, not bad, f"failures {bad}")


# --- 6 -------------------------------------------------------------------------

# Saturation identities and {0,1}-combination height sets per case, with the pair used.
# Relations are (lhs terms, multiplier, rhs terms): sum(lhs) == multiplier * sum(rhs).
# Each term must be rational on its own; sums of conjugate sections go in one string.
SATURATION = [
    ("YNYY / B=sq", (27, 16), [], [(["Q", "RmS"], {2, 4, 6})]),
    ("YNYY / B=-3sq", (27, -432),
     [(["Q2Qs", "RmS2"], -3, ["V001"])],
     [(["Q2Qs", "V001"], {2, 4, 6})]),
    ("NYYY / A=sq", (16, 27), [], [(["P", "RpS"], {2, 4, 6})]),
    ("NYYY / A=-3sq", (-432, 27), [(["P2Ps", "RpS2"], -3, ["U001"])], []),
    ("NNNYY / A=-3sq, B=-3sq", (-27, -27), [], [(["P2Ps", "Q2Qs"], {6, 12})]),
    ("NNYY / A=-3sq, B=sq", (-27, 16), [],
     [(["Q", "R + Rs + Ss", "-RmS"], {2, 4, 6, 12, 14})]),
    ("NNYY / A=sq, B=-3sq", (1, -432),
     [(["Q2Qs", "RmS2"], -3, ["V001"]),
      (["Q2Qs", "V001", "RpS"], 2, ["W0201"]),
      (["Q2Qs", "-W0201", "V001"], 1, ["W0211"])], []),
    ("NNYY / A=-3sq, B=-3sq", (-27, -432),
     [(["Q2Qs", "RmS2"], -3, ["V001"]),
      (["Q2Qs", "RpS2", "V001"], 2, ["W0201 + W2101 + W2110"])],
     [(["Q2Qs", "W0201 + W2101 + W2110", "V001"], {2, 4, 6, 12, 14})]),
    ("NNYNY / A=sq, B=sq", (16, 1), [], [(["P", "R", "S"], {2, 4, 6})]),
    ("NNYNY / A=sq, B=-3sq", (16, -27), [], [(["P", "RpS", "R + Rs - Ss"], {2, 4, 6, 12, 14})]),
    # this package's X sections carry the opposite sign, hence +3 below
    ("NNYNY / A=-3sq, B=sq", (-432, 1),
     [(["P2Ps", "-R - Rs - Ss", "-RmS"], 3, ["X1201"]),
      (["P2Ps", "-2X1201", "-RmS"], 1, ["U002"]),
      (["X1201", "RmS"], 1, ["X1210"])],
     [(["P2Ps", "X1201", "RmS"], {2, 4, 6, 10, 12})]),
    ("NNYNY / A=-3sq, B=-3sq", (-432, -27), [(["P2Ps", "R + 2Rs", "S + 2Ss"], -3, ["U001"])], []),
]


def _parse(text):
    out = []
    for tok in text.replace(" ", "").replace("-", "+-").split("+"):
        if not tok:
            continue
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("-")
        k = len(tok) - len(tok.lstrip("0123456789"))
        out.append((sign * (int(tok[:k]) if k else 1), tok[k:]))
    return out


def _rational(atoms, emb, text, cache):
    """Q(t)-point of an expression in named sections, or None if it is not rational."""
    if text not in cache:
        total = INFINITY
        for c, name in _parse(text):
            total = add(total, scalar_mul(c, atoms[name]))
        cache[text] = emb.point(total)
    return cache[text]


def _check_case(label, pair, rels, hsets):
    A, B = pair
    rep = rational_basis(A, B)
    if rep.case_label != label or not rep.verified:
        return f"{label}: report {rep.case_label} verified={rep.verified}"
    atoms = Atoms(TowerRing(A, B))
    emb = Embedding(A, B, *rep.embedding) if rep.embedding else None
    cache = {}
    curve = Curve.sextic(A, B)
    for lhs, m, rhs in rels:
        pts = [_rational(atoms, emb, e, cache) for e in lhs + rhs]
        if any(p is None or not curve.on_curve(p) for p in pts):
            return f"{label}: a term is not rational on the curve"
        left = INFINITY
        for p in pts[:len(lhs)]:
            left = add(left, p)
        right = INFINITY
        for p in pts[len(lhs):]:
            right = add(right, p)
        right = scalar_mul(m, right)
        if (left.x, left.y) != (right.x, right.y):
            return f"{label}: {lhs} != {m} * {rhs}"
    for exprs, allowed in hsets:
        pts = [_rational(atoms, emb, e, cache) for e in exprs]
        if any(p is None for p in pts):
            return f"{label}: combination term not rational"
        heights = set()
        for mask in range(1, 2 ** len(pts)):
            s = INFINITY
            for i, p in enumerate(pts):
                if mask >> i & 1:
                    s = add(s, p)
            heights.add(naive_height(A, B, s))
        if not heights <= allowed:
            return f"{label}: heights {sorted(heights)} not within {sorted(allowed)}"
    return None


def test_criterion_6_saturation_relations():
    bad = [msg for case in SATURATION if (msg := _check_case(*case))]
    n_rel = sum(len(c[2]) for c in SATURATION)
    _report(6, not bad, f"{n_rel} relations, {len(SATURATION)} cases, failures {bad}")


# --- 7 -------------------------------------------------------------------------

TEMPLATE_PAIRS = {"RpS": (1, 16), "RmS": (1, 16), "P2Ps": (-27, 1), "Q2Qs": (1, -27),
                  "RpS2": (-27, 16), "RmS2": (16, -27)}


def test_criterion_7_template_heights():
    got = {}
    for name, (A, B) in TEMPLATE_PAIRS.items():
        pt = instantiate_template(name, A, B)
        got[name] = naive_height(A, B, pt) if Curve.sextic(A, B).on_curve(pt) else None
    want = dict(zip(TEMPLATE_PAIRS, (4, 4, 6, 6, 12, 12)))
    _report(7, got == want, f"heights {list(got.values())}")


# --- 8 -------------------------------------------------------------------------

def _sigma(p, q):
    x = p * p * q ** 4
    return sum(1 for r, e in factorint(x).items() if e % 6 in (2, 4) and r % 3 == 2)


def _table2_rows(p, q):
    """(A, B, expected sign or None when the row's condition fails)."""
    s = _sigma(p, q)
    u = p * p * q ** 4 % 9
    v = p ** 4 * q * q % 9
    row1 = (-1) ** (s + 1) if u == 4 else (-1) ** s if v == 1 else None
    row3 = (-1) ** (s + 1) if u == 1 else (-1) ** s if v == 4 else None
    rows = [(27 * p * p * q ** 4, 16 * p ** 4 * q * q, row1),
            (-432 * p * p * q ** 4, -p ** 4 * q * q, row3)]
    if q == 1:
        rows.append((27, 144 * p * p, 1 if p * p % 9 == 7 else None))
        rows.append((-432 * p * p, -1, 1 if p * p % 9 == 1 else None))
        rows.append((-3888 * p * p, -1, 1))
    return rows


def _rank_two_family(A, B):
    a0, b0 = sixth_power_free(A)[0], sixth_power_free(B)[0]
    n = 3 * a0 * b0
    return n > 0 and isqrt(n) ** 2 == n


def test_criterion_8_root_numbers():
    bad = []
    v = constant_root_number(27, 16)
    if v.kind != PLUS:
        bad.append(("(27,16)", v.kind))
    checked = 0
    for p in (1, 5, 7, 11, 13):
        for q in (1, 5, 7, 11, 13):
            if gcd(p, q) != 1:
                continue
            for A, B, sign in _table2_rows(p, q):
                for X, Y in ((A, B), (B, A)):
                    rank = decide_rank(X, Y).rank
                    verdict = constant_root_number(X, Y)
                    checked += 1
                    if rank == 2:
                        # coincides with a generic-rank-2 family: always +1
                        if not _rank_two_family(X, Y) or verdict.kind != PLUS:
                            bad.append((X, Y, rank, verdict.kind))
                    elif rank != 1:
                        bad.append((X, Y, rank))
                    elif sign is None:
                        if verdict.kind != NOT_COVERED:
                            bad.append((X, Y, verdict.kind, "expected not covered"))
                    elif verdict.kind != (PLUS if sign == 1 else MINUS):
                        bad.append((X, Y, verdict.kind, sign))
    fam = TwistFamily(3, 4, 1)
    signs = {fibre_root_number_product(fam, m, n, 1, -1)
             for n in range(1, 21) for m in range(-20, 21) if gcd(m, n) == 1}
    if signs != {1}:
        bad.append(("fibres", signs))
    _report(8, not bad, f"{checked} table instantiations, fibre signs {signs}, failures {bad[:5]}")


# --- 9 -------------------------------------------------------------------------

def test_criterion_9_random_pairs():
    rng = random.Random(20261016)
    t0 = time.time()
    bad = []
    for _ in range(500):
        A = rng.choice((-1, 1)) * rng.randint(1, 10 ** 4)
        B = rng.choice((-1, 1)) * rng.randint(1, 10 ** 4)
        rep = rational_basis(A, B)
        if len(rep.basis) != decide_rank(A, B).rank or not verify_basis(rep):
            bad.append((A, B))
    dt = time.time() - t0
    _report(9, not bad and dt < 300, f"500 pairs, failures {bad[:5]}, {dt:.1f}s")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
