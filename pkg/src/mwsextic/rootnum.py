"""Constant root numbers for sextic twist families.

Rank-1 families with constant fibre root number come from a short list of
(A, B) shapes up to sixth powers; generic-rank-2 families y^2 = x^3 + c(3a^2 t^6 + b^2)
always have root number +1. The per-fibre formula needs the local factors at
2 and 3 from outside tables, so those come in as arguments.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactnum import FactorLimit, ZeroInput, factor, is_square, jacobi, sixth_power_free
from .ranker import NotCoprime, decide_rank


class DivisibleBySix(ValueError):
    """An argument shares a factor with 6."""


class ZeroFibre(ValueError):
    pass


@dataclass(frozen=True)
class TwistFamily:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if 0 in (self.a, self.b, self.c):
            raise ZeroInput("a, b, c must be non-zero")
        if gcd(self.a, self.b) != 1:
            raise NotCoprime(f"gcd({self.a}, {self.b}) != 1")

    @property
    def A(self) -> int:
        return 3 * self.c * self.a ** 2

    @property
    def B(self) -> int:
        return self.c * self.b ** 2

    def F(self, m: int, n: int) -> int:
        return self.c * (3 * self.a ** 2 * m ** 6 + self.b ** 2 * n ** 6)


PLUS, MINUS, NOT_COVERED = "ConstantPlus", "ConstantMinus", "NotCovered"


@dataclass(frozen=True)
class RootNumberVerdict:
    """kind is ConstantPlus/ConstantMinus once the sign is known, NotCovered otherwise.

    For table rows whose sign is a power of -1 in sigma, sign_rule records the
    exponent and sigma its value; kind already holds the evaluated sign.
    """
    kind: str
    matched_row: str | None = None
    sigma: int | None = None
    sign_rule: str | None = None

    @property
    def sign(self) -> int | None:
        return {PLUS: 1, MINUS: -1}.get(self.kind)

    def to_json(self) -> dict:
        return {"verdict": self.kind, "matched_row": self.matched_row,
                "sigma": self.sigma, "sign": self.sign}


def _prime_to_six(x: int) -> bool:
    return x % 2 != 0 and x % 3 != 0


def sigma_invariant(p: int, q: int, limit: FactorLimit | None = None) -> int:
    """#{primes r | pq : v_r(p^2 q^4) = 2, 4 mod 6 and r = 2 mod 3}."""
    if p == 0 or q == 0:
        raise ZeroInput("p and q must be non-zero")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    if not _prime_to_six(p * q):
        raise DivisibleBySix(f"{p} * {q} shares a factor with 6")
    return _sigma_of(p * p * q ** 4, limit)


def _sigma_of(x: int, limit: FactorLimit | None = None) -> int:
    return sum(1 for r, e in factor(abs(x), limit).factors if e % 6 in (2, 4) and r % 3 == 2)


def _square_part(x: int) -> bool:
    """x > 0, prime to 6 and a perfect square (the p^2 or p^2 q^4 slot of a row)."""
    return x > 0 and _prime_to_six(x) and is_square(x)


def _match_rows(A0: int, B0: int, limit: FactorLimit) -> RootNumberVerdict | None:
    # rows with p^2 q^4 in A and p^4 q^2 in B: B's slot is the square of A's up to sixth powers
    for lead_a, lead_b, row, flip in ((27, 16, "A=3^3 p^2 q^4, B=2^4 p^4 q^2", False),
                                      (-432, -1, "A=-2^4 3^3 p^2 q^4, B=-p^4 q^2", True)):
        if A0 % lead_a or B0 % lead_b:
            continue
        X, Y = A0 // lead_a, B0 // lead_b
        if not _square_part(X) or sixth_power_free(X * X, limit)[0] != Y:
            continue
        sigma = _sigma_of(X, limit)
        u = X % 9          # p^2 q^4 mod 9; p^4 q^2 is its inverse
        if (u == 4 and not flip) or (u == 1 and flip):
            rule, e = "(-1)^(sigma+1)", sigma + 1
        elif (u == 1 and not flip) or (u == 7 and flip):
            rule, e = "(-1)^sigma", sigma
        else:
            return None
        return RootNumberVerdict(PLUS if e % 2 == 0 else MINUS, row, sigma, rule)
    # single-parameter rows, sign +1
    if A0 == 27 and B0 % 144 == 0 and _square_part(B0 // 144) and B0 // 144 % 9 == 7:
        return RootNumberVerdict(PLUS, "A=3^3, B=2^4 3^2 p^2", None, "+1")
    if B0 == -1 and A0 % 432 == 0 and _square_part(-A0 // 432) and -A0 // 432 % 9 == 1:
        return RootNumberVerdict(PLUS, "A=-2^4 3^3 p^2, B=-1", None, "+1")
    if B0 == -1 and A0 % 3888 == 0 and _square_part(-A0 // 3888):
        return RootNumberVerdict(PLUS, "A=-2^4 3^5 p^2, B=-1", None, "+1")
    return None


def constant_root_number(A: int, B: int, limit: FactorLimit | None = None) -> RootNumberVerdict:
    if A == 0:
        raise ZeroInput("A must be non-zero")
    if B == 0:
        raise ZeroInput("B must be non-zero")
    A0, _ = sixth_power_free(A, limit)
    B0, _ = sixth_power_free(B, limit)
    rank = decide_rank(A, B).rank
    # A = 3ca^2, B = cb^2 up to sixth powers exactly when 3AB is a square
    if rank == 2 and is_square(3 * A0 * B0):
        return RootNumberVerdict(PLUS, "generic rank 2, y^2 = x^3 + c(3a^2 t^6 + b^2)", None, "+1")
    if rank != 1:
        return RootNumberVerdict(NOT_COVERED)
    for X, Y, tag in ((A0, B0, ""), (B0, A0, " (swapped)")):
        v = _match_rows(X, Y, limit)
        if v is not None:
            return RootNumberVerdict(v.kind, v.matched_row + tag, v.sigma, v.sign_rule)
    return RootNumberVerdict(NOT_COVERED)


def fibre_root_number_product(fam: TwistFamily, m: int, n: int, omega2: int, omega3: int,
                              limit: FactorLimit | None = None) -> int:
    """Root number of the fibre at t = m/n given the local factors omega2, omega3 at 2 and 3."""
    if n <= 0:
        raise ValueError("n must be positive")
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    if omega2 not in (1, -1) or omega3 not in (1, -1):
        raise ValueError("omega2 and omega3 must be +1 or -1")
    F = fam.F(m, n)
    if F == 0:
        raise ZeroFibre(f"F({m}, {n}) = 0")
    prod = 1
    for p, e in factor(abs(F), limit).factors:
        if p >= 5 and e % 6 in (2, 4):
            prod *= jacobi(-3, p)
    return -prod * omega2 * omega3
