"""Integer predicates and factorization used by the rank decision and root numbers.

Python ints are already arbitrary precision, so there is no separate integer type.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field


class ZeroInput(ValueError):
    pass


class FactorLimitExceeded(RuntimeError):
    pass


class EvenModulus(ValueError):
    pass


@dataclass(frozen=True)
class FactorLimit:
    """Effort cap for factor(): trial division bound, rho budget, digit cap."""
    trial_bound: int = 10**6
    rho_iterations: int = 200_000
    rho_attempts: int = 8
    max_digits: int = 1000


DEFAULT_LIMIT = FactorLimit()
_active = [DEFAULT_LIMIT]


def set_default_limit(limit: FactorLimit) -> FactorLimit:
    """Replace the limit used when none is passed; returns the previous one."""
    old, _active[0] = _active[0], limit
    return old


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


def int_nth_root(n: int, x: int) -> int | None:
    """Exact n-th root of x if it is an integer, else None."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return x
    if x < 0:
        if n % 2 == 0:
            return None
        r = int_nth_root(n, -x)
        return None if r is None else -r
    if x < 2:
        return x
    if n == 2:
        r = math.isqrt(x)
        return r if r * r == x else None
    # integer Newton iteration from an overestimate
    r = 1 << (-(-x.bit_length() // n))
    while True:
        nxt = ((n - 1) * r + x // r ** (n - 1)) // n
        if nxt >= r:
            break
        r = nxt
    return r if r**n == x else None


def is_square(x: int) -> bool:
    return x >= 0 and int_nth_root(2, x) is not None


def is_cube(x: int) -> bool:
    return int_nth_root(3, x) is not None


def is_minus3_square(x: int) -> bool:
    # three explicit checks: sign, divisibility, square cofactor
    return x < 0 and x % 3 == 0 and is_square(-x // 3)


def arith_class(x: int, kind: str) -> bool:
    if x == 0:
        raise ZeroInput("input must be non-zero")
    if kind == "square":
        return is_square(x)
    if kind == "minus3_square":
        return is_minus3_square(x)
    if kind == "cube":
        return is_cube(x)
    raise ValueError(f"unknown class {kind!r}")


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int, rng: random.Random, iterations: int) -> int | None:
    """Brent's variant of Pollard rho; returns a proper factor or None."""
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    done = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        done += r
        if done > iterations:
            return None
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


def _split(n: int, limit: FactorLimit, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = int_nth_root(2, n)
    if r is not None:
        sub: dict[int, int] = {}
        _split(r, limit, sub)
        for p, e in sub.items():
            out[p] = out.get(p, 0) + 2 * e
        return
    rng = random.Random(n)
    for _ in range(limit.rho_attempts):
        d = _rho(n, rng, limit.rho_iterations)
        if d:
            _split(d, limit, out)
            _split(n // d, limit, out)
            return
    raise FactorLimitExceeded(f"could not split cofactor {n}")


def factor(x: int, limit: FactorLimit | None = None) -> Factorization:
    limit = limit or _active[0]
    if x == 0:
        raise ZeroInput("cannot factor zero")
    n = abs(x)
    if len(str(n)) > limit.max_digits:
        raise FactorLimitExceeded(f"{len(str(n))} digits exceeds the configured cap")
    found: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            n //= p
            found[p] = found.get(p, 0) + 1
    p = 5
    step = 2
    while p <= limit.trial_bound and p * p <= n:
        while n % p == 0:
            n //= p
            found[p] = found.get(p, 0) + 1
        p += step
        step = 6 - step
    if n > 1:
        if p * p > n:
            found[n] = found.get(n, 0) + 1
        else:
            _split(n, limit, found)
    return Factorization(1 if x > 0 else -1, tuple(sorted(found.items())))


def valuation(p: int, x: int) -> int:
    if x == 0:
        raise ZeroInput("valuation of zero")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def sixth_power_free(x: int, limit: FactorLimit | None = None) -> tuple[int, int]:
    """Split x = root**6 * core with core sixth-power-free and carrying the sign."""
    f = factor(x, limit)
    core, root = f.sign, 1
    for p, e in f.factors:
        root *= p ** (e // 6)
        core *= p ** (e % 6)
    return core, root


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise EvenModulus("modulus must be odd and positive")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
