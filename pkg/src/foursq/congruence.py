"""Witnesses ``x^2 + y^2 = -1 (mod w)`` and the number theory behind them.

Primes congruent to 3 mod 4 get a deterministic residue search; everything
else goes through factorization, Hensel lifting and CRT.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt, prod

# Trial division bound before switching to Pollard rho.
TRIAL_BOUND = 10_000
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_RANDOM_ROUNDS = 64
BRUTE_FORCE_LIMIT = 10**6


class InvalidInput(ValueError):
    pass


class NoSquareRoot(ValueError):
    pass


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [p for p in range(limit + 1) if flags[p]]


SMALL_PRIMES = _sieve(TRIAL_BOUND)
_SMALL_PRIME_SET = frozenset(SMALL_PRIMES)


@dataclass(frozen=True)
class CongruenceWitness:
    """``(x, y)`` with ``w | x^2 + y^2 + 1``; normalized witnesses also have ``0 <= x, y < w/2``."""

    w: int
    x: int
    y: int

    def is_valid(self) -> bool:
        return self.w >= 1 and (self.x * self.x + self.y * self.y + 1) % self.w == 0

    def is_normalized(self) -> bool:
        return 0 <= 2 * self.x < self.w and 0 <= 2 * self.y < self.w

    def normalized(self) -> CongruenceWitness:
        return CongruenceWitness(self.w, _fold(self.x, self.w), _fold(self.y, self.w))


def _fold(t: int, w: int) -> int:
    t %= w
    return min(t, w - t)


def _verified(wit: CongruenceWitness) -> CongruenceWitness:
    if not (wit.is_valid() and wit.is_normalized()):
        raise AssertionError(f"solver produced an invalid witness {wit}")
    return wit


# -- primality and factorization ------------------------------------------------


def _miller_rabin(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, seed: int | None = 0) -> bool:
    """Miller-Rabin; deterministic below 2^64, 64 seeded random rounds above."""
    if n < 2:
        return False
    if n <= TRIAL_BOUND:
        return n in _SMALL_PRIME_SET
    for p in SMALL_PRIMES[:50]:
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return all(_miller_rabin(n, a, d, s) for a in _MR_BASES_64)
    if not all(_miller_rabin(n, a, d, s) for a in _MR_BASES_64):
        return False
    rng = random.Random(seed)
    return all(_miller_rabin(n, rng.randrange(2, n - 1), d, s) for _ in range(_MR_RANDOM_ROUNDS))


def _brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of the odd composite ``n`` (Pollard rho, Brent's cycle search)."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
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
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors)

    def __iter__(self):
        return iter(self.factors)


def factorize(n: int, seed: int | None = 0) -> Factorization:
    """Complete factorization into verified primes, sorted ascending."""
    if n < 2:
        raise InvalidInput(f"factorize needs n >= 2, got {n}")
    counts: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    rng = random.Random(seed)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m, seed):
            counts[m] = counts.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _brent(m, rng)
        stack += [d, m // d]
    return Factorization(tuple(sorted(counts.items())))


# -- modular square roots --------------------------------------------------------


def sqrt_mod_prime(a: int, p: int) -> int:
    """Smaller square root of ``a`` modulo the odd prime ``p``."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise NoSquareRoot(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        # Tonelli-Shanks
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 1, t * t % p
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


# -- witnesses -------------------------------------------------------------------


def prime_3mod4_root(p: int) -> CongruenceWitness:
    """Least ``y >= 1`` making ``-(1 + y^2)`` a residue, then ``x`` its square root."""
    if p % 4 != 3 or not is_prime(p):
        raise InvalidInput(f"{p} is not a prime congruent to 3 mod 4")
    y = 1
    while True:
        target = -(1 + y * y) % p
        if pow(target, (p - 1) // 2, p) == 1:
            return _verified(CongruenceWitness(p, sqrt_mod_prime(target, p), y).normalized())
        y += 1


def _prime_root(p: int) -> CongruenceWitness:
    if p % 4 == 3:
        return prime_3mod4_root(p)
    return CongruenceWitness(p, sqrt_mod_prime(-1, p), 0).normalized()


def hensel_lift_root(p: int, e: int, base: CongruenceWitness) -> CongruenceWitness:
    """Lift a witness mod ``p`` to one mod ``p^e`` by Newton steps on a unit coordinate."""
    if base.w != p or not base.is_valid():
        raise InvalidInput(f"base {base} is not a witness mod {p}")
    target = p**e
    x, y = base.x, base.y
    swap = x % p == 0
    if swap:
        x, y = y, x
    # -1 is nonzero mod p, so x and y cannot both vanish
    assert x % p, "neither coordinate is a unit mod p"
    c = y * y + 1
    mod = p
    while mod < target:
        mod = min(mod * mod, target)
        x = (x - (x * x + c) * pow(2 * x, -1, mod)) % mod
    if swap:
        x, y = y, x
    return _verified(CongruenceWitness(target, x, y).normalized())


def crt_combine(witnesses: list[CongruenceWitness]) -> CongruenceWitness:
    if not witnesses:
        raise InvalidInput("crt_combine needs at least one witness")
    w, x, y = witnesses[0].w, witnesses[0].x, witnesses[0].y
    for wit in witnesses[1:]:
        if gcd(w, wit.w) != 1:
            raise InvalidInput(f"moduli {w} and {wit.w} are not coprime")
        inv = pow(w, -1, wit.w)
        x += w * ((wit.x - x) * inv % wit.w)
        y += w * ((wit.y - y) * inv % wit.w)
        w *= wit.w
    return _verified(CongruenceWitness(w, x, y).normalized())


def solve_root(w: int, seed: int | None = 0) -> CongruenceWitness:
    """A normalized witness for any odd ``w >= 1``."""
    if w < 1 or w % 2 == 0:
        raise InvalidInput(f"w must be an odd positive integer, got {w}")
    if w == 1:
        return CongruenceWitness(1, 0, 0)
    if is_prime(w, seed):
        return _verified(_prime_root(w))
    parts = []
    for p, e in factorize(w, seed):
        base = _prime_root(p)
        parts.append(base if e == 1 else hensel_lift_root(p, e, base))
    return crt_combine(parts)


def brute_force_root(w: int) -> CongruenceWitness:
    """Lexicographically least normalized witness, by exhaustive scan."""
    if w < 1 or w % 2 == 0:
        raise InvalidInput(f"w must be an odd positive integer, got {w}")
    if w > BRUTE_FORCE_LIMIT:
        raise InvalidInput(f"brute force refuses w > {BRUTE_FORCE_LIMIT}")
    half = (w + 1) // 2
    least_root: dict[int, int] = {}
    for t in range(half):
        least_root.setdefault(t * t % w, t)
    for x in range(half):
        y = least_root.get((-1 - x * x) % w)
        if y is not None:
            return CongruenceWitness(w, x, y)
    raise AssertionError(f"no witness exists for w={w}")
