"""Sum-of-four-squares decompositions built on the Hurwitz expansion."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .congruence import CongruenceWitness, InvalidInput, is_prime, solve_root, sqrt_mod_prime
from .gaussian import isqrt_classify
from .hcf import Classification, check_witness, hcf_from_root, select_index, simple_cf_expand
from .quaternion import four_from_root_quaternion, lift_by_one_plus_i


class Method(str, Enum):
    HURWITZ_CF = "hurwitz-cf"
    HERMITE = "hermite"
    QUATERNION = "quaternion-oracle"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class FourSquareRep:
    """``n = a^2 + b^2 + c^2 + d^2`` with ``a >= b >= c >= d >= 0``."""

    n: int
    a: int
    b: int
    c: int
    d: int
    method: Method
    witness: CongruenceWitness | None = None
    steps: int = 0

    @classmethod
    def build(cls, n, coords, method, witness=None, steps=0) -> FourSquareRep:
        a, b, c, d = sorted((abs(t) for t in coords), reverse=True)
        return cls(n, a, b, c, d, Method(method), witness, steps)

    @property
    def squares(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d


def verify(rep: FourSquareRep) -> bool:
    a, b, c, d = rep.squares
    return a * a + b * b + c * c + d * d == rep.n and a >= b >= c >= d >= 0


def three_square_admissible(n: int) -> bool:
    """False iff ``n`` has the form ``4^k (8m + 7)``."""
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def four_from_root(witness: CongruenceWitness) -> FourSquareRep:
    """Read four squares off the Hurwitz expansion of ``(x + yi) / w``.

    For the selected index ``n``, ``w = |S_n|^2 + |Q_n|^2``. If some
    ``Q_k`` or ``S_k`` has norm exactly ``w`` it alone is returned.
    """
    w, x, y = witness.w, witness.x, witness.y
    check_witness(w, x, y)
    if w < 3:
        raise InvalidInput("four_from_root needs w >= 3")
    root, exact = isqrt_classify(w)
    if exact:
        return FourSquareRep.build(w, (root, 0, 0, 0), Method.TRIVIAL, witness=witness)

    e = hcf_from_root(w, x, y)
    sel = select_index(e)
    if sel.classification is Classification.EQUAL:
        kind, k = sel.hit
        g = e.Q(k) if kind == "Q" else e.S(k)
        return FourSquareRep.build(w, (g.re, g.im, 0, 0), Method.HURWITZ_CF, witness, e.depth)

    s, q = e.S(sel.n), e.Q(sel.n)
    total = s.norm_sq() + q.norm_sq()
    if total != w:
        raise AssertionError(f"|S_n|^2 + |Q_n|^2 = {total} != w = {w} (n={sel.n}, witness {witness})")
    return FourSquareRep.build(w, (s.re, s.im, q.re, q.im), Method.HURWITZ_CF, witness, e.depth)


def hermite_two_squares(p: int) -> FourSquareRep:
    """Two squares for a prime ``p = 1 (mod 4)`` from the convergents of ``x0 / p``."""
    if p % 4 != 1 or not is_prime(p):
        raise InvalidInput(f"{p} is not a prime congruent to 1 mod 4")
    x0 = sqrt_mod_prime(-1, p)
    cf = simple_cf_expand(x0, p)
    for k in range(cf.depth):
        q, q_next = cf.q_seq[k], cf.q_seq[k + 1]
        if q * q < p < q_next * q_next:
            rem = x0 * q - p * cf.p_seq[k]
            break
    else:
        raise AssertionError(f"no convergent straddles sqrt({p})")
    rep = FourSquareRep.build(p, (rem, q, 0, 0), Method.HERMITE, steps=cf.depth)
    assert verify(rep), f"Hermite step failed for {p}"
    return rep


def lift_power_of_two(e: int, rep: FourSquareRep) -> FourSquareRep:
    """Representation of ``2^e * rep.n`` via left multiplication by ``(1+i)^e``."""
    if e == 0:
        return rep
    coords = lift_by_one_plus_i(e, rep.squares)
    return FourSquareRep.build(rep.n << e, coords, rep.method, rep.witness, rep.steps)


def decompose(n: int, seed: int | None = 0, method: str | Method = Method.HURWITZ_CF) -> FourSquareRep:
    """Any positive integer as a sum of four squares.

    ``method`` picks the extraction used once a witness is needed: the
    Hurwitz expansion (default) or the quaternion right gcd.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"n must be a positive integer, got {n!r}")
    method = Method(method)
    if method not in (Method.HURWITZ_CF, Method.QUATERNION):
        raise InvalidInput(f"unsupported method {method.value}")
    e = (n & -n).bit_length() - 1
    w = n >> e

    root, exact = isqrt_classify(w)
    if exact:
        base = FourSquareRep.build(w, (root, 0, 0, 0), Method.TRIVIAL)
    elif w % 4 == 1 and is_prime(w, seed):
        base = hermite_two_squares(w)
    else:
        witness = solve_root(w, seed)
        if method is Method.QUATERNION:
            base = four_from_root_quaternion(witness)
        else:
            base = four_from_root(witness)
    rep = lift_power_of_two(e, base)
    assert verify(rep), f"decompose produced an invalid representation for {n}"
    return rep

