"""Hurwitz-order quaternions and the right-gcd route to four squares.

This is the classical non-commutative method; the package keeps it as an
independent cross-check for the continued-fraction route.
"""

from __future__ import annotations

from itertools import product

from .congruence import CongruenceWitness
from .hcf import check_witness


class HurwitzQuaternion:
    """``(h1 + h2 i + h3 j + h4 k) / 2`` with all ``h`` of equal parity.

    Coordinates are stored doubled so half-integer points stay exact.
    """

    __slots__ = ("h",)

    def __init__(self, h1: int, h2: int, h3: int, h4: int) -> None:
        if (h1 ^ h2) & 1 or (h1 ^ h3) & 1 or (h1 ^ h4) & 1:
            raise ValueError(f"doubled coordinates {(h1, h2, h3, h4)} have mixed parity")
        self.h = (h1, h2, h3, h4)

    @classmethod
    def from_ints(cls, a: int = 0, b: int = 0, c: int = 0, d: int = 0) -> HurwitzQuaternion:
        """The Lipschitz quaternion ``a + bi + cj + dk``."""
        return cls(2 * a, 2 * b, 2 * c, 2 * d)

    @property
    def parity(self) -> int:
        """0 for Lipschitz points, 1 for half-integer points."""
        return self.h[0] & 1

    @property
    def is_lipschitz(self) -> bool:
        return self.parity == 0

    def coords(self) -> tuple[int, int, int, int]:
        """Integer coordinates of a Lipschitz point."""
        if not self.is_lipschitz:
            raise ValueError(f"{self!r} has half-integer coordinates")
        return tuple(c // 2 for c in self.h)

    def norm(self) -> int:
        return sum(c * c for c in self.h) // 4

    def conj(self) -> HurwitzQuaternion:
        h1, h2, h3, h4 = self.h
        return HurwitzQuaternion(h1, -h2, -h3, -h4)

    def is_zero(self) -> bool:
        return not any(self.h)

    def __add__(self, other: HurwitzQuaternion) -> HurwitzQuaternion:
        return HurwitzQuaternion(*(a + b for a, b in zip(self.h, other.h)))

    def __sub__(self, other: HurwitzQuaternion) -> HurwitzQuaternion:
        return HurwitzQuaternion(*(a - b for a, b in zip(self.h, other.h)))

    def __neg__(self) -> HurwitzQuaternion:
        return HurwitzQuaternion(*(-a for a in self.h))

    def __mul__(self, other: HurwitzQuaternion) -> HurwitzQuaternion:
        return hq_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HurwitzQuaternion):
            return NotImplemented
        return self.h == other.h

    def __hash__(self) -> int:
        return hash(self.h)

    def __repr__(self) -> str:
        return f"HurwitzQuaternion{self.h}"


def _hamilton(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, int, int, int]:
    a1, b1, c1, d1 = a
    a2, b2, c2, d2 = b
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def hq_mul(a: HurwitzQuaternion, b: HurwitzQuaternion) -> HurwitzQuaternion:
    # (A/2)(B/2) = AB/4, stored doubled as AB/2; exact for Hurwitz elements
    return HurwitzQuaternion(*(c // 2 for c in _hamilton(a.h, b.h)))


ONE = HurwitzQuaternion.from_ints(1)
ZERO = HurwitzQuaternion.from_ints(0)

# the 24 units: +-1, +-i, +-j, +-k and (+-1 +-i +-j +-k)/2
UNITS: tuple[HurwitzQuaternion, ...] = tuple(
    [HurwitzQuaternion(*(2 * s if t == pos else 0 for t in range(4))) for pos in range(4) for s in (1, -1)]
    + [HurwitzQuaternion(*signs) for signs in product((1, -1), repeat=4)]
)


def _round_half_up(num: int, den: int) -> int:
    return (2 * num + den) // (2 * den)


def hq_right_divmod(a: HurwitzQuaternion, b: HurwitzQuaternion) -> tuple[HurwitzQuaternion, HurwitzQuaternion]:
    """``a = q*b + r`` with ``norm(r) < norm(b)``.

    ``q`` is the Hurwitz point nearest to ``a * b^-1`` among the rounded
    Lipschitz point and its 16 half-integer neighbours; ties go to the
    lexicographically smallest doubled coordinates.
    """
    if b.is_zero():
        raise ZeroDivisionError("right division by zero quaternion")
    # a * b^-1 = (A * conj(B)) / |B|^2 with A, B the doubled coordinates
    m = _hamilton(a.h, b.conj().h)
    den = sum(c * c for c in b.h)
    base = tuple(2 * _round_half_up(c, den) for c in m)
    candidates = [base] + [tuple(c + s for c, s in zip(base, signs)) for signs in product((1, -1), repeat=4)]

    def dist(cand):
        # squared distance to a*b^-1, scaled by den^2
        return sum((2 * mc - cc * den) ** 2 for mc, cc in zip(m, cand))

    best = min(candidates, key=lambda cand: (dist(cand), cand))
    q = HurwitzQuaternion(*best)
    r = a - q * b
    assert r.norm() < b.norm(), "Euclidean step failed to shrink the remainder"
    return q, r


def canonical_associate(g: HurwitzQuaternion) -> HurwitzQuaternion:
    """The left associate ``u*g`` with lexicographically largest doubled coordinates."""
    return max((u * g for u in UNITS), key=lambda q: q.h)


def right_gcd(a: HurwitzQuaternion, b: HurwitzQuaternion) -> HurwitzQuaternion:
    """Greatest common right divisor, canonicalized over left unit multiples."""
    if a.is_zero() and b.is_zero():
        raise ValueError("right_gcd(0, 0) is undefined")
    while not b.is_zero():
        _, r = hq_right_divmod(a, b)
        a, b = b, r
    return canonical_associate(a)


def right_divides(d: HurwitzQuaternion, a: HurwitzQuaternion) -> bool:
    """True iff ``a = q*d`` for some Hurwitz ``q``."""
    if d.is_zero():
        return a.is_zero()
    m = _hamilton(a.h, d.conj().h)
    den = sum(c * c for c in d.h)
    # q = m/den in true coordinates, so doubled q = 2m/den
    if any((2 * c) % den for c in m):
        return False
    doubled = [2 * c // den for c in m]
    return len({c & 1 for c in doubled}) == 1


def lipschitz_associate(g: HurwitzQuaternion) -> HurwitzQuaternion:
    """A left associate of ``g`` with integer coordinates (exists for odd norm)."""
    if g.is_lipschitz:
        return g
    for u in UNITS:
        cand = u * g
        if cand.is_lipschitz:
            return cand
    raise ValueError(f"{g!r} has no Lipschitz associate")


def lift_by_one_plus_i(e: int, coords: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Coordinates of ``(1+i)^e * (a + bi + cj + dk)``."""
    q = HurwitzQuaternion.from_ints(*coords)
    step = HurwitzQuaternion.from_ints(1, 1)
    for _ in range(e):
        q = step * q
    return q.coords()


def four_from_root_quaternion(witness: CongruenceWitness):
    """Four squares for ``w`` from ``right_gcd(w, x + yi + j)``."""
    from .squares import FourSquareRep, Method

    w, x, y = witness.w, witness.x, witness.y
    check_witness(w, x, y)
    if w < 3:
        raise ValueError("four_from_root_quaternion needs w >= 3")
    g = right_gcd(HurwitzQuaternion.from_ints(w), HurwitzQuaternion.from_ints(x, y, 1))
    g = lipschitz_associate(g)
    assert g.norm() == w, f"gcd norm {g.norm()} != {w}"
    return FourSquareRep.build(w, g.coords(), Method.QUATERNION, witness=witness)
