"""Hurwitz complex continued fractions and classical simple continued fractions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .gaussian import GaussianInt, GaussianRational, div_round, round_nearest


class InvalidWitness(ValueError):
    """(w, x, y) does not satisfy w odd, 0 <= x, y < w/2 and w | x^2 + y^2 + 1."""


def check_witness(w: int, x: int, y: int) -> None:
    if w < 1 or w % 2 == 0:
        raise InvalidWitness(f"w must be an odd positive integer, got {w}")
    if not (0 <= 2 * x < w and 0 <= 2 * y < w):
        raise InvalidWitness(f"witness ({x}, {y}) is outside [0, w/2) for w={w}")
    if (x * x + y * y + 1) % w:
        raise InvalidWitness(f"{w} does not divide {x}^2 + {y}^2 + 1")


@dataclass(frozen=True)
class HcfExpansion:
    """A finite Hurwitz expansion ``[a_0; a_1, ..., a_m]``.

    ``p_seq``, ``q_seq`` and ``s_seq`` start at index -1, so the value for
    index ``k`` lives at position ``k + 1``; use :meth:`P`, :meth:`Q`, :meth:`S`.
    ``s_seq`` is empty unless the expansion was built from a root witness.
    """

    partial_quotients: tuple[GaussianInt, ...]
    p_seq: tuple[GaussianInt, ...]
    q_seq: tuple[GaussianInt, ...]
    s_seq: tuple[GaussianInt, ...] = ()
    w: int | None = None
    x: int | None = None
    y: int | None = None

    @property
    def depth(self) -> int:
        return len(self.partial_quotients) - 1

    def a(self, k: int) -> GaussianInt:
        return self.partial_quotients[k]

    def P(self, k: int) -> GaussianInt:
        return self.p_seq[k + 1]

    def Q(self, k: int) -> GaussianInt:
        return self.q_seq[k + 1]

    def S(self, k: int) -> GaussianInt:
        if not self.s_seq:
            raise ValueError("expansion carries no remainder sequence")
        return self.s_seq[k + 1]

    @property
    def has_witness(self) -> bool:
        return self.w is not None


def _convergents(quotients: list[GaussianInt]) -> tuple[list[GaussianInt], list[GaussianInt]]:
    p = [GaussianInt(1, 0), quotients[0]]
    q = [GaussianInt(0, 0), GaussianInt(1, 0)]
    for a in quotients[1:]:
        p.append(a * p[-1] + p[-2])
        q.append(a * q[-1] + q[-2])
    return p, q


def hcf_expand(z: GaussianRational) -> HcfExpansion:
    """Expand a rational complex number by repeated nearest-integer rounding."""
    quotients = []
    while True:
        a = round_nearest(z)
        quotients.append(a)
        frac = z - a
        if frac.is_zero():
            break
        z = frac.inverse()
    p, q = _convergents(quotients)
    return HcfExpansion(tuple(quotients), tuple(p), tuple(q))


def hcf_from_root(w: int, x: int, y: int) -> HcfExpansion:
    """Expand ``(x + yi) / w`` using only Gaussian-integer remainders.

    With ``S_k = (x+yi) Q_k - w P_k`` the next iterate is ``-S_{k-1}/S_k``, so
    each partial quotient is a rounded division of consecutive remainders and
    ``S_{k+1} = a_{k+1} S_k + S_{k-1}``.
    """
    check_witness(w, x, y)
    g = GaussianInt(x, y)
    a0 = div_round(g, GaussianInt(w, 0))
    # forced by 0 <= x, y < w/2
    assert a0.is_zero(), f"witness yields a_0 = {a0}, expected 0"

    quotients = [a0]
    s_prev, s_cur = GaussianInt(-w, 0), g - a0 * w
    p_prev, p_cur = GaussianInt(1, 0), a0
    q_prev, q_cur = GaussianInt(0, 0), GaussianInt(1, 0)
    s_seq, p_seq, q_seq = [s_prev, s_cur], [p_prev, p_cur], [q_prev, q_cur]
    while not s_cur.is_zero():
        a = div_round(-s_prev, s_cur)
        quotients.append(a)
        s_prev, s_cur = s_cur, a * s_cur + s_prev
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        s_seq.append(s_cur)
        p_seq.append(p_cur)
        q_seq.append(q_cur)
    return HcfExpansion(
        tuple(quotients), tuple(p_seq), tuple(q_seq), tuple(s_seq), w=w, x=x, y=y
    )


class Classification(str, Enum):
    STRICT = "strict"
    EQUAL = "equal"


@dataclass(frozen=True)
class Selection:
    """Index ``n`` with ``|Q_n|^2 <= w < |Q_{n+1}|^2``.

    ``hit`` names the earliest element of norm exactly ``w`` as ``("Q", k)``
    or ``("S", k)``; it is set iff ``classification`` is ``EQUAL``.
    """

    n: int
    classification: Classification
    hit: tuple[str, int] | None = None


def select_index(e: HcfExpansion) -> Selection:
    if not e.has_witness:
        raise ValueError("select_index needs an expansion built from a witness")
    w = e.w
    n = None
    for k in range(e.depth):
        if e.Q(k).norm_sq() <= w < e.Q(k + 1).norm_sq():
            n = k
            break
    if n is None:
        raise AssertionError(f"no selection index in expansion of depth {e.depth} for w={w}")

    hit = None
    for k in range(e.depth + 1):
        if e.Q(k).norm_sq() == w:
            hit = ("Q", k)
            break
        if e.S(k).norm_sq() == w:
            hit = ("S", k)
            break
    if hit is None:
        return Selection(n, Classification.STRICT)
    return Selection(n, Classification.EQUAL, hit)


@dataclass(frozen=True)
class SimpleCfExpansion:
    """Classical expansion ``[c_0; c_1, ..., c_m]``; ``p_seq``/``q_seq`` start at index 0."""

    quotients: tuple[int, ...]
    p_seq: tuple[int, ...]
    q_seq: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.quotients) - 1


def simple_cf_expand(numerator: int, denominator: int) -> SimpleCfExpansion:
    if denominator <= 0 or not 0 <= numerator < denominator:
        raise ValueError("simple_cf_expand needs 0 <= numerator < denominator")
    quotients = []
    a, b = numerator, denominator
    while True:
        c, r = divmod(a, b)
        quotients.append(c)
        if r == 0:
            break
        a, b = b, r
    p_prev, p_cur = 1, quotients[0]
    q_prev, q_cur = 0, 1
    p_seq, q_seq = [p_cur], [q_cur]
    for c in quotients[1:]:
        p_prev, p_cur = p_cur, c * p_cur + p_prev
        q_prev, q_cur = q_cur, c * q_cur + q_prev
        p_seq.append(p_cur)
        q_seq.append(q_cur)
    return SimpleCfExpansion(tuple(quotients), tuple(p_seq), tuple(q_seq))
