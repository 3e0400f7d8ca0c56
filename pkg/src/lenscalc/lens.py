"""Oriented lens spaces and their homeomorphism classification.

``L(p, q)`` is the result of ``-p/q`` surgery on the unknot; equivalently,
of surgery on a chain of unknots whose framings are the negated terms of the
standard continued-fraction expansion of ``p/q``.  Special cases:
``L(0, 1)`` is S¹×S² and ``L(1, 0)`` is S³.

Canonical form used throughout: ``p >= 0``; for ``p >= 2`` the residue ``q``
is reduced to ``1 <= q < p`` with ``gcd(p, q) = 1`` (using
``L(-p, q) = L(p, -q)`` to make ``p`` non-negative); ``L(0, ±1)`` is stored
as ``(0, 1)`` and ``L(1, q)`` as ``(1, 0)``.

Two lens spaces of the same order are orientation-preservingly homeomorphic
iff their residues agree up to inversion mod p, and homeomorphic at all iff
they agree up to inversion and negation.  The four residue transforms are
named consistently everywhere in this package:

    oriented          q' =  q
    inverse           q' =  q^{-1}  (mod p)
    reversed          q' = -q      = p - q
    reversed-inverse  q' = -q^{-1}

("reversed" transforms are the orientation-reversing ones.)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

from .cfrac import ExtendedRational, expand_cf

#: The four residue transforms, in canonical order.  The first two preserve
#: orientation, the last two reverse it.
MODES: tuple[str, ...] = ("oriented", "inverse", "reversed", "reversed-inverse")
ORIENTED_MODES: tuple[str, ...] = ("oriented", "inverse")


@dataclass(frozen=True)
class OrientedLensSpace:
    """A lens space in canonical form (see module docstring)."""

    p: int
    q: int

    def __init__(self, p: int, q: int):
        p, q = int(p), int(q)
        if p < 0:
            p, q = -p, -q
        if math.gcd(p, q) != 1:
            raise ValueError(f"parameters ({p}, {q}) are not coprime")
        if p == 0:
            q = 1  # gcd(0, q) = |q| = 1 here
        elif p == 1:
            q = 0
        else:
            q %= p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> "OrientedLensSpace":
        """Parse ``"L(p,q)"`` or ``"p/q"``."""
        m = re.fullmatch(r"\s*[Ll]\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*", text)
        if not m:
            m = re.fullmatch(r"\s*(-?\d+)\s*/\s*(-?\d+)\s*", text)
        if not m:
            raise ValueError(f"invalid lens space {text!r}; expected 'L(p,q)' or 'p/q'")
        return cls(int(m.group(1)), int(m.group(2)))

    @property
    def is_s3(self) -> bool:
        return self.p == 1

    @property
    def is_s1s2(self) -> bool:
        return self.p == 0

    def fraction(self) -> ExtendedRational:
        """``p/q`` as an extended rational (``1/0`` for S³)."""
        return ExtendedRational(self.p, self.q)

    def q_inverse(self) -> int:
        """The multiplicative inverse of q mod p (canonical residue)."""
        if self.p == 0:
            return 1
        if self.p == 1:
            return 0
        return pow(self.q, -1, self.p)

    def transformed_residue(self, mode: str) -> int:
        """Apply one of the four residue transforms (see module docstring)."""
        if mode not in MODES:
            raise ValueError(f"unknown transform mode {mode!r}")
        if self.p <= 1:
            return self.q
        q = self.q if mode in ("oriented", "reversed") else self.q_inverse()
        if mode in ("reversed", "reversed-inverse"):
            q = self.p - q
        return q

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


def normalize_lens(p: int, q: int) -> OrientedLensSpace:
    """Canonical form of L(p, q); accepts any coprime pair, p of any sign."""
    return OrientedLensSpace(p, q)


def mirror(space: OrientedLensSpace) -> OrientedLensSpace:
    """The same manifold with reversed orientation, L(p, -q)."""
    return OrientedLensSpace(space.p, -space.q if space.p > 1 else space.q)


@dataclass(frozen=True)
class HomeoDecision:
    """Outcome of a homeomorphism test, with the residue transform used."""

    homeomorphic: bool
    mode: Optional[str] = None

    def __bool__(self) -> bool:
        return self.homeomorphic

    def __str__(self) -> str:
        if not self.homeomorphic:
            return "not homeomorphic"
        return f"homeomorphic via {self.mode}"


def is_homeomorphic(
    first: OrientedLensSpace, second: OrientedLensSpace, oriented: bool = False
) -> HomeoDecision:
    """Decide (un)oriented homeomorphism of two lens spaces.

    With ``oriented=True`` only orientation-preserving homeomorphisms count
    (residues equal or inverse mod p); otherwise the orientation-reversing
    transforms are allowed as well.
    """
    if first.p != second.p:
        return HomeoDecision(False)
    if first.p <= 1:
        return HomeoDecision(True, "oriented")
    modes = ORIENTED_MODES if oriented else MODES
    for mode in modes:
        if first.transformed_residue(mode) == second.q:
            return HomeoDecision(True, mode)
    return HomeoDecision(False)


def standard_chain_string(space: OrientedLensSpace) -> tuple[int, ...]:
    """Surgery coefficients of the canonical chain presentation of L(p, q).

    These are the negated terms of the standard expansion of ``p/q``; they
    are defined only for ``p >= 2`` (S³ and S¹×S² have no such chain).
    """
    if space.p <= 1:
        raise ValueError(f"{space} has no standard chain presentation")
    return tuple(-t for t in expand_cf(ExtendedRational(space.p, space.q)))
