"""Square-order lens-space families and the seven coefficient-string types.

Two intertwined classifications live here.

**Families F1-F4.**  The lens spaces of square order ``p = m^2`` that arise
from longitudinal surgery on a knot in S¹×S² fall into four congruence
families, parametrized by ``m`` (either square root of ``p``, sign included)
and an auxiliary integer ``d``:

    F1:  q ≡ m·d + 1 (mod p),  gcd(m, d) = 1
    F2:  q ≡ m·d + 1 (mod p),  gcd(m, d) = 2
    F3:  q ≡ d·(m - 1) (mod p),  d odd,  d | m - 1
    F4:  q ≡ d·(m - 1) (mod p),  d | 2m + 1

A membership *witness* records the family, the pair ``(m, d)`` and which of
the four residue transforms of ``q`` (see :mod:`.lens`) satisfies the
congruence; unoriented membership allows all four transforms.

**String types T1-T7.**  The same lens spaces are exactly the ones whose
chain presentations are described by seven families of coefficient strings
(all entries <= -2), classically arising in the classification of lens
spaces bounding rational homology balls::

    T1: (-b_k, ..., -b_1, -2, -c_1, ..., -c_l)            k, l >= 1
    T2: (-2^[t], -3, -2-s, -2-t, -3, -2^[s])              s, t >= 0
    T3: (-2^[t], -3-s, -2, -2-t, -3, -2^[s])              s, t >= 0
    T4: (-b_k, ..., -b_1-1, -2, -2, -1-c_1, ..., -c_l)    k, l >= 1
    T5: (-t-2, -s-2, -3, -2^[t], -4, -2^[s])              s, t >= 0
    T6: (-t-2, -2, -3-s, -2^[t], -4, -2^[s])              s, t >= 0
    T7: (-t-3, -2, -3-s, -3, -2^[t], -3, -2^[s])          s, t >= 0

(``-2^[t]`` means ``t`` consecutive entries ``-2``.)  In T1 and T4 the
tuples ``b`` and ``c`` are standard-expansion complements of one another
(``q/p + s/r = 1`` for their values ``p/q`` and ``r/s``); equivalently, and
the form used here, T1 strings are exactly the strings generated from the
seed ``(-2, -2, -2)`` — and T4 strings from ``(-3, -2, -2, -3)`` — by the
two moves

    (a)  (x_1, ..., x_n)  ->  (-2, x_1, ..., x_n - 1)
    (b)  (x_1, ..., x_n)  ->  (x_1 - 1, ..., x_n, -2)

Recognition of T1/T4 therefore inverts these moves (each is invertible and
strictly length-increasing, so the memoized peeling is sound and complete);
T2/T3/T5/T6/T7 are matched directly against the patterns.  A string may be
read in either direction; matches against the reversed string carry a flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .lens import MODES, OrientedLensSpace

# ---------------------------------------------------------------------------
# Families F1-F4
# ---------------------------------------------------------------------------

FAMILY_TAGS: tuple[str, ...] = ("F1", "F2", "F3", "F4")


@dataclass(frozen=True, order=True)
class FamilyWitness:
    """A verified congruence certificate for membership in F1-F4."""

    family: str
    m: int
    d: int
    mode: str

    def to_json(self) -> dict:
        return {"family": self.family, "m": self.m, "d": self.d, "mode": self.mode}

    def __str__(self) -> str:
        return f"{self.family}(m={self.m},d={self.d},{self.mode})"


def _signed_divisors(n: int) -> list[int]:
    """All divisors of n != 0, both signs, by increasing absolute value."""
    n = abs(n)
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out.extend((d, -d))
    return out


def _degenerate_witnesses(space: OrientedLensSpace) -> list[FamilyWitness]:
    # S¹×S² (p = 0, m = 0): the congruences are equalities over Z and
    # gcd(0, d) = |d| caps d.  S³ (p = 1): everything is ≡ 0 (mod 1); d is
    # reported over one period (F1) or over the signed divisors, with d | 0
    # canonicalized to d = 1.
    out = []
    if space.p == 0:
        out += [FamilyWitness("F1", 0, d, "oriented") for d in (1, -1)]
        out += [FamilyWitness("F2", 0, d, "oriented") for d in (2, -2)]
        out += [FamilyWitness("F3", 0, -1, "oriented")]
        out += [FamilyWitness("F4", 0, -1, "oriented")]
    else:
        out += [FamilyWitness("F1", m, 0, "oriented") for m in (1, -1)]
        out += [FamilyWitness("F3", 1, 1, "oriented")]
        out += [FamilyWitness("F3", -1, d, "oriented") for d in (1, -1)]
        out += [FamilyWitness("F4", 1, d, "oriented") for d in _signed_divisors(3)]
        out += [FamilyWitness("F4", -1, d, "oriented") for d in (1, -1)]
    return out


def classify_family(
    space: OrientedLensSpace, modes: Sequence[str] = MODES
) -> tuple[FamilyWitness, ...]:
    """All family witnesses for ``space``, over the given residue transforms.

    Returns the empty tuple when the order is not a perfect square.  ``d``
    ranges over one full period ``0 <= d < |m|`` for F1/F2 (the congruence
    and the gcd condition only depend on ``d`` mod ``|m|``) and over the
    signed divisors for F3/F4, so the witness list is finite and complete.
    The degenerate orders 0 and 1 get small canonical witness sets.
    """
    for mode in modes:
        if mode not in MODES:
            raise ValueError(f"unknown transform mode {mode!r}")
    p = space.p
    h = math.isqrt(p)
    if h * h != p:
        return ()
    if p <= 1:
        found = [w for w in _degenerate_witnesses(space) if w.mode in modes]
        return tuple(sorted(found, key=_witness_key))

    found = set()
    targets = [(mode, space.transformed_residue(mode)) for mode in modes]
    for m in (h, -h):
        for mode, qt in targets:
            for d in range(h):
                if (m * d + 1) % p == qt:
                    g = math.gcd(h, d)
                    if g == 1:
                        found.add(FamilyWitness("F1", m, d, mode))
                    elif g == 2:
                        found.add(FamilyWitness("F2", m, d, mode))
            for d in _signed_divisors(m - 1):
                if d % 2 != 0 and (d * (m - 1)) % p == qt:
                    found.add(FamilyWitness("F3", m, d, mode))
            for d in _signed_divisors(2 * m + 1):
                if (d * (m - 1)) % p == qt:
                    found.add(FamilyWitness("F4", m, d, mode))
    return tuple(sorted(found, key=_witness_key))


def _witness_key(w: FamilyWitness):
    return (w.family, MODES.index(w.mode), w.m, w.d)


def is_family_member(space: OrientedLensSpace, oriented: bool = False) -> bool:
    """True when the lens space belongs to some family (default: unoriented)."""
    modes = MODES if not oriented else MODES[:2]
    return bool(classify_family(space, modes))


# ---------------------------------------------------------------------------
# String types T1-T7
# ---------------------------------------------------------------------------

TYPE_TAGS: tuple[str, ...] = ("T1", "T2", "T3", "T4", "T5", "T6", "T7")

T1_SEED: tuple[int, ...] = (-2, -2, -2)
T4_SEED: tuple[int, ...] = (-3, -2, -2, -3)


@dataclass(frozen=True)
class TypedString:
    """A coefficient string matched against one of the seven types.

    For T2/T3/T5/T6/T7 the parameters are ``(s, t)``; for T1/T4 they are the
    complementary tuples ``(b, c)`` together with one generating ``history``
    of (a)/(b) moves from the seed.  ``is_reversed`` marks matches obtained
    by reading the string right-to-left.
    """

    type_tag: str
    coefficients: tuple[int, ...]
    is_reversed: bool = False
    s: Optional[int] = None
    t: Optional[int] = None
    b: Optional[tuple[int, ...]] = None
    c: Optional[tuple[int, ...]] = None
    history: Optional[tuple[str, ...]] = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def params_json(self) -> dict:
        if self.type_tag in ("T1", "T4"):
            return {
                "b": list(self.b),
                "c": list(self.c),
                "history": list(self.history),
            }
        return {"s": self.s, "t": self.t}

    def to_json(self) -> dict:
        return {
            "type": self.type_tag,
            "coefficients": list(self.coefficients),
            "reversed": self.is_reversed,
            "params": self.params_json(),
        }

    def __str__(self) -> str:
        if self.type_tag in ("T1", "T4"):
            params = "b={};c={}".format(
                ",".join(map(str, self.b)), ",".join(map(str, self.c))
            )
        else:
            params = f"s={self.s},t={self.t}"
        rev = ",reversed" if self.is_reversed else ""
        return f"{self.type_tag}[{params}{rev}]"


def expansion_a(coefficients: Sequence[int]) -> tuple[int, ...]:
    """Move (a): prepend -2 and decrement the last entry."""
    cs = tuple(int(x) for x in coefficients)
    if not cs:
        raise ValueError("move (a) requires a nonempty string")
    return (-2,) + cs[:-1] + (cs[-1] - 1,)


def expansion_b(coefficients: Sequence[int]) -> tuple[int, ...]:
    """Move (b): decrement the first entry and append -2."""
    cs = tuple(int(x) for x in coefficients)
    if not cs:
        raise ValueError("move (b) requires a nonempty string")
    return (cs[0] - 1,) + cs[1:] + (-2,)


def _seed_params(seed: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # Both seeds decompose with b = (2,), c = (2,).
    return (2,), (2,)


def _replay_params(history: Sequence[str]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(b, c) after applying a history of moves to a seed decomposition.

    Move (a) appends 2 to ``b`` and increments the last entry of ``c``;
    move (b) increments the last entry of ``b`` and appends 2 to ``c``.
    (The complementarity of ``b`` and ``c`` is preserved by both.)
    """
    b, c = _seed_params(T1_SEED)
    for op in history:
        if op == "a":
            b = b + (2,)
            c = c[:-1] + (c[-1] + 1,)
        elif op == "b":
            b = b[:-1] + (b[-1] + 1,)
            c = c + (2,)
        else:
            raise ValueError(f"unknown move {op!r}")
    return b, c


@lru_cache(maxsize=100_000)
def _peel_history(cs: tuple[int, ...], seed: tuple[int, ...]) -> Optional[tuple[str, ...]]:
    """A move history producing ``cs`` from ``seed``, or None.

    Inverts move (a) when the string starts with -2 and ends <= -3, and
    move (b) symmetrically; tries (a) first, so the returned history is the
    lexicographically least in the a-before-b sense.  Memoized globally —
    distinct query strings share subproblems.
    """
    if cs == seed:
        return ()
    if len(cs) <= len(seed):
        return None
    if cs[0] == -2 and cs[-1] <= -3:
        sub = _peel_history(cs[1:-1] + (cs[-1] + 1,), seed)
        if sub is not None:
            return sub + ("a",)
    if cs[-1] == -2 and cs[0] <= -3:
        sub = _peel_history((cs[0] + 1,) + cs[1:-1], seed)
        if sub is not None:
            return sub + ("b",)
    return None


def _match_t1_t4(cs: tuple[int, ...], is_reversed: bool) -> list[TypedString]:
    out = []
    for tag, seed in (("T1", T1_SEED), ("T4", T4_SEED)):
        history = _peel_history(cs, seed)
        if history is not None:
            b, c = _replay_params(history)
            out.append(
                TypedString(
                    tag, cs, is_reversed=is_reversed, b=b, c=c, history=history
                )
            )
    return out


def _pattern(tag: str, s: int, t: int) -> tuple[int, ...]:
    """The literal string of a pattern type at parameters (s, t)."""
    two_t = (-2,) * t
    two_s = (-2,) * s
    if tag == "T2":
        return two_t + (-3, -2 - s, -2 - t, -3) + two_s
    if tag == "T3":
        return two_t + (-3 - s, -2, -2 - t, -3) + two_s
    if tag == "T5":
        return (-t - 2, -s - 2, -3) + two_t + (-4,) + two_s
    if tag == "T6":
        return (-t - 2, -2, -3 - s) + two_t + (-4,) + two_s
    if tag == "T7":
        return (-t - 3, -2, -3 - s, -3) + two_t + (-3,) + two_s
    raise ValueError(f"{tag} is not a pattern type")


_PATTERN_EXTRA = {"T2": 4, "T3": 4, "T5": 4, "T6": 4, "T7": 5}


def _match_patterns(cs: tuple[int, ...], is_reversed: bool) -> list[TypedString]:
    out = []
    n = len(cs)
    for tag, extra in _PATTERN_EXTRA.items():
        for t in range(n - extra + 1):
            s = n - extra - t
            if cs == _pattern(tag, s, t):
                out.append(TypedString(tag, cs, is_reversed=is_reversed, s=s, t=t))
    return out


def recognize_string_type(coefficients: Sequence[int]) -> tuple[TypedString, ...]:
    """All type matches of a coefficient string, in both reading directions.

    Matches are reported against the string exactly as given
    (``coefficients`` is echoed in each result); a match whose pattern fits
    the reversed string is flagged ``is_reversed``.  Strings with an entry
    > -2 match nothing.  Results are deterministic: sorted by type tag,
    then direction.
    """
    cs = tuple(int(x) for x in coefficients)
    if not cs or any(x > -2 for x in cs):
        return ()
    matches = _match_patterns(cs, False) + _match_t1_t4(cs, False)
    rev = cs[::-1]
    if rev != cs:
        for m in _match_patterns(rev, True) + _match_t1_t4(rev, True):
            matches.append(
                TypedString(
                    m.type_tag,
                    cs,
                    is_reversed=True,
                    s=m.s,
                    t=m.t,
                    b=m.b,
                    c=m.c,
                    history=m.history,
                )
            )
    return tuple(
        sorted(matches, key=lambda m: (m.type_tag, m.is_reversed, m.s or 0, m.t or 0))
    )


def generate_type_strings(type_tag: str, max_rank: int) -> tuple[TypedString, ...]:
    """Every string of one type with at most ``max_rank`` entries.

    T1/T4 are generated breadth-first from their seeds by the two moves
    (deduplicating strings reachable by several histories); the pattern
    types enumerate all ``(s, t)`` with ``s + t + 4 <= max_rank`` (T7:
    ``+ 5``).  Results are sorted by rank, then lexicographically.
    """
    if type_tag in ("T1", "T4"):
        seed = T1_SEED if type_tag == "T1" else T4_SEED
        if max_rank < len(seed):
            return ()
        seen: dict[tuple[int, ...], tuple[str, ...]] = {seed: ()}
        frontier = [seed]
        while frontier:
            nxt = []
            for cs in frontier:
                if len(cs) >= max_rank:
                    continue
                for op, move in (("a", expansion_a), ("b", expansion_b)):
                    child = move(cs)
                    if child not in seen:
                        seen[child] = seen[cs] + (op,)
                        nxt.append(child)
            frontier = nxt
        out = []
        for cs, history in seen.items():
            b, c = _replay_params(history)
            out.append(TypedString(type_tag, cs, b=b, c=c, history=history))
    elif type_tag in _PATTERN_EXTRA:
        extra = _PATTERN_EXTRA[type_tag]
        out = [
            TypedString(type_tag, _pattern(type_tag, s, t), s=s, t=t)
            for total in range(0, max_rank - extra + 1)
            for t in range(total + 1)
            for s in (total - t,)
        ]
    else:
        raise ValueError(f"unknown string type {type_tag!r}")
    return tuple(sorted(out, key=lambda m: (m.rank, m.coefficients)))


def typed_string(coefficients: Sequence[int]) -> Optional[TypedString]:
    """The first match of :func:`recognize_string_type`, or None."""
    matches = recognize_string_type(coefficients)
    return matches[0] if matches else None
