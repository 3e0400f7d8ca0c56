"""Exact negative continued fractions over the extended rationals.

A *negative continued fraction* with terms ``a_1, ..., a_n`` is the nested
expression::

    [a_1, ..., a_n] = a_1 - 1/(a_2 - 1/( ... - 1/a_n))

Intermediate subexpressions may legitimately take the value "one over zero":
for example ``[1, 2, 2]`` contains the subexpression ``2 - 1/2`` whereas
``[2, 1, 2]`` contains ``1 - 1/2 = 1/2`` and ``[1, 1]`` contains ``1 - 1/1 =
0`` whose reciprocal is infinite.  All arithmetic here is therefore done in
the extended rationals  Q ∪ {1/0}, represented exactly by
:class:`ExtendedRational`.  The single infinite value ``1/0`` is unsigned:
``t - 1/(1/0) = t`` and ``t - 1/0`` is again ``1/0`` for every integer ``t``.
The indeterminate form ``0/0`` is a hard error (it can never arise while
evaluating a continued fraction, but user input may try to construct it).

An expansion is *standard* when every term is at least 2.  Each rational
``p/q > 1`` in lowest terms has exactly one standard expansion, produced by
the greedy algorithm that repeatedly takes the ceiling: ``a = ceil(p/q)``,
then recurses on ``q/(a*q - p)``.

The numerators and denominators of partial evaluations satisfy the classical
three-term recurrences.  With ``P_{-1} = 0``, ``P_0 = 1`` and
``Q_{-1} = -1``, ``Q_0 = 0``::

    P_i = a_i * P_{i-1} - P_{i-2}
    Q_i = a_i * Q_{i-1} - Q_{i-2}

the full expansion evaluates to ``P_n / Q_n`` and the determinant identity
``P_{i-1} Q_i - P_i Q_{i-1} = 1`` holds for every prefix (hence ``P_i`` and
``Q_i`` are always coprime).  A second, *backward* table evaluates the
reversed expansion: with ``p_{-1} = 0``, ``p_0 = 1``, ``q_{-1} = -1``,
``q_0 = 0``::

    p_i = a_i    * p_{i-1} - p_{i-2}        (same recurrence as P)
    q_i = a_{i-1}* q_{i-1} - q_{i-2}        (terms shifted by one; q_1 = 1)

so that ``p_n / q_n`` is the value of ``[a_n, ..., a_1]``; the identity
``q_i = p_{i-1}`` links the two tables and shows that reversing a standard
expansion of ``p/q`` yields the standard expansion of ``p/q'`` with
``q q' ≡ 1 (mod p)``.

Both tables are exposed by :class:`ConvergentTable` so that callers (and
tests) can verify the identities directly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union


class UndefinedValueError(ArithmeticError):
    """Raised when arithmetic would produce the indeterminate form 0/0."""


RationalLike = Union["ExtendedRational", Fraction, int]


class ExtendedRational:
    """An exact rational number or the single unsigned infinity ``1/0``.

    Instances are normalized on construction: the fraction is reduced to
    lowest terms, the denominator is non-negative, and the infinite value is
    always stored as ``1/0``.  Constructing ``0/0`` raises
    :class:`UndefinedValueError`.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            if num == 0:
                raise UndefinedValueError("indeterminate form 0/0")
            num = 1
        else:
            g = math.gcd(num, den)
            num //= g
            den //= g
            if den < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("ExtendedRational is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def coerce(cls, value: RationalLike) -> "ExtendedRational":
        if isinstance(value, ExtendedRational):
            return value
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        if isinstance(value, int):
            return cls(value, 1)
        raise TypeError(f"cannot interpret {value!r} as an extended rational")

    @classmethod
    def parse(cls, text: str) -> "ExtendedRational":
        """Parse ``"p/q"`` or a bare integer ``"p"``."""
        m = re.fullmatch(r"\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?", text)
        if not m:
            raise ValueError(f"invalid rational {text!r}; expected 'p' or 'p/q'")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        return cls(num, den)

    @classmethod
    def infinity(cls) -> "ExtendedRational":
        return cls(1, 0)

    # -- queries ------------------------------------------------------

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("1/0 has no finite value")
        return Fraction(self.num, self.den)

    # -- arithmetic ---------------------------------------------------

    def reciprocal(self) -> "ExtendedRational":
        """1/x, with 1/(1/0) = 0 and 1/0 infinite."""
        return ExtendedRational(self.den, self.num)

    def cf_step(self, term: int) -> "ExtendedRational":
        """Return ``term - 1/self``, the elementary evaluation step.

        The single formula ``(term*num - den) / num`` covers every case:
        for ``self = 1/0`` it gives ``term/1`` and for ``self = 0/1`` it
        gives ``-1/0 = 1/0``.
        """
        return ExtendedRational(term * self.num - self.den, self.num)

    def __neg__(self) -> "ExtendedRational":
        return ExtendedRational(-self.num, self.den)

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = ExtendedRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.is_infinite:
            return hash(("ExtendedRational", "inf"))
        return hash(Fraction(self.num, self.den))

    def __gt__(self, other) -> bool:
        other = ExtendedRational.coerce(other)
        if self.is_infinite or other.is_infinite:
            raise ValueError("1/0 is unsigned and cannot be ordered")
        return self.num * other.den > other.num * self.den

    def __lt__(self, other) -> bool:
        other = ExtendedRational.coerce(other)
        return other > self

    # -- formatting ---------------------------------------------------

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtendedRational({self.num}, {self.den})"


def parse_terms(text: str) -> tuple[int, ...]:
    """Parse a comma-separated list of integers, e.g. ``"-2,-3, 4"``."""
    terms = []
    for token in text.split(","):
        token = token.strip()
        try:
            terms.append(int(token))
        except ValueError:
            raise ValueError(f"invalid integer term {token!r}") from None
    return tuple(terms)


def format_terms(terms: Iterable[int]) -> str:
    return ",".join(str(t) for t in terms)


@dataclass(frozen=True)
class CFExpansion:
    """A negative continued fraction, held as its tuple of integer terms."""

    terms: tuple[int, ...]

    def __init__(self, terms: Iterable[int]):
        object.__setattr__(self, "terms", tuple(int(t) for t in terms))

    @classmethod
    def parse(cls, text: str) -> "CFExpansion":
        return cls(parse_terms(text))

    @property
    def is_standard(self) -> bool:
        """True when every term is at least 2 (and the expansion nonempty)."""
        return bool(self.terms) and all(t >= 2 for t in self.terms)

    def value(self) -> ExtendedRational:
        return eval_cf(self.terms)

    def reversed(self) -> "CFExpansion":
        return CFExpansion(self.terms[::-1])

    def negated(self) -> "CFExpansion":
        return CFExpansion(tuple(-t for t in self.terms))

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return format_terms(self.terms)


class ConvergentTable:
    """Forward and backward convergents of a term sequence.

    ``P(i)/Q(i)`` is the value of the length-``i`` prefix and
    ``p(i)/q(i)`` the value of the length-``i`` prefix *reversed*
    (terms ``a_i, ..., a_1``).  Indices run from -1 to ``n`` with the
    conventional seeds ``P(-1) = 0, P(0) = 1, Q(-1) = -1, Q(0) = 0``
    and likewise for the backward table.
    """

    def __init__(self, terms: Sequence[int]):
        self.terms = tuple(int(t) for t in terms)
        n = len(self.terms)
        P = [0, 1]
        Q = [-1, 0]
        for a in self.terms:
            P.append(a * P[-1] - P[-2])
            Q.append(a * Q[-1] - Q[-2])
        # Backward table: same numerator recurrence, and the denominator
        # recurrence uses the *previous* term (q(1) = 1 unconditionally).
        p = [0, 1]
        q = [-1, 0]
        for i in range(1, n + 1):
            p.append(self.terms[i - 1] * p[-1] - p[-2])
            if i == 1:
                q.append(1)
            else:
                q.append(self.terms[i - 2] * q[-1] - q[-2])
        self._P, self._Q, self._p, self._q = P, Q, p, q

    def __len__(self) -> int:
        return len(self.terms)

    def _at(self, table: list, i: int) -> int:
        if not -1 <= i <= len(self.terms):
            raise IndexError(f"convergent index {i} out of range")
        return table[i + 1]

    def P(self, i: int) -> int:
        return self._at(self._P, i)

    def Q(self, i: int) -> int:
        return self._at(self._Q, i)

    def p(self, i: int) -> int:
        return self._at(self._p, i)

    def q(self, i: int) -> int:
        return self._at(self._q, i)

    def value(self) -> ExtendedRational:
        """Value of the full expansion, ``P(n)/Q(n)``."""
        n = len(self.terms)
        return ExtendedRational(self.P(n), self.Q(n))

    def reversed_value(self) -> ExtendedRational:
        """Value of the reversed expansion, ``p(n)/q(n)``."""
        n = len(self.terms)
        return ExtendedRational(self.p(n), self.q(n))


def eval_cf(terms: Sequence[int]) -> ExtendedRational:
    """Evaluate ``[a_1, ..., a_n]`` exactly.

    Computed via the convergent recurrence (one pass, integers only); the
    result equals the right-to-left fold ``a_i - 1/(...)`` over the extended
    rationals, with the empty expansion evaluating to ``1/0``.
    """
    P_prev, P = 0, 1
    Q_prev, Q = -1, 0
    for a in terms:
        P_prev, P = P, a * P - P_prev
        Q_prev, Q = Q, a * Q - Q_prev
    return ExtendedRational(P, Q)


def convergents(terms: Sequence[int]) -> ConvergentTable:
    """Both convergent tables of ``terms`` (see :class:`ConvergentTable`)."""
    return ConvergentTable(terms)


def expand_cf(value: RationalLike) -> tuple[int, ...]:
    """The unique standard expansion (all terms >= 2) of a rational > 1.

    Raises :class:`ValueError` for infinite input or values <= 1.
    """
    x = ExtendedRational.coerce(value)
    if x.is_infinite:
        raise ValueError("cannot expand 1/0; a finite value > 1 is required")
    p, q = x.num, x.den
    if p <= q:
        raise ValueError(f"cannot expand {x}; a value > 1 is required")
    terms = []
    while True:
        a = -(-p // q)  # ceil(p/q)
        terms.append(a)
        r = a * q - p
        if r == 0:
            break
        p, q = q, r
    return tuple(terms)


def is_standard(terms: Sequence[int]) -> bool:
    return bool(terms) and all(t >= 2 for t in terms)


def palindrome_terms(b: Sequence[int], c: int) -> tuple[int, ...]:
    """The anti-palindromic expansion ``[b_1..b_k, c, -b_k..-b_1]``."""
    b = tuple(int(t) for t in b)
    return b + (int(c),) + tuple(-t for t in reversed(b))


def palindrome_value(b: Sequence[int], c: int) -> ExtendedRational:
    """Closed-form value of :func:`palindrome_terms`.

    With ``P_k/Q_k`` the value of ``[b_1..b_k]``, the anti-palindrome
    evaluates to ``c*P_k^2 / (c*P_k*Q_k + 1)``, already in lowest terms
    (its determinant-style identity shows numerator and denominator are
    coprime).  Valid for arbitrary integer terms.
    """
    table = ConvergentTable(b)
    k = len(table)
    Pk, Qk = table.P(k), table.Q(k)
    return ExtendedRational(c * Pk * Pk, c * Pk * Qk + 1)


def complementary_string(b: Sequence[int]) -> tuple[int, ...]:
    """The standard expansion ``c`` complementary to standard ``b``.

    If ``[b_1..b_k] = p/q`` then the complementary string is the standard
    expansion of ``p/(p-q)``; the two satisfy ``q/p + s/r = 1`` where
    ``r/s`` is the value of the complement.  The operation is an
    involution.
    """
    b = tuple(int(t) for t in b)
    if not is_standard(b):
        raise ValueError(f"complement requires a standard expansion, got {b}")
    v = eval_cf(b)
    return expand_cf(ExtendedRational(v.num, v.num - v.den))
