"""Homology of chain-link surgery and the dual-knot class bookkeeping.

**Meridian classes.**  Surgery on a chain of unknots with framings
``c_1, ..., c_n`` presents a lens space; with ``a_i = -c_i`` and the
forward convergents ``P_i`` of ``[a_1, ..., a_n]`` (see :mod:`.cfrac`), the
first homology is Z/p with ``p = |P_n|``, the meridian of component ``i``
represents ``P_{i-1}`` times the meridian of component 1, and the space is
``L(P_n, Q_n)`` in canonical form.  The residues ``q = Q_n mod p`` and
``q^{-1} = P_{n-1} mod p`` convert between the two natural generators:
``μ_1 = q · μ_n``.  A knot linking component ``i`` with multiplicity
``w_i`` represents ``Σ w_i P_{i-1}`` in the ``μ_1`` basis.

**Dual-knot families.**  Eight families of knots in S¹×S² admit
longitudinal lens-space surgeries; for each, the homology class of the
surgery-dual knot has an exact closed form in terms of the family
parameters.  ``dual_knot_record`` builds the chain, reads off the computed
class of the dual from its linking vector, and compares it with the frozen
closed form — in both meridian bases, exactly.

**Certificates.**  ``verify_s1s2`` checks that -1-framed surgery on a knot
with a given linking vector against a chain turns it into S¹×S²: the
bordered (n+1)×(n+1) linking matrix must have cokernel Z, i.e. Smith
diagonal (1, ..., 1, 0).

**Simple knots.**  ``K(p, q, k)`` denotes the simple knot in L(p, q) in
homology class ``k`` (times ``μ``).  Two parameter triples present the same
unoriented knot iff they are related by the residue transforms of the lens
space together with the induced action on the class and the free symmetry
``k ↦ -k``.  When ``q^2 ≡ -1 (mod p)`` the orientation-reversing
transforms land on the same residues as the orientation-preserving ones and
would merge otherwise distinct classes; they are therefore dropped in that
case unless ``mirror_when_q_squared_is_minus_one=True``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .cfrac import ConvergentTable
from .lens import OrientedLensSpace, normalize_lens
from .snf import smith_diagonal


@dataclass(frozen=True)
class ChainPresentation:
    """Homological data of surgery on a chain of unknots."""

    coefficients: tuple[int, ...]  # framings c_i
    a_terms: tuple[int, ...]  # negated framings a_i = -c_i
    order: int  # |P_n|; 0 when H_1 is infinite
    meridians: tuple[int, ...]  # class of μ_i (mod order if finite, raw if not)
    forward_P: tuple[int, ...]  # P_0, ..., P_n of the a-terms
    q_residue: Optional[int]  # canonical q with the space = L(order, q)
    q_inverse: Optional[int]  # inverse residue, = P_{n-1} mod order
    space: Optional[OrientedLensSpace]

    @property
    def degenerate(self) -> bool:
        """True when the surgered manifold has infinite first homology."""
        return self.order == 0

    def to_json(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "order": self.order,
            "meridians": list(self.meridians),
            "q": self.q_residue,
            "space": str(self.space) if self.space else None,
        }


def meridian_classes(coefficients: Sequence[int]) -> ChainPresentation:
    """Meridian classes and identification of the chain-surgered space.

    ``coefficients`` are the framings of the chain components, in order.
    """
    cs = tuple(int(x) for x in coefficients)
    if not cs:
        raise ValueError("a chain needs at least one component")
    a = tuple(-c for c in cs)
    table = ConvergentTable(a)
    n = len(a)
    P = tuple(table.P(i) for i in range(0, n + 1))
    p = abs(table.P(n))
    if p == 0:
        return ChainPresentation(cs, a, 0, P[:-1], P, None, None, None)
    meridians = tuple(table.P(i - 1) % p for i in range(1, n + 1))
    space = normalize_lens(table.P(n), table.Q(n))
    q_res = table.Q(n) % p
    q_inv = table.P(n - 1) % p
    return ChainPresentation(cs, a, p, meridians, P, q_res, q_inv, space)


@dataclass(frozen=True)
class HomologyClass:
    """A first-homology class expressed in both meridian bases."""

    order: int
    mu1: int  # coefficient on the meridian of the first component
    mun: int  # coefficient on the meridian of the last component

    def first_orbit(self) -> tuple[int, ...]:
        """The unordered pair {±class} of μ_1 residues (unoriented knot)."""
        return tuple(sorted({self.mu1 % self.order, -self.mu1 % self.order}))

    def last_orbit(self) -> tuple[int, ...]:
        """The unordered pair {±class} of μ_n residues (unoriented knot)."""
        return tuple(sorted({self.mun % self.order, -self.mun % self.order}))

    def __str__(self) -> str:
        return f"{self.mu1}*mu_first = {self.mun}*mu_last (mod {self.order})"


def knot_class(pres: ChainPresentation, multipliers: Sequence[int]) -> HomologyClass:
    """Class of a knot linking component ``i`` with ``multipliers[i]``.

    Raises ValueError on a degenerate presentation (infinite homology has
    no single residue to report).
    """
    w = tuple(int(x) for x in multipliers)
    if len(w) != len(pres.coefficients):
        raise ValueError("one linking multiplier per chain component required")
    if pres.degenerate:
        raise ValueError("degenerate chain: first homology is infinite")
    p = pres.order
    k1 = sum(wi * mi for wi, mi in zip(w, pres.meridians)) % p
    kn = k1 * pres.q_residue % p
    return HomologyClass(p, k1, kn)


# ---------------------------------------------------------------------------
# The eight dual-knot families
# ---------------------------------------------------------------------------

FAMILY_BGI = "bgi"
FAMILY_GOFK = "gofk"
FAMILY_BGII = "bgii"
FAMILY_BGIII = "bgiii"
FAMILY_BGV = "bgv"
FAMILY_SPOR = "spor"
FAMILY_BGIV = "bgiv"
FAMILY_BGIV_PRIME = "bgiv-prime"

DUAL_FAMILIES: tuple[str, ...] = (
    FAMILY_BGI,
    FAMILY_GOFK,
    FAMILY_BGII,
    FAMILY_BGIII,
    FAMILY_BGV,
    FAMILY_SPOR,
    FAMILY_BGIV,
    FAMILY_BGIV_PRIME,
)


@dataclass(frozen=True)
class DualKnotRecord:
    """A family instance: chain, lens space, computed vs claimed dual class."""

    family: str
    params: dict
    chain: tuple[int, ...]
    multipliers: tuple[int, ...]
    space: OrientedLensSpace
    m: int
    d: int
    computed: HomologyClass
    claimed: HomologyClass
    match: bool

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "chain": list(self.chain),
            "space": str(self.space),
            "m": self.m,
            "d": self.d,
            "computed": {"mu1": self.computed.mu1, "mun": self.computed.mun},
            "claimed": {"mu1": self.claimed.mu1, "mun": self.claimed.mun},
            "match": self.match,
        }


def _check_b(b: Sequence[int], even_length: bool) -> tuple[int, ...]:
    bt = tuple(int(x) for x in b)
    if not bt or any(x < 2 for x in bt):
        raise ValueError(f"parameter b must be a nonempty tuple of entries >= 2, got {bt}")
    if even_length and len(bt) % 2:
        raise ValueError(f"parameter b must have even length for this family, got {bt}")
    return bt


def _family_data(family: str, b, s, t) -> tuple[tuple[int, ...], tuple[int, ...], int, int, tuple[int, int]]:
    """(chain, multipliers, m, d, claimed (mu1, mun) coefficients times m)."""
    if family in (FAMILY_BGI, FAMILY_GOFK):
        bt = _check_b(b, even_length=True)
        k2 = len(bt)
        table = ConvergentTable(bt)
        m, d = table.P(k2), table.Q(k2)
        chain = tuple(-x for x in bt) + (-1,) + tuple(reversed(bt))
        n = 2 * k2 + 1
        w = [0] * n
        if family == FAMILY_BGI:
            w[k2] = -1  # the -1-framed middle component
            claimed = (-m, -m)
        else:
            w[0], w[n - 1] = 1, -1
            claimed = (d * m, d * m)
        return chain, tuple(w), m, d, claimed
    if family == FAMILY_BGII:
        bt = _check_b(b, even_length=False)
        k = len(bt)
        table = ConvergentTable(bt)
        m, d = 2 * table.P(k), 2 * table.Q(k)
        chain = tuple(-x for x in bt) + (-4,) + tuple(reversed(bt))
        n = 2 * k + 1
        w = [0] * n
        w[k - 1], w[k], w[k + 1] = 1, -2, 1
        return chain, tuple(w), m, d, (m, m)
    if family in (FAMILY_BGIII, FAMILY_BGV, FAMILY_SPOR):
        s, t = int(s), int(t)
        if family == FAMILY_SPOR and t != 1:
            raise ValueError("the sporadic family requires t = 1")
        m = 4 + 3 * t + 2 * s + 2 * s * t
        d = -(3 + 2 * s)
        chain = (t + 1, -s - 2, -2, -t - 2, -2, s + 1)
        if family == FAMILY_BGIII:
            w = (1, 0, 0, 1, 0, 0)
            claimed = (-m, d * m)
        elif family == FAMILY_BGV:
            w = (0, 0, 1, 0, -1, 0)
            claimed = ((1 + t) * m, -m)
        else:
            w = (0, 1, 0, 0, 0, -1)
            claimed = (4 * m, -2 * m)
        return chain, w, m, d, claimed
    if family in (FAMILY_BGIV, FAMILY_BGIV_PRIME):
        s, t = int(s), int(t)
        m = 4 + 3 * s + 3 * t + 2 * s * t
        d = -(3 + 2 * s)
        chain = (t + 1, -2, -s - 2, -t - 2, -2, s + 1)
        if family == FAMILY_BGIV:
            w = (1, 0, 0, 1, 0, 0)
            claimed = (-m, d * m)
        else:
            w = (0, 0, 1, 0, 0, 1)
            claimed = (-(3 + 2 * t) * m, -m)
        return chain, w, m, d, claimed
    raise ValueError(f"unknown dual-knot family {family!r}; known: {DUAL_FAMILIES}")


def dual_knot_record(
    family: str,
    *,
    b: Optional[Sequence[int]] = None,
    s: Optional[int] = None,
    t: Optional[int] = None,
) -> DualKnotRecord:
    """Instantiate a dual-knot family and compare computed vs claimed class.

    Families ``bgi``/``gofk`` take ``b`` (even length, entries >= 2),
    ``bgii`` takes ``b`` (any length >= 1); the four 6-component families
    take integers ``s`` and ``t`` (``spor`` requires ``t = 1``; negative
    values are allowed where they still produce a nondegenerate chain).
    The record's ``match`` is exact equality of computed and claimed class
    in both meridian bases.
    """
    chain, w, m, d, claimed_pair = _family_data(family, b, s, t)
    pres = meridian_classes(chain)
    if pres.degenerate or pres.order == 1:
        raise ValueError(
            f"family {family} at these parameters gives a degenerate chain {chain}"
        )
    p = pres.order
    if p != m * m:
        raise AssertionError(f"internal: |H_1| = {p} but m^2 = {m * m}")
    computed = knot_class(pres, w)
    # The closed forms convert to the last meridian through the identity
    # μ_1 = q·μ_n with q the fraction's residue; when the chain presents
    # the fraction with numerator and denominator both negated (b of odd
    # length in the middle-(-4) family), that conversion picks up a sign.
    flip = 1 if pres.forward_P[-1] > 0 else -1
    claimed = HomologyClass(p, claimed_pair[0] % p, flip * claimed_pair[1] % p)
    match = computed.mu1 == claimed.mu1 and computed.mun == claimed.mun
    params: dict = {}
    if b is not None:
        params["b"] = [int(x) for x in b]
    if s is not None:
        params["s"] = int(s)
    if t is not None:
        params["t"] = int(t)
    return DualKnotRecord(
        family, params, chain, w, pres.space, m, d, computed, claimed, match
    )


# ---------------------------------------------------------------------------
# S¹×S² certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurgeryCertificate:
    """Outcome of the bordered-matrix test for an S¹×S² surgery."""

    passed: bool
    diagonal: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    def __bool__(self) -> bool:
        return self.passed

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} snf={','.join(str(d) for d in self.diagonal)}"


def bordered_matrix(
    coefficients: Sequence[int], epsilon: Sequence[int], framing: int
) -> tuple[tuple[int, ...], ...]:
    """Linking matrix of chain + one extra knot with linking vector ε."""
    cs = [int(x) for x in coefficients]
    eps = [int(x) for x in epsilon]
    if len(cs) != len(eps):
        raise ValueError("need one linking number per chain component")
    n = len(cs)
    M = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        M[i][i] = cs[i]
        if i + 1 < n:
            M[i][i + 1] = M[i + 1][i] = 1
        M[i][n] = M[n][i] = eps[i]
    M[n][n] = int(framing)
    return tuple(tuple(row) for row in M)


def verify_s1s2(
    coefficients: Sequence[int], epsilon: Sequence[int], framing: int = -1
) -> SurgeryCertificate:
    """Does surgery on chain+knot produce S¹×S²?  (Cokernel must be Z.)

    True iff the Smith diagonal of the bordered matrix is (1, ..., 1, 0).
    The empty chain is allowed: then the test is simply ``framing == 0``.
    """
    M = bordered_matrix(coefficients, epsilon, framing)
    diag = smith_diagonal(M)
    n = len(M) - 1
    passed = diag == (1,) * n + (0,)
    return SurgeryCertificate(passed, diag, M)


# ---------------------------------------------------------------------------
# Simple knots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimpleKnot:
    """``K(p, q, k)``: the simple knot in L(p, q) with homology class k·μ."""

    p: int
    q: int
    k: int

    def __init__(self, p: int, q: int, k: int):
        space = OrientedLensSpace(p, q)
        if space.p < 1:
            raise ValueError("simple knots live in lens spaces of order >= 1")
        object.__setattr__(self, "p", space.p)
        object.__setattr__(self, "q", space.q)
        object.__setattr__(self, "k", int(k) % space.p if space.p > 1 else 0)

    @classmethod
    def parse(cls, text: str) -> "SimpleKnot":
        body = text.strip()
        if body.lower().startswith("k(") and body.endswith(")"):
            body = body[2:-1]
        parts = [x.strip() for x in body.split(",")]
        if len(parts) != 3:
            raise ValueError(f"invalid simple knot {text!r}; expected 'K(p,q,k)' or 'p,q,k'")
        return cls(int(parts[0]), int(parts[1]), int(parts[2]))

    def space(self) -> OrientedLensSpace:
        return OrientedLensSpace(self.p, self.q)

    def __str__(self) -> str:
        return f"K({self.p},{self.q},{self.k})"


@dataclass(frozen=True)
class EquivalenceDecision:
    equivalent: bool
    route: Optional[str] = None

    def __bool__(self) -> bool:
        return self.equivalent

    def __str__(self) -> str:
        return f"equivalent via {self.route}" if self.equivalent else "not equivalent"


def simple_knot_equivalent(
    first: SimpleKnot,
    second: SimpleKnot,
    mirror_when_q_squared_is_minus_one: bool = False,
) -> EquivalenceDecision:
    """Unoriented equivalence of two simple-knot presentations.

    Routes tried, in order (all classes mod p, with k ↦ -k always free):

    - ``identity``:          q' = q,      k' = ±k
    - ``inverse``:           q' = q⁻¹,    k' = ±q⁻¹·k
    - ``reversed``:          q' = -q,     k' = ±k
    - ``reversed-inverse``:  q' = -q⁻¹,   k' = ±q⁻¹·k

    The two ``reversed`` routes are dropped when q² ≡ -1 (mod p) unless the
    toggle is set, since in that case they collapse onto the first two
    residues and would identify classes that the oriented theory keeps
    apart.
    """
    if first.p != second.p:
        return EquivalenceDecision(False)
    p = first.p
    if p == 1:
        return EquivalenceDecision(True, "identity")
    q = first.q
    q_inv = pow(q, -1, p)
    k = first.k
    routes = [
        ("identity", q, (k, -k % p)),
        ("inverse", q_inv, (q_inv * k % p, -q_inv * k % p)),
    ]
    if mirror_when_q_squared_is_minus_one or (q * q) % p != p - 1:
        routes += [
            ("reversed", (p - q) % p, (k, -k % p)),
            ("reversed-inverse", (p - q_inv) % p, (q_inv * k % p, -q_inv * k % p)),
        ]
    for name, q_target, ks in routes:
        if second.q == q_target and second.k in ks:
            return EquivalenceDecision(True, name)
    return EquivalenceDecision(False)


# ---------------------------------------------------------------------------
# Classical surgeries with lens-space results
# ---------------------------------------------------------------------------


def torus_knot_surgery(p: int, q: int, n: int) -> OrientedLensSpace:
    """Lens space of the np²-framed longitudinal surgery on the (p,q) torus
    knot in S¹×S²: L(n·p², n·p·q + 1)."""
    p, q, n = int(p), int(q), int(n)
    if p < 1 or math.gcd(p, q) != 1:
        raise ValueError("torus knot parameters need p >= 1 and gcd(p, q) = 1")
    if n < 1:
        raise ValueError("the multiplicity n must be a positive integer")
    return normalize_lens(n * p * p, n * p * q + 1)


def cable_surgery(p: int, q: int, sign: int) -> OrientedLensSpace:
    """Lens space of the longitudinal surgery on the (2p, 2q±1)-cable of the
    (p, q) torus knot in S¹×S²: L(4p², 4pq ± 1)."""
    p, q, sign = int(p), int(q), int(sign)
    if p < 1 or math.gcd(p, q) != 1:
        raise ValueError("cable parameters need p >= 1 and gcd(p, q) = 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return normalize_lens(4 * p * p, 4 * p * q + sign)
