"""Keystone columns of an embedding and the knots they suggest.

Throughout, an embedding is the row matrix of an isometry of a chain
lattice into the negative diagonal lattice (see :mod:`.lattice`); columns
are indexed 1..n as ``e1, ..., en`` in all public input/output.

*Two-support basis.*  ``E2`` is the set of basis columns that carry a
nonzero entry of some row of norm 2 (a ``-2``-framed chain component);
these are the places where a blowdown can start.

*Keystone.*  A column ``e`` is a keystone when the whole basis can be
peeled off one column at a time, starting with ``e`` for free, such that
every later removal is certified by a row whose restriction to the columns
still present is a signed unit vector (±1 in one column, 0 elsewhere).
Removing that column then corresponds to a blowdown that keeps simplifying
the diagram, and the full filtration certifies that surgery along the
suggested knot yields S¹×S².  The search memoizes on the set of remaining
columns, so all keystone queries against one embedding share their
subproblems.

*Suggested knot.*  For a keystone ``e`` the suggested knot links chain
component ``j`` with multiplicity ``ε_j = e · φ(v_j)`` — which is *minus*
the matrix entry, because the basis is negative definite — and carries
framing -1.  The linking vector is defined up to a global sign (``e`` vs
``-e``); the canonical representative makes the first nonzero entry
negative.  Different keystones of one embedding suggest knots related by
handle slides across chain components; :func:`slide_related` finds such a
relation explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .lattice import LatticeEmbedding


@dataclass(frozen=True)
class KeystoneWitness:
    """A peeling order certifying that ``column`` is a keystone.

    ``removal_order`` lists the columns in the order removed (starting with
    the keystone itself); ``certifying_rows[i]`` is the 1-based row whose
    restriction certified step ``i`` (None for the free first step).
    """

    column: int
    removal_order: tuple[int, ...]
    certifying_rows: tuple[Optional[int], ...]

    def to_json(self) -> dict:
        return {
            "removal": list(self.removal_order),
            "certifiers": list(self.certifying_rows),
        }


@dataclass(frozen=True)
class SuggestedKnot:
    """Linking data of the knot suggested by a keystone column."""

    coefficients: tuple[int, ...]  # framings of the chain it links
    epsilon: tuple[int, ...]  # linking numbers with the components
    framing: int = -1

    def to_json(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "epsilon": list(self.epsilon),
            "framing": self.framing,
        }

    def __str__(self) -> str:
        eps = ",".join(str(x) for x in self.epsilon)
        return f"knot(eps=[{eps}], framing={self.framing})"


@dataclass(frozen=True)
class KeystoneReport:
    """E2, the keystones inside it, and one witness per keystone."""

    e2: tuple[int, ...]
    keystones: tuple[int, ...]
    witnesses: dict[int, KeystoneWitness]

    def to_json(self) -> dict:
        return {
            "e2": list(self.e2),
            "keystones": list(self.keystones),
            "witnesses": {str(k): w.to_json() for k, w in self.witnesses.items()},
        }


def two_support_basis(embedding: LatticeEmbedding) -> tuple[int, ...]:
    """Columns (1-based) touched by some row of norm 2."""
    cols = set()
    for row in embedding.rows:
        if sum(x * x for x in row) == 2:
            cols.update(j + 1 for j, x in enumerate(row) if x)
    return tuple(sorted(cols))


class _FiltrationSolver:
    """Memoized search for peeling orders of one embedding."""

    def __init__(self, embedding: LatticeEmbedding):
        self.rows = embedding.rows
        self.ncols = embedding.ncols
        self.memo: dict[frozenset, Optional[tuple[tuple[int, int], ...]]] = {}

    def peel(self, remaining: frozenset) -> Optional[tuple[tuple[int, int], ...]]:
        """Steps ``((column, certifying_row), ...)`` emptying ``remaining``."""
        if not remaining:
            return ()
        if remaining in self.memo:
            return self.memo[remaining]
        candidates: dict[int, int] = {}
        for ri, row in enumerate(self.rows):
            support = [c for c in remaining if row[c]]
            if len(support) == 1 and abs(row[support[0]]) == 1:
                col = support[0]
                if col not in candidates:
                    candidates[col] = ri
        result = None
        for col in sorted(candidates):
            sub = self.peel(remaining - {col})
            if sub is not None:
                result = ((col, candidates[col]),) + sub
                break
        self.memo[remaining] = result
        return result

    def witness(self, column0: int) -> Optional[KeystoneWitness]:
        """0-based column; returns a 1-based witness or None."""
        steps = self.peel(frozenset(range(self.ncols)) - {column0})
        if steps is None:
            return None
        removal = (column0 + 1,) + tuple(col + 1 for col, _ in steps)
        certifiers = (None,) + tuple(ri + 1 for _, ri in steps)
        return KeystoneWitness(column0 + 1, removal, certifiers)


def is_keystone(embedding: LatticeEmbedding, column: int) -> Optional[KeystoneWitness]:
    """Witness that 1-based ``column`` is a keystone, or None.

    Any basis column may be queried; note that a report
    (:func:`keystone_set`) only lists keystones inside E2, where a blowdown
    can actually start.
    """
    if not 1 <= column <= embedding.ncols:
        raise ValueError(f"column e{column} out of range 1..{embedding.ncols}")
    return _FiltrationSolver(embedding).witness(column - 1)


def keystone_set(embedding: LatticeEmbedding) -> KeystoneReport:
    """E2 and its keystones, with one peeling witness each."""
    solver = _FiltrationSolver(embedding)
    e2 = two_support_basis(embedding)
    witnesses = {}
    for col in e2:
        w = solver.witness(col - 1)
        if w is not None:
            witnesses[col] = w
    return KeystoneReport(e2, tuple(sorted(witnesses)), witnesses)


def _canonical_epsilon(eps: Sequence[int]) -> tuple[int, ...]:
    for x in eps:
        if x:
            return tuple(eps) if x < 0 else tuple(-y for y in eps)
    return tuple(eps)


def suggested_knot(embedding: LatticeEmbedding, column: int) -> SuggestedKnot:
    """The knot suggested by a keystone column (1-based).

    Raises ValueError when the column is not a keystone.  The linking
    numbers are ``ε_j = e · φ(v_j) = -rows[j][column]`` (negative-definite
    basis), normalized so the first nonzero is negative; the framing is -1.
    """
    if is_keystone(embedding, column) is None:
        raise ValueError(f"column e{column} is not a keystone of this embedding")
    eps = _canonical_epsilon([-row[column - 1] for row in embedding.rows])
    return SuggestedKnot(embedding.diagonal_coefficients(), eps, -1)


def slide_related(
    coefficients: Sequence[int],
    first: Sequence[int],
    second: Sequence[int],
    framing: int = -1,
) -> Optional[tuple[int, int, int]]:
    """A single handle slide carrying one linking vector to the other.

    Sliding a framing-``f`` knot with linking vector ε across chain
    component ``r`` (1-based) with sign σ replaces ε by ε + σ·B_r (B_r the
    r-th row of the chain linking matrix) and ``f`` by ``f + B_rr + 2σε_r``;
    the move must preserve the framing here.  Returns ``(r, σ, g)`` where
    ``g`` is the global sign with ``second = g·(slide of first)``, or None.
    """
    cs = tuple(int(x) for x in coefficients)
    n = len(cs)
    first = tuple(int(x) for x in first)
    second = tuple(int(x) for x in second)
    if len(first) != n or len(second) != n:
        raise ValueError("linking vectors must match the chain length")
    for r in range(n):
        b_row = [0] * n
        b_row[r] = cs[r]
        if r > 0:
            b_row[r - 1] = 1
        if r + 1 < n:
            b_row[r + 1] = 1
        for sigma in (1, -1):
            slid = tuple(x + sigma * y for x, y in zip(first, b_row))
            new_framing = framing + cs[r] + 2 * sigma * first[r]
            if new_framing != framing:
                continue
            for g in (1, -1):
                if second == tuple(g * x for x in slid):
                    return (r + 1, sigma, g)
    return None
