"""Chain-link intersection lattices and their embeddings into Z^n.

The intersection lattice of a chain of ``n`` unknots with framings
``c_1, ..., c_n`` (all ``c_i <= -1``) is Z^n with the pairing

    Q(v_i, v_i) = c_i,   Q(v_i, v_{i+1}) = 1,   Q(v_i, v_j) = 0  (|i-j| > 1).

An *embedding* is an isometry into the negative-definite diagonal lattice of
the same rank, with basis ``e_1, ..., e_n`` and ``e_i · e_j = -δ_ij``.  It is
stored as the integer matrix ``rows`` with ``φ(v_i) = Σ_j rows[i][j] e_j``;
in terms of ordinary dot products of rows the isometry conditions read

    rows[i] . rows[i]   = -c_i
    rows[i] . rows[i+1] = -1
    rows[i] . rows[j]   = 0        (|i-j| > 1)

(the sign flip comes from the negative-definite basis).

Embeddings are classified up to reindexing the ``e_j`` and flipping their
signs (the global flip included).  The canonical representative of a class
normalizes every column so that its topmost nonzero entry is positive and
then sorts columns by (row of topmost nonzero, column tuple); two embeddings
are equivalent iff their canonical forms coincide.

``find_embeddings`` enumerates all classes by depth-first search over rows:
entries on already-used columns are bounded by the square root of the
remaining norm and pruned against the partial inner products; new columns
are consumed left to right with positive non-increasing entries, and columns
that are still indistinguishable must be used in non-increasing order.  That
symmetry breaking reaches at least one representative of every class, and
canonical deduplication removes the rest.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .families import TypedString, expansion_a, expansion_b


@dataclass(frozen=True)
class IntersectionForm:
    """The chain lattice with diagonal ``coefficients`` (all <= -1)."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Sequence[int]):
        cs = tuple(int(x) for x in coefficients)
        if not cs:
            raise ValueError("a chain needs at least one component")
        bad = [x for x in cs if x > -1]
        if bad:
            raise ValueError(f"chain framings must be <= -1, got {bad}")
        object.__setattr__(self, "coefficients", cs)

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        return tuple(
            tuple(
                self.coefficients[i] if i == j else (1 if abs(i - j) == 1 else 0)
                for j in range(n)
            )
            for i in range(n)
        )

    def determinant(self) -> int:
        """det of the pairing matrix (continuant recurrence, exact)."""
        prev, cur = 1, 1
        for i, c in enumerate(self.coefficients):
            prev, cur = cur, c * cur - (prev if i else 0)
        return cur

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coefficients)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class LatticeEmbedding:
    """An isometry of a chain lattice into Z^n, as a matrix of row vectors."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        rs = tuple(tuple(int(x) for x in row) for row in rows)
        if not rs:
            raise ValueError("an embedding needs at least one row")
        width = len(rs[0])
        if any(len(row) != width for row in rs):
            raise ValueError("embedding rows have unequal lengths")
        object.__setattr__(self, "rows", rs)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def gram(self) -> tuple[tuple[int, ...], ...]:
        """The induced pairing matrix, ``-rows^T rows`` entrywise."""
        return tuple(
            tuple(-_dot(u, v) for v in self.rows) for u in self.rows
        )

    def diagonal_coefficients(self) -> tuple[int, ...]:
        return tuple(-_dot(row, row) for row in self.rows)

    def canonical(self) -> "LatticeEmbedding":
        return LatticeEmbedding(_canonical_rows(self.rows))

    def sign_table(self) -> str:
        """Human-readable table; entries ±1 print as +/-, 0 as '.'."""
        head = "    " + " ".join(f"e{j + 1:<3d}" for j in range(self.ncols))
        lines = [head]
        for i, row in enumerate(self.rows):
            cells = []
            for x in row:
                if x == 0:
                    cells.append(".")
                elif x == 1:
                    cells.append("+")
                elif x == -1:
                    cells.append("-")
                else:
                    cells.append(str(x))
            lines.append(f"v{i + 1:<3d}" + " ".join(f"{c:<4s}" for c in cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "coefficients": list(self.diagonal_coefficients()),
            "rows": [list(row) for row in self.rows],
        }

    @classmethod
    def from_json(cls, data) -> "LatticeEmbedding":
        if isinstance(data, str):
            data = json.loads(data)
        rows = data["rows"] if isinstance(data, dict) else data
        return cls(rows)


def _canonical_rows(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    nrows = len(rows)
    ncols = len(rows[0])
    keyed = []
    for j in range(ncols):
        col = tuple(row[j] for row in rows)
        top = next((i for i, x in enumerate(col) if x != 0), nrows)
        if top < nrows and col[top] < 0:
            col = tuple(-x for x in col)
        keyed.append((top, col))
    keyed.sort()
    return tuple(
        tuple(keyed[j][1][i] for j in range(ncols)) for i in range(nrows)
    )


def embeddings_equivalent(first: LatticeEmbedding, second: LatticeEmbedding) -> bool:
    """True iff the two differ only by column reindexing and sign flips."""
    if first.rank != second.rank or first.ncols != second.ncols:
        return False
    return _canonical_rows(first.rows) == _canonical_rows(second.rows)


def verify_embedding(form: IntersectionForm, embedding: LatticeEmbedding) -> bool:
    """Check every isometry condition (norms, adjacent pairings, zeros)."""
    if embedding.rank != form.rank:
        return False
    return embedding.gram() == form.matrix()


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


def _search(a: tuple[int, ...], find_all: bool) -> list[tuple[tuple[int, ...], ...]]:
    """All row matrices (up to symmetry breaking) embedding the chain with
    norms ``a`` (``a_i = -c_i >= 1``) into Z^n; stops at the first hit when
    ``find_all`` is false."""
    n = len(a)
    rows: list[list[int]] = []
    maxcol: list[int] = []  # per row: last column with a nonzero entry
    suffix: list[list[int]] = []  # per row: suffix sums of |entries|
    colrows: list[list[int]] = [[] for _ in range(n)]  # rows hitting column c
    tie = [False] * n
    state = {"used": 0}
    results: list[tuple[tuple[int, ...], ...]] = []

    def place(i: int) -> bool:
        if i == n:
            results.append(tuple(tuple(r) for r in rows))
            return not find_all
        used = state["used"]
        norm = a[i]
        targets = [0] * i
        if i:
            targets[i - 1] = -1
        vec = [0] * n
        partial = [0] * i
        # Rows whose running dot product is still off target.  A violated
        # row always has support at or beyond the scan column: were its
        # support exhausted, the finalize check below would already have
        # rejected the prefix.
        viol = {i - 1} if i else set()

        finalize = [[] for _ in range(used + 1)]
        for j in range(i):
            finalize[maxcol[j] + 1].append(j)

        def fresh(k: int, rem: int, cap: int) -> bool:
            if rem == 0:
                return accept(used + k)
            if used + k == n:
                return False
            v = min(cap, math.isqrt(rem))
            while v >= 1:
                vec[used + k] = v
                if fresh(k + 1, rem - v * v, v):
                    return True
                vec[used + k] = 0
                v -= 1
            return False

        def accept(new_used: int) -> bool:
            old_used = used
            old_tie = tie[:]
            rows.append(vec.copy())
            mc = -1
            for c in range(new_used - 1, -1, -1):
                if vec[c]:
                    mc = c
                    break
            maxcol.append(mc)
            suf = [0] * (n + 1)
            for c in range(n - 1, -1, -1):
                suf[c] = suf[c + 1] + abs(vec[c])
            suffix.append(suf)
            touched = [c for c in range(new_used) if vec[c]]
            for c in touched:
                colrows[c].append(i)
            state["used"] = new_used
            for c in range(1, old_used):
                if tie[c] and vec[c] != vec[c - 1]:
                    tie[c] = False
            if new_used > old_used:
                tie[old_used] = False
                for c in range(old_used + 1, new_used):
                    tie[c] = vec[c] == vec[c - 1]
            stop = place(i + 1)
            rows.pop()
            maxcol.pop()
            suffix.pop()
            for c in touched:
                colrows[c].pop()
            state["used"] = old_used
            tie[:] = old_tie
            return stop

        def apply(c: int, x: int) -> None:
            for j in colrows[c]:
                s = partial[j] + x * rows[j][c]
                partial[j] = s
                if s == targets[j]:
                    viol.discard(j)
                else:
                    viol.add(j)

        # Depth-first scan of the used columns, iterative so the Python
        # stack grows with the rank rather than its square.  ``rems[c]`` is
        # the norm still unplaced on entry to column c and ``cands[c]`` the
        # values not yet tried there; chosen entries update the running dot
        # products immediately and are undone on backtrack.
        rems = [0] * (used + 1)
        rems[0] = norm
        cands: list[list[int]] = [[] for _ in range(used)]
        c = 0
        entering = True
        while True:
            if entering:
                ok = True
                for j in finalize[c]:
                    if partial[j] != targets[j]:
                        ok = False
                        break
                if ok and c == used:
                    rem = rems[c]
                    if fresh(0, rem, math.isqrt(rem) if rem else 0):
                        return True
                    ok = False
                if ok:
                    rem = rems[c]
                    bound = math.isqrt(rem)
                    hi = min(bound, vec[c - 1]) if tie[c] else bound
                    cands[c] = list(range(-bound, hi + 1))  # popped high-first
                    entering = False
                    continue
                c -= 1
                if c < 0:
                    return False
                if vec[c]:
                    apply(c, -vec[c])
                    vec[c] = 0
                entering = False
                continue
            cand = cands[c]
            descended = False
            while cand:
                x = cand.pop()
                if x:
                    apply(c, x)
                feasible = True
                if viol:
                    rem2 = rems[c] - x * x
                    future = math.isqrt(rem2)
                    for j in viol:
                        if abs(targets[j] - partial[j]) > suffix[j][c + 1] * future:
                            feasible = False
                            break
                if feasible:
                    vec[c] = x
                    rems[c + 1] = rems[c] - x * x
                    c += 1
                    entering = True
                    descended = True
                    break
                if x:
                    apply(c, -x)
            if descended:
                continue
            c -= 1
            if c < 0:
                return False
            if vec[c]:
                apply(c, -vec[c])
                vec[c] = 0
            entering = False

    # Cross-row recursion plus a fresh-column block per row keeps the depth
    # linear in the rank; give deep chains the headroom they need.
    limit = 20 * n + 2000
    old_limit = sys.getrecursionlimit()
    if old_limit < limit:
        sys.setrecursionlimit(limit)
    try:
        place(0)
    finally:
        if old_limit < limit:
            sys.setrecursionlimit(old_limit)
    return results


def find_embeddings(form: IntersectionForm, all_classes: bool = True) -> tuple[LatticeEmbedding, ...]:
    """All embedding classes of ``form``, as canonical representatives.

    With ``all_classes=False`` the search stops at the first embedding found
    (the result is then a single class or empty).  The result is sorted, so
    repeated runs agree entry by entry.
    """
    a = tuple(-c for c in form.coefficients)
    raw = _search(a, find_all=all_classes)
    classes = {_canonical_rows(rows) for rows in raw}
    return tuple(LatticeEmbedding(rows) for rows in sorted(classes))


def embedding_exists(form: IntersectionForm) -> bool:
    """Whether the chain lattice embeds at all (early-exit search)."""
    return bool(_search(tuple(-c for c in form.coefficients), find_all=False))


# ---------------------------------------------------------------------------
# Closed-form tables for the recognized string types
# ---------------------------------------------------------------------------


def _rows_from_entries(n: int, entries_per_row: list[dict[int, int]]) -> list[list[int]]:
    rows = []
    for entries in entries_per_row:
        row = [0] * n
        for col, val in entries.items():
            row[col] = val
        rows.append(row)
    return rows


def _table_t2_t3(tag: str, s: int, t: int) -> list[list[int]]:
    n = t + s + 4
    e1, e2, e3, e4 = 0, 1, 2, 3
    f = [3 + i for i in range(1, t + 1)]  # f_1..f_t  ->  e_5..e_{t+4}
    g = [t + 3 + i for i in range(1, s + 1)]  # g_1..g_s  ->  e_{t+5}..e_{t+s+4}
    rows: list[dict[int, int]] = []
    for i in range(1, t):
        rows.append({f[t - i - 1]: -1, f[t - i]: 1})
    if t:
        rows.append({e3: -1, f[0]: 1})
    if tag == "T2":
        rows.append({e2: 1, e3: 1, e4: 1})
        rows.append({e1: 1, e2: -1, **{c: -1 for c in g}})
    else:
        rows.append({e2: 1, e3: 1, e4: 1, **{c: 1 for c in g}})
        rows.append({e1: 1, e2: -1})
    rows.append({e2: 1, e3: -1, **{c: -1 for c in f}})
    rows.append({e1: -1, e2: -1, e4: 1})
    if s:
        first_g = {e1: 1, g[0]: 1} if tag == "T2" else {e4: -1, g[0]: 1}
        rows.append(first_g)
        for i in range(1, s):
            rows.append({g[i - 1]: -1, g[i]: 1})
    return _rows_from_entries(n, rows)


def _table_t5_t6(tag: str, s: int, t: int) -> list[list[int]]:
    n = t + s + 4
    e1, e2, e3, e4 = 0, 1, 2, 3
    f = [3 + i for i in range(1, t + 1)]
    g = [t + 3 + i for i in range(1, s + 1)]
    anchor = f[-1] if t else e1  # the column closing the -4 row
    rows: list[dict[int, int]] = [{e1: 1, e2: -1, **{c: 1 for c in f}}]
    if tag == "T5":
        rows.append({e2: 1, e3: -1, **{c: -1 for c in g}})
        rows.append({e1: -1, e2: -1, e4: 1})
    else:
        rows.append({e2: 1, e3: -1})
        rows.append({e1: -1, e2: -1, e4: 1, **{c: 1 for c in g}})
    if t:
        rows.append({e1: 1, f[0]: -1})
        for i in range(1, t):
            rows.append({f[i - 1]: 1, f[i]: -1})
    rows.append({e2: 1, e3: 1, e4: 1, anchor: 1})
    if s:
        rows.append({e3: -1, g[0]: 1} if tag == "T5" else {e4: -1, g[0]: 1})
        for i in range(1, s):
            rows.append({g[i - 1]: -1, g[i]: 1})
    return _rows_from_entries(n, rows)


def _table_t7(s: int, t: int) -> list[list[int]]:
    n = t + s + 5
    e1, e2, e3, e4, e5 = 0, 1, 2, 3, 4
    f = [4 + i for i in range(1, t + 1)]  # f_1..f_t  ->  e_6..e_{t+5}
    g = [t + 4 + i for i in range(1, s + 1)]  # g_1..g_s  ->  e_{t+6}..
    anchor = f[-1] if t else e1
    rows: list[dict[int, int]] = [
        {e1: 1, e2: 1, e3: 1, **{c: 1 for c in f}},
        {e3: -1, e4: 1},
        {e2: -1, e3: 1, e5: 1, **{c: 1 for c in g}},
        {e1: 1, e3: -1, e4: -1},
    ]
    if t:
        rows.append({e1: -1, f[0]: 1})
        for i in range(1, t):
            rows.append({f[i - 1]: -1, f[i]: 1})
    rows.append({e2: 1, e5: 1, anchor: -1})
    if s:
        rows.append({e5: -1, g[0]: 1})
        for i in range(1, s):
            rows.append({g[i - 1]: -1, g[i]: 1})
    return _rows_from_entries(n, rows)


#: Seed tables for the two generated types, with the bookkeeping triple
#: (end column, its coefficient in the first row, in the last row) used to
#: transport the table along the generating moves.
_T1_SEED_TABLE = ([[1, -1, 0], [0, 1, -1], [-1, -1, 0]], 0, 1, -1)
_T4_SEED_TABLE = (
    [[0, 1, 1, 1], [1, -1, 0, 0], [0, 1, -1, 0], [-1, -1, 0, 1]],
    3,
    1,
    1,
)


def _table_generated(seed_table, history: Sequence[str]) -> list[list[int]]:
    rows, ecol, alpha, beta = seed_table
    rows = [row[:] for row in rows]
    for op in history:
        m = len(rows)
        for row in rows:
            row.append(0)
        newcol = m
        if op == "a":
            first = [0] * (m + 1)
            first[ecol] = -alpha
            first[newcol] = 1
            last = rows[-1]
            last[newcol] = alpha * beta
            rows = [first] + rows[:-1] + [last]
            ecol, alpha, beta = newcol, 1, alpha * beta
        elif op == "b":
            rows[0][newcol] = alpha * beta
            last = [0] * (m + 1)
            last[ecol] = -beta
            last[newcol] = 1
            rows = [rows[0]] + rows[1:-1] + [rows[-1], last]
            ecol, alpha, beta = newcol, alpha * beta, 1
        else:
            raise ValueError(f"unknown move {op!r}")
    return rows


def table_embedding(match: TypedString) -> LatticeEmbedding:
    """The closed-form embedding attached to a recognized string.

    The table is built for the pattern orientation; if the match was against
    the reversed string, the rows are reversed so that the result embeds the
    string exactly as given.  The result always satisfies
    :func:`verify_embedding` for the string's chain lattice.
    """
    tag = match.type_tag
    if tag in ("T2", "T3"):
        rows = _table_t2_t3(tag, match.s, match.t)
    elif tag in ("T5", "T6"):
        rows = _table_t5_t6(tag, match.s, match.t)
    elif tag == "T7":
        rows = _table_t7(match.s, match.t)
    elif tag in ("T1", "T4"):
        if match.history is None:
            raise ValueError("generated-type match lacks its move history")
        seed = _T1_SEED_TABLE if tag == "T1" else _T4_SEED_TABLE
        rows = _table_generated(seed, match.history)
    else:
        raise ValueError(f"unknown string type {tag!r}")
    if match.is_reversed:
        rows = rows[::-1]
    emb = LatticeEmbedding(rows)
    form = IntersectionForm(match.coefficients)
    if not verify_embedding(form, emb):  # pragma: no cover - internal guard
        raise AssertionError(f"table for {match} fails the isometry check")
    return emb


__all__ = [
    "IntersectionForm",
    "LatticeEmbedding",
    "embeddings_equivalent",
    "verify_embedding",
    "find_embeddings",
    "embedding_exists",
    "table_embedding",
    "expansion_a",
    "expansion_b",
]
