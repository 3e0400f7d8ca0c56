"""Smith normal form over the integers, exactly.

Only the diagonal (the invariant factors) is needed here: the cokernel of an
integer matrix ``M`` is ``Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`` where ``d_1 | d_2 | ...``
are the nonzero invariant factors and ``r`` counts the zero ones.  The
implementation is the classical minimal-pivot reduction: bring the smallest
nonzero entry to the pivot position, clear its row and column by Euclidean
steps, repair divisibility of the remaining block, and recurse.  All
arithmetic is exact (Python integers), so there are no overflow or precision
concerns; matrices here are small (a chain plus one border row/column).
"""

from __future__ import annotations

from typing import Sequence


def _validate(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    M = [[int(x) for x in row] for row in matrix]
    if M:
        width = len(M[0])
        if any(len(row) != width for row in M):
            raise ValueError("matrix rows have unequal lengths")
    return M


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors of ``matrix``, padded with zeros to min(rows, cols).

    The returned tuple ``(d_1, ..., d_k)`` satisfies ``d_i >= 0`` and
    ``d_i | d_{i+1}`` (with the convention that everything divides 0 and 0
    divides only 0); it is the diagonal of the Smith normal form.
    """
    M = _validate(matrix)
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    size = min(nrows, ncols)
    s = 0
    while s < size:
        # Locate the entry of smallest absolute value in the trailing block.
        piv = None
        best = None
        for i in range(s, nrows):
            for j in range(s, ncols):
                v = abs(M[i][j])
                if v and (best is None or v < best):
                    piv, best = (i, j), v
        if piv is None:
            break
        pi, pj = piv
        M[s], M[pi] = M[pi], M[s]
        for row in M:
            row[s], row[pj] = row[pj], row[s]

        while True:
            # Clear column s by Euclidean row operations.
            dirty = False
            for i in range(s + 1, nrows):
                if M[i][s] == 0:
                    continue
                q = M[i][s] // M[s][s]
                if q:
                    M[i] = [x - q * y for x, y in zip(M[i], M[s])]
                if M[i][s]:
                    # Remainder is strictly smaller: promote it to pivot.
                    M[s], M[i] = M[i], M[s]
                    dirty = True
            if dirty:
                continue
            # Clear row s by Euclidean column operations.
            for j in range(s + 1, ncols):
                if M[s][j] == 0:
                    continue
                q = M[s][j] // M[s][s]
                if q:
                    for row in M:
                        row[j] -= q * row[s]
                if M[s][j]:
                    for row in M:
                        row[s], row[j] = row[j], row[s]
                    dirty = True
                    break
            if dirty:
                continue
            # Pivot divides its row and column; enforce divisibility of the
            # remaining block (required for the d_i | d_{i+1} chain).
            fixed = True
            for i in range(s + 1, nrows):
                if any(M[i][j] % M[s][s] for j in range(s + 1, ncols)):
                    M[s] = [x + y for x, y in zip(M[s], M[i])]
                    fixed = False
                    break
            if fixed:
                break
        if M[s][s] < 0:
            M[s] = [-x for x in M[s]]
        s += 1
    return tuple(abs(M[i][i]) for i in range(s)) + (0,) * (size - s)


def cokernel_invariants(matrix: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """(free rank, nontrivial torsion orders) of coker(M) for square-ish M.

    For an ``n x m`` matrix the cokernel is a quotient of ``Z^n``; its free
    rank is ``n - (number of nonzero invariant factors)`` and the torsion
    coefficients are the invariant factors larger than 1.
    """
    M = _validate(matrix)
    diag = smith_diagonal(M)
    nonzero = [d for d in diag if d != 0]
    free_rank = len(M) - len(nonzero)
    torsion = tuple(d for d in nonzero if d != 1)
    return free_rank, torsion
