"""Self-verification: named golden checks and the seven-part acceptance suite.

Every worked example the library guarantees is frozen here as a named golden
check, and the headline desk-scale verifications (identity sweeps, the
order-by-order equivalence of family membership / string recognition /
lattice embeddability, embedding uniqueness, the dual-knot homology sweep,
keystone reproduction, value goldens, and a negative control) are
implemented as self-timing criterion functions with their runtime budgets
enforced.  ``run_all`` drives both; the ``verify all`` CLI subcommand is a
thin wrapper around it.
"""

from __future__ import annotations

import contextlib
import io
import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Callable, Optional, Sequence

from . import families, keystone, lattice, lens, surgery
from .cfrac import (
    ConvergentTable,
    ExtendedRational,
    complementary_string,
    eval_cf,
    expand_cf,
    palindrome_terms,
    palindrome_value,
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check (golden example or acceptance criterion)."""

    name: str
    passed: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.name} ({self.elapsed:.3f}s) {self.detail}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "elapsed": round(self.elapsed, 6),
        }


def _run(name: str, fn: Callable[[], str]) -> CheckResult:
    start = time.perf_counter()
    try:
        detail = fn()
        passed = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        passed = False
    except Exception as exc:  # a crash is a failure, never an abort
        detail = f"{type(exc).__name__}: {exc}"
        passed = False
    return CheckResult(name, passed, detail, time.perf_counter() - start)


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


# ---------------------------------------------------------------------------
# Golden checks.  One registered function per frozen worked example.
# ---------------------------------------------------------------------------

_GOLDENS: list[tuple[str, Callable[[], str]]] = []


def _golden(name: str):
    def register(fn: Callable[[], str]) -> Callable[[], str]:
        _GOLDENS.append((name, fn))
        return fn

    return register


# -- continued fractions ----------------------------------------------------


@_golden("cf-eval-odd-palindrome")
def _g_cf_eval_odd_palindrome() -> str:
    value = eval_cf((2, 2, 1, -2, -2))
    _expect(value == ExtendedRational(9, 7), f"expected 9/7, got {value}")
    return "[2,2,1,-2,-2] evaluates to 9/7"


@_golden("cf-eval-zero-term")
def _g_cf_eval_zero_term() -> str:
    value = eval_cf((0,))
    _expect(value == ExtendedRational(0, 1), f"expected 0, got {value}")
    _expect((value.numerator, value.denominator) == (0, 1), "not stored as 0/1")
    return "[0] evaluates to 0/1"


@_golden("cf-eval-wide-palindrome")
def _g_cf_eval_wide_palindrome() -> str:
    value = eval_cf((-1, 2, 2, 2, 2, -1))
    _expect(value == ExtendedRational(-16, 9), f"expected -16/9, got {value}")
    return "[-1,2,2,2,2,-1] evaluates to -16/9"


@_golden("cf-convergents-two-step")
def _g_cf_convergents_two_step() -> str:
    table = ConvergentTable((2, 2))
    got = (table.P(1), table.Q(1), table.P(2), table.Q(2))
    _expect(got == (2, 1, 3, 2), f"expected (2,1,3,2), got {got}")
    return "[2,2] convergents (P1,Q1)=(2,1), (P2,Q2)=(3,2)"


@_golden("cf-convergents-three-step")
def _g_cf_convergents_three_step() -> str:
    table = ConvergentTable((3, 2, 3))
    _expect((table.P(3), table.Q(3)) == (12, 5), "expected (P3,Q3)=(12,5)")
    _expect(table.value() == ExtendedRational(12, 5), "table value != 12/5")
    _expect(eval_cf((3, 2, 3)) == ExtendedRational(12, 5), "eval != 12/5")
    return "[3,2,3] convergent (12,5) agrees with direct evaluation"


@_golden("cf-determinant-identity-sample")
def _g_cf_determinant_identity_sample() -> str:
    terms = (2, 3, 2, 3, 3)
    table = ConvergentTable(terms)
    for i in range(1, len(terms) + 1):
        det = table.P(i - 1) * table.Q(i) - table.P(i) * table.Q(i - 1)
        _expect(det == 1, f"determinant at step {i} is {det}")
    return "P(i-1)Q(i) - P(i)Q(i-1) = 1 along [2,3,2,3,3]"


@_golden("cf-expand-integer")
def _g_cf_expand_integer() -> str:
    got = expand_cf(ExtendedRational(3, 1))
    _expect(got == (3,), f"expected (3,), got {got}")
    return "3/1 expands to [3]"


@_golden("cf-expand-nine-sevenths")
def _g_cf_expand_nine_sevenths() -> str:
    got = expand_cf(ExtendedRational(9, 7))
    _expect(got == (2, 2, 2, 3), f"expected (2,2,2,3), got {got}")
    _expect(eval_cf(got) == ExtendedRational(9, 7), "round-trip failed")
    return "9/7 expands to [2,2,2,3]"


@_golden("cf-expand-49-31")
def _g_cf_expand_49_31() -> str:
    got = expand_cf(ExtendedRational(49, 31))
    _expect(got == (2, 3, 2, 3, 3), f"expected (2,3,2,3,3), got {got}")
    return "49/31 expands to [2,3,2,3,3]"


@_golden("cf-palindrome-closed-form")
def _g_cf_palindrome_closed_form() -> str:
    value = palindrome_value((2, 2), 1)
    _expect(value == ExtendedRational(9, 7), f"expected 9/7, got {value}")
    _expect(eval_cf(palindrome_terms((2, 2), 1)) == value, "formula != evaluation")
    return "palindrome b=(2,2), c=1 gives 9/7 both ways"


@_golden("cf-palindrome-empty-prefix")
def _g_cf_palindrome_empty_prefix() -> str:
    value = palindrome_value((), 4)
    _expect(value == ExtendedRational(4, 1), f"expected 4, got {value}")
    return "palindrome b=(), c=4 gives 4/1"


@_golden("cf-palindrome-single-prefix")
def _g_cf_palindrome_single_prefix() -> str:
    value = palindrome_value((2,), 4)
    _expect(value == ExtendedRational(16, 9), f"expected 16/9, got {value}")
    _expect(eval_cf((2, 4, -2)) == value, "eval of [2,4,-2] disagrees")
    return "palindrome b=(2), c=4 gives 16/9"


@_golden("cf-complement-self-dual")
def _g_cf_complement_self_dual() -> str:
    got = complementary_string((2,))
    _expect(got == (2,), f"expected (2,), got {got}")
    return "[2] is its own complement (1/2 + 1/2 = 1)"


@_golden("cf-complement-chain-to-single")
def _g_cf_complement_chain_to_single() -> str:
    got = complementary_string((2, 2, 2))
    _expect(got == (4,), f"expected (4,), got {got}")
    return "[2,2,2] complements to [4]"


@_golden("cf-complement-mixed")
def _g_cf_complement_mixed() -> str:
    got = complementary_string((3, 2))
    _expect(got == (2, 3), f"expected (2,3), got {got}")
    _expect(complementary_string((2, 3)) == (3, 2), "involution failed")
    return "[3,2] complements to [2,3] and back"


# -- lens spaces ------------------------------------------------------------


@_golden("lens-normalize-negative-residue")
def _g_lens_normalize_negative_residue() -> str:
    got = lens.normalize_lens(16, -9)
    _expect(got == lens.OrientedLensSpace(16, 7), f"expected L(16,7), got {got}")
    return "(16,-9) normalizes to L(16,7)"


@_golden("lens-normalize-negative-order")
def _g_lens_normalize_negative_order() -> str:
    got = lens.normalize_lens(-16, 9)
    _expect(got == lens.OrientedLensSpace(16, 7), f"expected L(16,7), got {got}")
    return "(-16,9) normalizes to L(16,7)"


@_golden("lens-normalize-s1xs2")
def _g_lens_normalize_s1xs2() -> str:
    got = lens.normalize_lens(0, -1)
    _expect(got == lens.OrientedLensSpace(0, 1), f"expected L(0,1), got {got}")
    _expect(got.is_s1s2, "L(0,1) not flagged as S1xS2")
    return "(0,-1) normalizes to L(0,1)"


@_golden("lens-mirror-16-9")
def _g_lens_mirror_16_9() -> str:
    got = lens.mirror(lens.OrientedLensSpace(16, 9))
    _expect(got == lens.OrientedLensSpace(16, 7), f"expected L(16,7), got {got}")
    return "mirror of L(16,9) is L(16,7)"


@_golden("lens-mirror-s1xs2")
def _g_lens_mirror_s1xs2() -> str:
    space = lens.OrientedLensSpace(0, 1)
    _expect(lens.mirror(space) == space, "L(0,1) should be its own mirror")
    return "L(0,1) is amphichiral"


@_golden("lens-mirror-49-31")
def _g_lens_mirror_49_31() -> str:
    got = lens.mirror(lens.OrientedLensSpace(49, 31))
    _expect(got == lens.OrientedLensSpace(49, 18), f"expected L(49,18), got {got}")
    return "mirror of L(49,31) is L(49,18)"


@_golden("lens-homeo-49-31-vs-30")
def _g_lens_homeo_49_31_vs_30() -> str:
    a, b = lens.OrientedLensSpace(49, 31), lens.OrientedLensSpace(49, 30)
    _expect(bool(lens.is_homeomorphic(a, b)), "unoriented homeomorphism missed")
    _expect(not lens.is_homeomorphic(a, b, oriented=True), "falsely oriented-equal")
    return "L(49,31) ~ L(49,30) unoriented only (31 = -30^-1 mod 49)"


@_golden("lens-homeo-4-1-vs-4-3")
def _g_lens_homeo_4_1_vs_4_3() -> str:
    a, b = lens.OrientedLensSpace(4, 1), lens.OrientedLensSpace(4, 3)
    _expect(bool(lens.is_homeomorphic(a, b)), "unoriented homeomorphism missed")
    _expect(not lens.is_homeomorphic(a, b, oriented=True), "falsely oriented-equal")
    return "L(4,1) ~ L(4,3) unoriented only"


@_golden("lens-homeo-reflexive")
def _g_lens_homeo_reflexive() -> str:
    a = lens.OrientedLensSpace(49, 31)
    _expect(bool(lens.is_homeomorphic(a, a)), "not reflexive (unoriented)")
    _expect(bool(lens.is_homeomorphic(a, a, oriented=True)), "not reflexive (oriented)")
    return "L(49,31) is homeomorphic to itself in both modes"


@_golden("lens-chain-string-3-2")
def _g_lens_chain_string_3_2() -> str:
    got = lens.standard_chain_string(lens.OrientedLensSpace(3, 2))
    _expect(got == (-2, -2), f"expected (-2,-2), got {got}")
    return "L(3,2) has chain framings (-2,-2) from 3/2 = [2,2]"


@_golden("lens-chain-string-49-31")
def _g_lens_chain_string_49_31() -> str:
    got = lens.standard_chain_string(lens.OrientedLensSpace(49, 31))
    _expect(got == (-2, -3, -2, -3, -3), f"expected (-2,-3,-2,-3,-3), got {got}")
    return "L(49,31) has chain framings (-2,-3,-2,-3,-3)"


@_golden("lens-chain-string-4-3")
def _g_lens_chain_string_4_3() -> str:
    got = lens.standard_chain_string(lens.OrientedLensSpace(4, 3))
    _expect(got == (-2, -2, -2), f"expected (-2,-2,-2), got {got}")
    return "L(4,3) has chain framings (-2,-2,-2) from 4/3 = [2,2,2]"


# -- families and string types ----------------------------------------------


@_golden("family-classify-9-7")
def _g_family_classify_9_7() -> str:
    witnesses = families.classify_family(lens.OrientedLensSpace(9, 7))
    wanted = families.FamilyWitness("F1", 3, 2, "oriented")
    _expect(wanted in witnesses, f"{wanted} missing from {len(witnesses)} witnesses")
    return "L(9,7) is in family 1 via q = 3*2+1, gcd(3,2)=1"


@_golden("family-classify-16-9")
def _g_family_classify_16_9() -> str:
    witnesses = families.classify_family(lens.OrientedLensSpace(16, 9))
    wanted = families.FamilyWitness("F2", 4, 2, "oriented")
    _expect(wanted in witnesses, f"{wanted} missing from {len(witnesses)} witnesses")
    return "L(16,9) is in family 2 via q = 4*2+1, gcd(4,2)=2"


@_golden("family-classify-25-7")
def _g_family_classify_25_7() -> str:
    witnesses = families.classify_family(lens.OrientedLensSpace(25, 7))
    wanted = families.FamilyWitness("F3", -5, 3, "oriented")
    _expect(wanted in witnesses, f"{wanted} missing from {len(witnesses)} witnesses")
    return "L(25,7) is in family 3 via q = 3*(-5-1) mod 25"


@_golden("family-classify-nonsquare-empty")
def _g_family_classify_nonsquare_empty() -> str:
    witnesses = families.classify_family(lens.OrientedLensSpace(7, 1))
    _expect(witnesses == (), f"expected no witnesses, got {witnesses}")
    return "non-square order 7 yields no family witnesses"


@_golden("string-recognize-t1-seed")
def _g_string_recognize_t1_seed() -> str:
    matches = families.recognize_string_type((-2, -2, -2))
    hits = [m for m in matches if m.type_tag == "T1" and m.b == (2,) and m.c == (2,)]
    _expect(bool(hits), f"T1[b=2;c=2] missing from {[str(m) for m in matches]}")
    return "(-2,-2,-2) recognized as T1 with b=(2), c=(2)"


@_golden("string-recognize-t4-seed")
def _g_string_recognize_t4_seed() -> str:
    matches = families.recognize_string_type((-3, -2, -2, -3))
    hits = [m for m in matches if m.type_tag == "T4" and m.b == (2,) and m.c == (2,)]
    _expect(bool(hits), f"T4[b=2;c=2] missing from {[str(m) for m in matches]}")
    return "(-3,-2,-2,-3) recognized as T4 with b=(2), c=(2)"


@_golden("string-recognize-t3-rank5")
def _g_string_recognize_t3_rank5() -> str:
    matches = families.recognize_string_type((-2, -3, -2, -3, -3))
    hits = [m for m in matches if m.type_tag == "T3" and (m.s, m.t) == (0, 1)]
    _expect(bool(hits), f"T3[s=0,t=1] missing from {[str(m) for m in matches]}")
    return "(-2,-3,-2,-3,-3) recognized as T3 with t=1, s=0"


@_golden("string-expansion-a-seed")
def _g_string_expansion_a_seed() -> str:
    got = families.expansion_a((-2, -2, -2))
    _expect(got == (-2, -2, -2, -3), f"expected (-2,-2,-2,-3), got {got}")
    return "move (a) on (-2,-2,-2) gives (-2,-2,-2,-3)"


@_golden("string-expansion-b-seed")
def _g_string_expansion_b_seed() -> str:
    got = families.expansion_b((-2, -2, -2))
    _expect(got == (-3, -2, -2, -2), f"expected (-3,-2,-2,-2), got {got}")
    return "move (b) on (-2,-2,-2) gives (-3,-2,-2,-2)"


@_golden("string-expansion-ab-chain")
def _g_string_expansion_ab_chain() -> str:
    after_a = families.expansion_a((-3, -2, -2, -3))
    _expect(after_a == (-2, -3, -2, -2, -4), f"(a) gave {after_a}")
    after_ab = families.expansion_b(after_a)
    _expect(after_ab == (-3, -3, -2, -2, -4, -2), f"(b) gave {after_ab}")
    return "moves (a) then (b) on (-3,-2,-2,-3) reach (-3,-3,-2,-2,-4,-2)"


@_golden("string-generate-t1-rank4")
def _g_string_generate_t1_rank4() -> str:
    got = {m.coefficients for m in families.generate_type_strings("T1", 4)}
    wanted = {(-2, -2, -2), (-2, -2, -2, -3), (-3, -2, -2, -2)}
    _expect(got == wanted, f"expected {sorted(wanted)}, got {sorted(got)}")
    return "T1 closure up to rank 4 is the seed plus its two expansions"


@_golden("string-generate-t2-includes-quad")
def _g_string_generate_t2_includes_quad() -> str:
    hits = [
        m
        for m in families.generate_type_strings("T2", 6)
        if m.coefficients == (-3, -2, -2, -3) and (m.s, m.t) == (0, 0)
    ]
    _expect(bool(hits), "T2 at s=t=0 missing from rank <= 6 sweep")
    return "T2 sweep to rank 6 contains (-3,-2,-2,-3) at s=t=0"


@_golden("string-generate-t7-includes-rank5")
def _g_string_generate_t7_includes_rank5() -> str:
    hits = [
        m
        for m in families.generate_type_strings("T7", 7)
        if m.coefficients == (-3, -2, -3, -3, -3) and (m.s, m.t) == (0, 0)
    ]
    _expect(bool(hits), "T7 at s=t=0 missing from rank <= 7 sweep")
    return "T7 sweep to rank 7 contains (-3,-2,-3,-3,-3) at s=t=0"


# -- lattice ----------------------------------------------------------------


def _typed(coefficients: Sequence[int], tag: str) -> families.TypedString:
    matches = [
        m
        for m in families.recognize_string_type(tuple(coefficients))
        if m.type_tag == tag
    ]
    _expect(bool(matches), f"{tuple(coefficients)} not recognized as {tag}")
    return matches[0]


@_golden("lattice-form-chain-of-minus2")
def _g_lattice_form_chain_of_minus2() -> str:
    form = lattice.IntersectionForm((-2, -2, -2))
    wanted = ((-2, 1, 0), (1, -2, 1), (0, 1, -2))
    _expect(form.matrix == wanted, f"got {form.matrix}")
    return "(-2,-2,-2) builds the rank-3 tridiagonal pairing"


@_golden("lattice-form-rank2")
def _g_lattice_form_rank2() -> str:
    form = lattice.IntersectionForm((-2, -3))
    _expect(form.matrix == ((-2, 1), (1, -3)), f"got {form.matrix}")
    return "(-2,-3) builds [[-2,1],[1,-3]]"


@_golden("lattice-form-rank5-tridiagonal")
def _g_lattice_form_rank5_tridiagonal() -> str:
    coefficients = (-2, -3, -2, -3, -3)
    form = lattice.IntersectionForm(coefficients)
    for i in range(5):
        for j in range(5):
            wanted = coefficients[i] if i == j else (1 if abs(i - j) == 1 else 0)
            _expect(form.matrix[i][j] == wanted, f"entry ({i},{j}) wrong")
    return "(-2,-3,-2,-3,-3) builds the expected 5x5 tridiagonal matrix"


@_golden("lattice-embed-seed-unique-class")
def _g_lattice_embed_seed_unique_class() -> str:
    classes = lattice.find_embeddings(lattice.IntersectionForm((-2, -2, -2)))
    _expect(len(classes) == 1, f"expected 1 class, got {len(classes)}")
    table = lattice.LatticeEmbedding(((1, -1, 0), (0, 1, -1), (-1, -1, 0)))
    _expect(
        lattice.embeddings_equivalent(classes[0], table),
        "search class differs from e1-e2, e2-e3, -e1-e2",
    )
    return "(-2,-2,-2) embeds uniquely, matching the frozen rank-3 table"


@_golden("lattice-embed-rank2-obstructed")
def _g_lattice_embed_rank2_obstructed() -> str:
    classes = lattice.find_embeddings(lattice.IntersectionForm((-2, -3)))
    _expect(classes == (), f"expected no embedding, got {len(classes)}")
    return "(-2,-3) admits no rank-2 embedding (3 is not a sum of two squares)"


@_golden("lattice-embed-rank5-unique-class")
def _g_lattice_embed_rank5_unique_class() -> str:
    classes = lattice.find_embeddings(lattice.IntersectionForm((-2, -3, -2, -3, -3)))
    _expect(len(classes) == 1, f"expected 1 class, got {len(classes)}")
    table = lattice.table_embedding(_typed((-2, -3, -2, -3, -3), "T3"))
    _expect(
        lattice.embeddings_equivalent(classes[0], table),
        "search class differs from the T3 table",
    )
    return "(-2,-3,-2,-3,-3) embeds uniquely, matching the T3 table at t=1, s=0"


@_golden("lattice-verify-t2-quad-table")
def _g_lattice_verify_t2_quad_table() -> str:
    table = lattice.table_embedding(_typed((-3, -2, -2, -3), "T2"))
    form = lattice.IntersectionForm((-3, -2, -2, -3))
    _expect(lattice.verify_embedding(form, table), "T2 table fails Gram check")
    return "T2 table at s=t=0 satisfies the Gram identity"


@_golden("lattice-verify-corrupted-sign")
def _g_lattice_verify_corrupted_sign() -> str:
    rows = [[1, -1, 0], [0, 1, -1], [-1, -1, 0]]
    rows[0][0] = -rows[0][0]
    bad = lattice.LatticeEmbedding(rows)
    form = lattice.IntersectionForm((-2, -2, -2))
    _expect(not lattice.verify_embedding(form, bad), "corrupted table passed")
    return "flipping one sign in the rank-3 table breaks the Gram identity"


@_golden("lattice-verify-t4-seed-table")
def _g_lattice_verify_t4_seed_table() -> str:
    table = lattice.LatticeEmbedding(
        ((0, 1, 1, 1), (1, -1, 0, 0), (0, 1, -1, 0), (-1, -1, 0, 1))
    )
    form = lattice.IntersectionForm((-3, -2, -2, -3))
    _expect(lattice.verify_embedding(form, table), "T4 seed table fails Gram check")
    return "T4 seed table (e2+e3+e4, e1-e2, e2-e3, -e1-e2+e4) verifies"


@_golden("lattice-table-t1-seed")
def _g_lattice_table_t1_seed() -> str:
    table = lattice.table_embedding(_typed((-2, -2, -2), "T1"))
    wanted = ((1, -1, 0), (0, 1, -1), (-1, -1, 0))
    _expect(table.rows == wanted, f"got {table.rows}")
    return "T1 seed table is e1-e2, e2-e3, -e1-e2"


@_golden("lattice-table-t1-first-expansion")
def _g_lattice_table_t1_first_expansion() -> str:
    table = lattice.table_embedding(_typed((-2, -2, -2, -3), "T1"))
    wanted = ((-1, 0, 0, 1), (1, -1, 0, 0), (0, 1, -1, 0), (-1, -1, 0, -1))
    _expect(table.rows == wanted, f"got {table.rows}")
    return "move (a) transports the seed table to -e1+e4, v1, v2, v3-e4"


@_golden("lattice-table-t3-rank5-verifies")
def _g_lattice_table_t3_rank5_verifies() -> str:
    table = lattice.table_embedding(_typed((-2, -3, -2, -3, -3), "T3"))
    form = lattice.IntersectionForm((-2, -3, -2, -3, -3))
    _expect(lattice.verify_embedding(form, table), "T3 rank-5 table fails Gram check")
    return "T3 table at t=1, s=0 satisfies the Gram identity"


@_golden("lattice-equivalence-search-vs-table")
def _g_lattice_equivalence_search_vs_table() -> str:
    classes = lattice.find_embeddings(lattice.IntersectionForm((-2, -2, -2)))
    table = lattice.table_embedding(_typed((-2, -2, -2), "T1"))
    _expect(lattice.embeddings_equivalent(classes[0], table), "not equivalent")
    return "search output and frozen table agree up to basis symmetry"


@_golden("lattice-equivalence-transformed-copy")
def _g_lattice_equivalence_transformed_copy() -> str:
    base = lattice.LatticeEmbedding(((1, -1, 0), (0, 1, -1), (-1, -1, 0)))
    twisted = lattice.LatticeEmbedding(
        tuple(
            tuple(-((-row[2], -row[1], row[0])[j]) for j in range(3))
            for row in base.rows
        )
    )
    _expect(
        lattice.embeddings_equivalent(base, twisted),
        "column reversal + sign flips changed the class",
    )
    return "column permutation, column signs and global sign preserve the class"


@_golden("lattice-equivalence-distinct-strings")
def _g_lattice_equivalence_distinct_strings() -> str:
    quad = lattice.table_embedding(_typed((-3, -2, -2, -3), "T2"))
    t2 = lattice.table_embedding(_typed((-3, -3, -2, -3, -2), "T2"))
    t3 = lattice.table_embedding(_typed((-4, -2, -2, -3, -2), "T3"))
    _expect(not lattice.embeddings_equivalent(quad, t3), "rank mismatch not detected")
    _expect(not lattice.embeddings_equivalent(t2, t3), "distinct Gram matrices equated")
    return "tables of different strings are never equivalent"


# -- keystones --------------------------------------------------------------


def _quotient_string(n: int) -> tuple[int, ...]:
    """The one-parameter rank-(n+3) string (-2, -(n+1), -2, -3, -3, -2...)."""
    _expect(n >= 2, f"string family starts at n=2, got {n}")
    return (-2, -(n + 1), -2, -3, -3) + (-2,) * (n - 2)


def _quotient_table(n: int) -> lattice.LatticeEmbedding:
    return lattice.table_embedding(_typed(_quotient_string(n), "T3"))


_SEED_TABLE = lattice.LatticeEmbedding(((1, -1, 0), (0, 1, -1), (-1, -1, 0)))


@_golden("keystone-support-seed")
def _g_keystone_support_seed() -> str:
    got = keystone.two_support_basis(_SEED_TABLE)
    _expect(got == (1, 2, 3), f"expected (1,2,3), got {got}")
    return "all three columns touch a square -2 row of the seed table"


@_golden("keystone-support-rank7-full")
def _g_keystone_support_rank7_full() -> str:
    got = keystone.two_support_basis(_quotient_table(4))
    _expect(got == (1, 2, 3, 4, 5, 6, 7), f"expected all of e1..e7, got {got}")
    return "the rank-7 table at n=4 has full two-support basis"


@_golden("keystone-support-t4-seed")
def _g_keystone_support_t4_seed() -> str:
    table = lattice.LatticeEmbedding(
        ((0, 1, 1, 1), (1, -1, 0, 0), (0, 1, -1, 0), (-1, -1, 0, 1))
    )
    got = keystone.two_support_basis(table)
    _expect(got == (1, 2, 3), f"expected (1,2,3), got {got}")
    return "only e1,e2,e3 touch the square -2 rows of the T4 seed table"


@_golden("keystone-filtration-seed-e1")
def _g_keystone_filtration_seed_e1() -> str:
    witness = keystone.is_keystone(_SEED_TABLE, 1)
    _expect(witness is not None, "e1 should be a keystone of the seed table")
    _expect(witness.removal == (1, 2, 3), f"removal {witness.removal}")
    _expect(witness.certifiers == (None, 1, 2), f"certifiers {witness.certifiers}")
    return "e1 filtration removes e1, then e2 via v1, then e3 via v2"


@_golden("keystone-rank7-last-column-blocked")
def _g_keystone_rank7_last_column_blocked() -> str:
    _expect(keystone.is_keystone(_quotient_table(4), 7) is None, "e7 wrongly keystone")
    return "e7 admits no filtration in the rank-7 table at n=4"


@_golden("keystone-rank7-e5")
def _g_keystone_rank7_e5() -> str:
    _expect(keystone.is_keystone(_quotient_table(4), 5) is not None, "e5 not keystone")
    return "e5 admits a filtration in the rank-7 table at n=4"


@_golden("keystone-set-rank7")
def _g_keystone_set_rank7() -> str:
    report = keystone.keystone_set(_quotient_table(4))
    _expect(report.keystones == (1, 2, 3, 5), f"got {report.keystones}")
    return "keystones of the rank-7 table at n=4 are e1, e2, e3, e5"


@_golden("keystone-set-seed")
def _g_keystone_set_seed() -> str:
    report = keystone.keystone_set(_SEED_TABLE)
    _expect(report.keystones == (1, 2, 3), f"got {report.keystones}")
    return "all of e1, e2, e3 are keystones of the seed table"


@_golden("keystone-suggest-seed-e1")
def _g_keystone_suggest_seed_e1() -> str:
    knot = keystone.suggested_knot(_SEED_TABLE, 1)
    _expect(knot.epsilon == (-1, 0, 1), f"epsilon {knot.epsilon}")
    _expect(knot.framing == -1, f"framing {knot.framing}")
    _expect(knot.coefficients == (-2, -2, -2), f"chain {knot.coefficients}")
    return "keystone e1 of the seed table links the chain by (-1,0,1)"


@_golden("keystone-suggest-rank5-e1")
def _g_keystone_suggest_rank5_e1() -> str:
    knot = keystone.suggested_knot(_quotient_table(2), 1)
    _expect(knot.epsilon == (0, 0, -1, 0, 1), f"epsilon {knot.epsilon}")
    return "keystone e1 of the rank-5 table links components 3 and 5"


@_golden("keystone-slide-pairs-rank5")
def _g_keystone_slide_pairs_rank5() -> str:
    return _check_slide_pairs(2)


@_golden("keystone-slide-pairs-rank6")
def _g_keystone_slide_pairs_rank6() -> str:
    return _check_slide_pairs(3)


def _check_slide_pairs(n: int) -> str:
    coefficients = _quotient_string(n)
    table = _quotient_table(n)
    report = keystone.keystone_set(table)
    _expect(report.keystones == (1, 2, 3, 5), f"keystones {report.keystones}")
    knots = {c: keystone.suggested_knot(table, c) for c in report.keystones}
    for first, second in ((1, 2), (3, 5)):
        _expect(
            knots[first].epsilon != knots[second].epsilon,
            f"e{first} and e{second} give the same record",
        )
        move = keystone.slide_related(
            coefficients, knots[first].epsilon, knots[second].epsilon
        )
        _expect(move is not None, f"e{first} and e{second} not slide-related")
    return f"n={n}: e1/e2 and e3/e5 give distinct, slide-related knots"


# -- surgery and homology ---------------------------------------------------


@_golden("homology-meridians-rank2")
def _g_homology_meridians_rank2() -> str:
    pres = surgery.meridian_classes((-2, -2))
    _expect(pres.order == 3, f"order {pres.order}")
    _expect(pres.meridians == (1, 2), f"meridians {pres.meridians}")
    return "chain (-2,-2) has order 3 with second meridian 2*mu1"


@_golden("homology-meridians-49-31")
def _g_homology_meridians_49_31() -> str:
    pres = surgery.meridian_classes((2, -2, -2, -3, -2, 1))
    _expect(pres.order == 49, f"order {pres.order}")
    _expect(pres.forward_P[1:6] == (-2, -5, -8, -19, -30), f"P {pres.forward_P}")
    _expect(pres.meridians == (1, 47, 44, 41, 30, 19), f"meridians {pres.meridians}")
    _expect(pres.space == lens.OrientedLensSpace(49, 31), f"space {pres.space}")
    _expect((pres.q_residue, pres.q_inverse) == (31, 19), "q or q^-1 wrong")
    _expect(pres.q_residue * pres.q_inverse % 49 == 1, "q * q^-1 != 1 mod 49")
    return "mixed-sign chain presents L(49,31) with q^-1 = 19"


@_golden("homology-meridians-degenerate")
def _g_homology_meridians_degenerate() -> str:
    pres = surgery.meridian_classes((0,))
    _expect(pres.degenerate and pres.order == 0, "0-framed unknot not degenerate")
    return "0-framed unknot has infinite first homology"


@_golden("homology-class-bg-rank5")
def _g_homology_class_bg_rank5() -> str:
    pres = surgery.meridian_classes((-2, -2, -1, 2, 2))
    _expect(pres.space == lens.OrientedLensSpace(9, 7), f"space {pres.space}")
    cls = surgery.knot_class(pres, (0, 0, -1, 0, 0))
    _expect(cls.mu1 == 6, f"-mu3 is {cls.mu1}, expected -3 = 6 mod 9")
    _expect(cls.first_orbit() == (3, 6), f"orbit {cls.first_orbit()}")
    return "-mu3 on the palindromic chain is -m = -3 in L(9,7)"


@_golden("homology-class-fiber-rank5")
def _g_homology_class_fiber_rank5() -> str:
    pres = surgery.meridian_classes((-2, -2, -1, 2, 2))
    cls = surgery.knot_class(pres, (1, 0, 0, 0, -1))
    _expect(cls.mu1 == 6, f"mu1-mu5 is {cls.mu1}, expected 6 = dm mod 9")
    _expect(cls.first_orbit() == (3, 6), f"orbit {cls.first_orbit()}")
    return "mu1-mu5 on the palindromic chain is dm = 6 in L(9,7)"


@_golden("homology-class-sporadic-49")
def _g_homology_class_sporadic_49() -> str:
    pres = surgery.meridian_classes((2, -2, -2, -3, -2, 1))
    cls = surgery.knot_class(pres, (0, 1, 0, 0, 0, -1))
    _expect(cls.mu1 == 28, f"mu1 basis {cls.mu1}, expected 4m = 28")
    _expect(cls.mun == 35, f"mun basis {cls.mun}, expected -2m = 35 mod 49")
    return "mu2-mu6 is 4m in the mu1 basis and -2m in the mu6 basis (m=7)"


@_golden("homology-dual-bgiii-at-0-1")
def _g_homology_dual_bgiii_at_0_1() -> str:
    record = surgery.dual_knot_record("bgiii", s=0, t=1)
    _expect(record.space == lens.OrientedLensSpace(49, 31), f"space {record.space}")
    _expect(record.m == 7, f"m {record.m}")
    _expect((record.computed.mu1, record.computed.mun) == (42, 28), "class wrong")
    _expect(record.match, "computed class disagrees with the closed form")
    return "bgiii at s=0, t=1 lands in L(49,31) with class -m = 42, dm = 28"


@_golden("homology-dual-bgii-single")
def _g_homology_dual_bgii_single() -> str:
    record = surgery.dual_knot_record("bgii", b=(2,))
    _expect(record.space == lens.OrientedLensSpace(16, 9), f"space {record.space}")
    _expect((record.m, record.d) == (4, 2), f"(m,d) = {(record.m, record.d)}")
    _expect(record.computed.mu1 in (4, 12), f"mu1 {record.computed.mu1}")
    _expect(record.match, "computed class disagrees with the closed form")
    return "bgii at b=(2) lands in L(16,9) with class +-4 (m=4, d=2)"


@_golden("homology-dual-fiber-pair")
def _g_homology_dual_fiber_pair() -> str:
    record = surgery.dual_knot_record("gofk", b=(2, 2))
    _expect(record.space == lens.OrientedLensSpace(9, 7), f"space {record.space}")
    _expect(record.computed.mu1 in (3, 6), f"mu1 {record.computed.mu1}")
    _expect(record.match, "computed class disagrees with the closed form")
    return "gofk at b=(2,2) lands in L(9,7) with class +-dm = +-6"


@_golden("homology-s1xs2-positive")
def _g_homology_s1xs2_positive() -> str:
    cert = surgery.verify_s1s2((-2, -2, -2), (-1, 0, 1), -1)
    _expect(cert.passed, f"expected PASS, got {cert}")
    _expect(cert.diagonal == (1, 1, 1, 0), f"diagonal {cert.diagonal}")
    _expect(str(cert) == "PASS snf=1,1,1,0", f"rendered as {cert}")
    return "linking vector (-1,0,1) with framing -1 gives infinite cyclic H1"


@_golden("homology-s1xs2-empty-chain")
def _g_homology_s1xs2_empty_chain() -> str:
    cert = surgery.verify_s1s2((), (), 0)
    _expect(cert.passed and cert.diagonal == (0,), f"got {cert}")
    return "the 0-framed unknot alone already presents S1xS2"


@_golden("homology-s1xs2-negative-control")
def _g_homology_s1xs2_negative_control() -> str:
    cert = surgery.verify_s1s2((-2, -2, -2), (1, 0, 1), -1)
    _expect(not cert.passed, "corrupted linking vector passed")
    _expect(cert.diagonal == (1, 1, 1, 4), f"diagonal {cert.diagonal}")
    return "linking vector (1,0,1) leaves a cokernel of order 4"


@_golden("homology-simple-knot-16-9")
def _g_homology_simple_knot_16_9() -> str:
    decision = surgery.simple_knot_equivalent(
        surgery.SimpleKnot(16, 9, 4), surgery.SimpleKnot(16, 9, 12)
    )
    _expect(bool(decision), "K(16,9,4) and K(16,9,12) should be equivalent")
    return "K(16,9,4) ~ K(16,9,12) (classes 4 and -4 coincide)"


@_golden("homology-simple-knot-9-7-distinct")
def _g_homology_simple_knot_9_7_distinct() -> str:
    decision = surgery.simple_knot_equivalent(
        surgery.SimpleKnot(9, 7, 6), surgery.SimpleKnot(9, 7, 3)
    )
    _expect(not decision, "K(9,7,6) and K(9,7,3) wrongly equivalent")
    return "K(9,7,6) !~ K(9,7,3): q^2 = 4 is not +-1 mod 9"


@_golden("homology-simple-knot-49-31-distinct")
def _g_homology_simple_knot_49_31_distinct() -> str:
    knots = [surgery.SimpleKnot(49, 31, k) for k in (14, 7, 21)]
    for first, second in itertools.combinations(knots, 2):
        _expect(
            not surgery.simple_knot_equivalent(first, second),
            f"{first} and {second} wrongly equivalent",
        )
    return "K(49,31,k) for k in {14,7,21} are mutually inequivalent"


@_golden("surgery-torus-knot-formula")
def _g_surgery_torus_knot_formula() -> str:
    space = surgery.torus_knot_surgery(2, 1, 1)
    _expect(space == lens.OrientedLensSpace(4, 3), f"got {space}")
    other = lens.OrientedLensSpace(4, 1)
    _expect(bool(lens.is_homeomorphic(space, other)), "L(4,3) !~ L(4,1) unoriented")
    _expect(not lens.is_homeomorphic(space, other, oriented=True), "orientation lost")
    dual = surgery.SimpleKnot(4, 1, 2)
    _expect(dual.space() == other, f"dual knot lives in {dual.space()}")
    return "1-surgery on T(2,1) gives L(4,3) ~ L(4,1), dual K(4,1,2)"


@_golden("surgery-cable-formula")
def _g_surgery_cable_formula() -> str:
    space = surgery.cable_surgery(2, 1, 1)
    _expect(space == lens.OrientedLensSpace(16, 9), f"got {space}")
    dual = surgery.SimpleKnot(16, 9, 4)
    _expect(dual.space() == space, f"dual knot lives in {dual.space()}")
    return "the (2,1)-cable with + twist gives L(16,9), dual K(16,9,4)"


@_golden("surgery-unknot-formula")
def _g_surgery_unknot_formula() -> str:
    for n in range(1, 7):
        space = surgery.torus_knot_surgery(1, 0, n)
        _expect(space == lens.OrientedLensSpace(n, 1), f"n={n} gave {space}")
    return "n-surgery on the unknot gives L(n,1) for n = 1..6"


# -- command line -----------------------------------------------------------


def _run_cli(argv: Sequence[str]) -> tuple[int, str]:
    from . import cli

    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        status = cli.main(list(argv))
    return status, buffer.getvalue()


@_golden("cli-eval-wide-palindrome")
def _g_cli_eval_wide_palindrome() -> str:
    status, out = _run_cli(["cf", "eval", "--", "-1,2,2,2,2,-1"])
    _expect(status == 0, f"exit status {status}")
    _expect(out.strip() == "-16/9", f"printed {out.strip()!r}")
    return "cf eval prints -16/9 for the mixed-sign palindrome"


@_golden("cli-embed-rank5-json")
def _g_cli_embed_rank5_json() -> str:
    status, out = _run_cli(["lattice", "embed", "--", "-2,-3,-2,-3,-3", "--json"])
    _expect(status == 0, f"exit status {status}")
    records = [json.loads(line) for line in out.splitlines() if line.strip()]
    classes = [r for r in records if "rows" in r]
    _expect(len(classes) == 1, f"expected 1 embedding record, got {len(classes)}")
    _expect(classes[0]["keystones"] == [1, 2, 3, 5], f"got {classes[0]['keystones']}")
    return "lattice embed reports one class with keystones e1, e2, e3, e5"


@_golden("cli-s1xs2-check")
def _g_cli_s1xs2_check() -> str:
    status, out = _run_cli(
        ["homology", "s1s2", "--", "-2,-2,-2", "--eps", "-1,0,1", "--framing", "-1"]
    )
    _expect(status == 0, f"exit status {status}")
    _expect(out.strip() == "PASS snf=1,1,1,0", f"printed {out.strip()!r}")
    return "homology s1s2 prints PASS snf=1,1,1,0 for the seed knot"


def golden_checks() -> list[CheckResult]:
    """Run every frozen worked example and return one result per check."""
    return [_run(name, fn) for name, fn in _GOLDENS]


def golden_names() -> list[str]:
    return [name for name, _ in _GOLDENS]


# ---------------------------------------------------------------------------
# Acceptance criteria
# ---------------------------------------------------------------------------


def criterion_continued_fractions(cases: int = 10_000, seed: int = 1257) -> CheckResult:
    """Determinant, backward-shift, palindrome-sign and closed-form identities.

    Random strings with |terms| <= 5 and length <= 10; at least ``cases``
    samples of each identity; hard runtime budget of 10 seconds.
    """

    def body() -> str:
        rng = random.Random(seed)
        start = time.perf_counter()
        for _ in range(cases):
            terms = tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 10)))
            table = ConvergentTable(terms)
            for i in range(1, len(terms) + 1):
                det = table.P(i - 1) * table.Q(i) - table.P(i) * table.Q(i - 1)
                _expect(det == 1, f"determinant broke at {terms} step {i}")
                _expect(
                    table.q(i) == table.p(i - 1),
                    f"backward shift broke at {terms} step {i}",
                )
            prefix = tuple(rng.randint(-5, 5) for _ in range(rng.randint(0, 4)))
            center = rng.randint(-5, 5)
            word = palindrome_terms(prefix, center)
            mirrored = ConvergentTable(tuple(reversed(word)))
            forward = ConvergentTable(prefix)
            for i in range(1, len(prefix) + 1):
                _expect(
                    mirrored.p(i) == (-1) ** i * forward.P(i),
                    f"sign identity broke at b={prefix} step {i}",
                )
            p_k, q_k = forward.P(len(prefix)), forward.Q(len(prefix))
            closed = ExtendedRational(center * p_k * p_k, center * p_k * q_k + 1)
            _expect(
                eval_cf(word) == closed,
                f"closed form broke at b={prefix} c={center}",
            )
            _expect(
                palindrome_value(prefix, center) == closed,
                f"palindrome_value broke at b={prefix} c={center}",
            )
        elapsed = time.perf_counter() - start
        _expect(elapsed < 10.0, f"budget exceeded: {elapsed:.1f}s >= 10s")
        return f"{cases} random strings and palindromes, all identities exact"

    return _run("criterion-1-continued-fractions", body)


def _residue_orbit(p: int, q: int) -> set[int]:
    inverse = pow(q, -1, p)
    return {q, inverse, p - q, p - inverse}


def _sweep_chunk(orders: Sequence[int]) -> tuple[int, int, list[str]]:
    """Equivalence data for a block of orders: (classes, members, mismatches).

    For each unoriented class the three desk-scale predicates are compared:
    membership in the surgery families, recognition of some standard string
    of the four defining residues, and lattice embeddability of all four
    standard strings (both orientations of a bounding space must embed).
    Any recognized string must itself embed.
    """
    checked = 0
    members = 0
    bad: list[str] = []
    for p in orders:
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            orbit = _residue_orbit(p, q)
            if q != min(orbit):
                continue
            checked += 1
            is_member = families.is_family_member(lens.OrientedLensSpace(p, q))
            strings = {
                lens.standard_chain_string(lens.OrientedLensSpace(p, r))
                for r in orbit
            }
            recognized = {
                s for s in strings if families.recognize_string_type(s)
            }
            embeds = {
                s: lattice.embedding_exists(lattice.IntersectionForm(s))
                for s in strings
            }
            for s in recognized:
                if not embeds[s]:
                    bad.append(f"L({p},{q}): recognized string {s} does not embed")
            all_embed = all(embeds.values())
            if not (is_member == bool(recognized) == all_embed):
                bad.append(
                    f"L({p},{q}): member={is_member} "
                    f"recognized={bool(recognized)} embeds={all_embed}"
                )
            members += is_member
    return checked, members, bad


def criterion_equivalence_sweep(
    max_order: int = 300, jobs: Optional[int] = None
) -> CheckResult:
    """Families == recognized strings == embeddable lattices, order by order.

    Sweeps every lens space with 2 <= p <= ``max_order`` (one representative
    per unoriented class); requires zero discrepancies within a 10-minute
    budget.  ``jobs`` switches on a process pool; output is deterministic
    either way.
    """

    def body() -> str:
        start = time.perf_counter()
        orders = list(range(2, max_order + 1))
        if jobs is None or jobs <= 1 or not orders:
            chunks = [_sweep_chunk(orders)]
        else:
            step = max(1, len(orders) // (jobs * 4))
            blocks = [orders[i : i + step] for i in range(0, len(orders), step)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunks = list(pool.map(_sweep_chunk, blocks))
        checked = sum(c for c, _, _ in chunks)
        members = sum(m for _, m, _ in chunks)
        bad = [line for _, _, lines in chunks for line in lines]
        elapsed = time.perf_counter() - start
        _expect(not bad, f"{len(bad)} discrepancies, first: {bad[0] if bad else ''}")
        _expect(elapsed < 600.0, f"budget exceeded: {elapsed:.1f}s >= 600s")
        return (
            f"orders 2..{max_order}: {checked} classes, {members} members, "
            "all three predicates agree"
        )

    return _run("criterion-2-family-equivalence-sweep", body)


def _generated_strings(max_rank: int = 9) -> dict[tuple[int, ...], list]:
    """Every generated string of every type up to ``max_rank``, with matches."""
    table: dict[tuple[int, ...], list] = {}
    for tag in families.TYPE_TAGS:
        for match in families.generate_type_strings(tag, max_rank):
            table.setdefault(match.coefficients, []).append(match)
    return table


def criterion_embedding_uniqueness() -> CheckResult:
    """Each generated string of rank <= 9 embeds in exactly one way.

    The single class must be equivalent to the frozen table and use only
    entries in {-1, 0, 1}.  No runtime budget; zero exceptions allowed.
    """

    def body() -> str:
        strings = _generated_strings()
        checked = 0
        for coefficients, matches in sorted(strings.items()):
            classes = lattice.find_embeddings(lattice.IntersectionForm(coefficients))
            _expect(
                len(classes) == 1,
                f"{coefficients}: {len(classes)} classes instead of one",
            )
            flat = [x for row in classes[0].rows for x in row]
            _expect(
                all(abs(x) <= 1 for x in flat),
                f"{coefficients}: entry outside -1..1",
            )
            for match in matches:
                _expect(
                    lattice.embeddings_equivalent(
                        classes[0], lattice.table_embedding(match)
                    ),
                    f"{coefficients}: search class differs from {match} table",
                )
            checked += 1
        return f"{checked} generated strings, each with one class matching its table"

    return _run("criterion-3-embedding-uniqueness", body)


def _dual_family_records() -> list:
    records = []
    for length in (2, 4):
        for b in itertools.product(range(2, 6), repeat=length):
            records.append(surgery.dual_knot_record("bgi", b=b))
            records.append(surgery.dual_knot_record("gofk", b=b))
    for length in (1, 2):
        for b in itertools.product(range(2, 6), repeat=length):
            records.append(surgery.dual_knot_record("bgii", b=b))
    for s in range(0, 7):
        for t in range(0, 7):
            for family in ("bgiii", "bgv", "bgiv", "bgiv-prime"):
                records.append(surgery.dual_knot_record(family, s=s, t=t))
        records.append(surgery.dual_knot_record("spor", s=s, t=1))
    return records


def criterion_homology_sweep() -> CheckResult:
    """Computed dual-knot classes equal their closed forms across the grid.

    Families over b-sequences use entries in [2,5] with one or two pairs;
    the six-component families sweep 0 <= s,t <= 6 (sporadic at t=1).
    Zero mismatches, exact arithmetic, one-minute budget.
    """

    def body() -> str:
        start = time.perf_counter()
        records = _dual_family_records()
        mismatches = [r for r in records if not r.match]
        elapsed = time.perf_counter() - start
        _expect(
            not mismatches,
            f"{len(mismatches)} mismatches, first: "
            + (str(mismatches[0].to_json()) if mismatches else ""),
        )
        _expect(elapsed < 60.0, f"budget exceeded: {elapsed:.1f}s >= 60s")
        orders = {r.space.p for r in records}
        return (
            f"{len(records)} family instances over {len(orders)} orders, "
            "computed class == closed form in both bases"
        )

    return _run("criterion-4-dual-class-sweep", body)


def criterion_keystone_reproduction() -> CheckResult:
    """Keystone sets of the one-parameter family, and all suggested knots.

    For n = 3..8 the rank-(n+3) table has keystones exactly {e1,e2,e3,e5}
    and the last column is not a keystone.  Every suggested knot of every
    generated string of rank <= 9 must pass the S1xS2 homology check with
    Smith diagonal (1,...,1,0).  Zero failures.
    """

    def body() -> str:
        for n in range(3, 9):
            table = _quotient_table(n)
            report = keystone.keystone_set(table)
            _expect(
                report.keystones == (1, 2, 3, 5),
                f"n={n}: keystones {report.keystones}",
            )
            _expect(
                keystone.is_keystone(table, n + 3) is None,
                f"n={n}: column {n + 3} wrongly a keystone",
            )
        knots = 0
        for coefficients in sorted(_generated_strings()):
            classes = lattice.find_embeddings(lattice.IntersectionForm(coefficients))
            _expect(len(classes) == 1, f"{coefficients}: not a unique class")
            report = keystone.keystone_set(classes[0])
            for column in report.keystones:
                knot = keystone.suggested_knot(classes[0], column)
                cert = surgery.verify_s1s2(knot.coefficients, knot.epsilon, knot.framing)
                _expect(
                    cert.passed,
                    f"{coefficients} keystone e{column}: {cert}",
                )
                knots += 1
        return (
            "keystones are e1,e2,e3,e5 for n=3..8 and all "
            f"{knots} suggested knots present S1xS2 homology"
        )

    return _run("criterion-5-keystone-reproduction", body)


def criterion_value_goldens() -> CheckResult:
    """Frozen headline values, exact.

    The wide palindrome evaluates to -16/9; the order-25 family records give
    class orbits {10,15} and {5,20} whose knots stay inequivalent under the
    default symmetry toggle and merge when the orientation-reversing
    symmetry for q^2 = -1 is enabled; the small simple-knot, torus-knot and
    cable goldens reproduce exactly.
    """

    def body() -> str:
        _expect(
            eval_cf((-1, 2, 2, 2, 2, -1)) == ExtendedRational(-16, 9),
            "wide palindrome value wrong",
        )
        space25 = lens.OrientedLensSpace(25, 7)
        _expect(space25.q * space25.q % 25 == 25 - 1, "q^2 != -1 mod 25")
        for family, orbit in (("bgiii", (10, 15)), ("spor", (10, 15)), ("bgv", (5, 20))):
            record = surgery.dual_knot_record(family, s=-3, t=1)
            _expect(record.space == space25, f"{family} space {record.space}")
            _expect(record.match, f"{family} class mismatch")
            _expect(
                record.computed.last_orbit() == orbit,
                f"{family} orbit {record.computed.last_orbit()}",
            )
        ten = surgery.SimpleKnot(25, 7, 10)
        five = surgery.SimpleKnot(25, 7, 5)
        _expect(
            not surgery.simple_knot_equivalent(ten, five),
            "orbits 10 and 5 merged under the default toggle",
        )
        _expect(
            bool(
                surgery.simple_knot_equivalent(
                    ten, five, mirror_when_q_squared_is_minus_one=True
                )
            ),
            "orbits 10 and 5 stay distinct with the extra symmetry enabled",
        )
        _expect(
            not surgery.simple_knot_equivalent(
                surgery.SimpleKnot(9, 7, 6), surgery.SimpleKnot(9, 7, 3)
            ),
            "order-9 classes wrongly merged",
        )
        for j, k in itertools.combinations((14, 7, 21), 2):
            _expect(
                not surgery.simple_knot_equivalent(
                    surgery.SimpleKnot(49, 31, j), surgery.SimpleKnot(49, 31, k)
                ),
                f"order-49 classes {j} and {k} wrongly merged",
            )
        _expect(
            bool(
                surgery.simple_knot_equivalent(
                    surgery.SimpleKnot(16, 9, 4), surgery.SimpleKnot(16, 9, 12)
                )
            ),
            "K(16,9,4) !~ K(16,9,12)",
        )
        torus = surgery.torus_knot_surgery(2, 1, 1)
        _expect(torus == lens.OrientedLensSpace(4, 3), f"torus formula gave {torus}")
        _expect(
            bool(lens.is_homeomorphic(torus, lens.OrientedLensSpace(4, 1))),
            "L(4,3) !~ L(4,1)",
        )
        cable = surgery.cable_surgery(2, 1, 1)
        _expect(cable == lens.OrientedLensSpace(16, 9), f"cable formula gave {cable}")
        return "palindrome value, order-25 orbits, toggle behavior and formulas exact"

    return _run("criterion-6-value-goldens", body)


def criterion_negative_control() -> CheckResult:
    """The corrupted linking vector must fail with cokernel order exactly 4."""

    def body() -> str:
        cert = surgery.verify_s1s2((-2, -2, -2), (1, 0, 1), -1)
        _expect(not cert.passed, "negative control passed")
        _expect(cert.diagonal == (1, 1, 1, 4), f"diagonal {cert.diagonal}")
        order = 1
        for d in cert.diagonal:
            order *= d
        _expect(order == 4, f"cokernel order {order}")
        return "linking vector (1,0,1) on (-2,-2,-2) fails with cokernel order 4"

    return _run("criterion-7-negative-control", body)


def acceptance_criteria(
    max_order: int = 300, jobs: Optional[int] = None
) -> list[CheckResult]:
    """Run the seven acceptance criteria in order."""
    return [
        criterion_continued_fractions(),
        criterion_equivalence_sweep(max_order=max_order, jobs=jobs),
        criterion_embedding_uniqueness(),
        criterion_homology_sweep(),
        criterion_keystone_reproduction(),
        criterion_value_goldens(),
        criterion_negative_control(),
    ]


def run_all(max_order: int = 300, jobs: Optional[int] = None) -> list[CheckResult]:
    """All golden checks followed by all acceptance criteria."""
    return golden_checks() + acceptance_criteria(max_order=max_order, jobs=jobs)
