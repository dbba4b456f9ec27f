"""Exhaustive verification sweeps, shared by the CLI and the test suite.

Each suite returns a list of named checks with pass/fail status and a short
detail string, so callers can render tables or assert on the outcome.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator

from . import census
from .decide import (
    FcpoReport,
    Universality,
    fixed_point_ordering,
    full_cycle_parity,
    has_signed_fcpo,
    has_signed_fcpo_brute,
    ordering_product_images,
    universal_full_cyclic,
)
from .graphs import Multigraph, SignedGraph
from .permutations import (
    SignedCycle,
    SignedPermutation,
    SignedTransposition,
    compose_word,
    cycle_permutation,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


SUITE_NAMES = ("lemmas", "existence", "universality", "counts", "census")


def run_suite(name: str, max_n: int | None = None, jobs: int = 1) -> list[CheckResult]:
    if name == "lemmas":
        return lemmas_suite(max_n=max_n or 6)
    if name == "existence":
        return existence_suite(max_n=max_n or 4)
    if name == "universality":
        return universality_suite(max_n=max_n or 5)
    if name == "counts":
        return counts_suite(max_n=max_n or 4, jobs=jobs)
    if name == "census":
        return census_suite(max_n=max_n or 4)
    raise ValueError(f"suite: expected one of {', '.join(SUITE_NAMES)}, got {name!r}")


def _random_element(n: int, rng: random.Random) -> SignedPermutation:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return SignedPermutation(
        tuple(v if rng.random() < 0.5 else -v for v in values), check=False
    )


# -- reflection and cycle relations ---------------------------------------------


def lemmas_suite(max_n: int = 6, hom_pairs: int = 2000, seed: int = 20240601) -> list[CheckResult]:
    out = []
    out.append(_check_negative_expansion(max_n))
    out.append(_check_flip_crossing(max_n))
    out.append(_check_flip_commuting(max_n))
    out.append(_check_cycle_rotation(min(max_n, 5)))
    out.append(_check_cycle_parity_flip(min(max_n, 5)))
    out.append(_check_cycle_expansion(min(max_n, 5)))
    out.append(_check_homomorphisms(8, hom_pairs, seed))
    out.append(_check_group_laws(8, 1000, seed))
    return out


def _check_negative_expansion(max_n: int) -> CheckResult:
    """(i -j) equals (i -i)(j -j)(i j)."""
    cases = bad = 0
    for n in range(2, max_n + 1):
        for i, j in itertools.permutations(range(1, n + 1), 2):
            cases += 1
            word = (
                SignedTransposition.inversion(i),
                SignedTransposition.inversion(j),
                SignedTransposition.positive(i, j),
            )
            if compose_word(word, n) != SignedTransposition.negative(i, j).to_permutation(n):
                bad += 1
    return CheckResult("negative-swap-expansion", bad == 0, f"{cases} cases, {bad} failures")


def _check_flip_crossing(max_n: int) -> CheckResult:
    """(i ej)(j -j) equals (i -i)(i ej) for both signs e."""
    cases = bad = 0
    for n in range(2, max_n + 1):
        for i, j in itertools.permutations(range(1, n + 1), 2):
            for make in (SignedTransposition.positive, SignedTransposition.negative):
                cases += 1
                swap = make(i, j)
                lhs = compose_word((swap, SignedTransposition.inversion(j)), n)
                rhs = compose_word((SignedTransposition.inversion(i), swap), n)
                if lhs != rhs:
                    bad += 1
    return CheckResult("flip-endpoint-crossing", bad == 0, f"{cases} cases, {bad} failures")


def _check_flip_commuting(max_n: int) -> CheckResult:
    """(i ej)(k -k) equals (k -k)(i ej) for k off the swap."""
    cases = bad = 0
    for n in range(3, max_n + 1):
        for i, j, k in itertools.permutations(range(1, n + 1), 3):
            for make in (SignedTransposition.positive, SignedTransposition.negative):
                cases += 1
                swap = make(i, j)
                flip = SignedTransposition.inversion(k)
                if compose_word((swap, flip), n) != compose_word((flip, swap), n):
                    bad += 1
    return CheckResult("flip-disjoint-commuting", bad == 0, f"{cases} cases, {bad} failures")


def _signed_entry_presentations(n: int, max_len: int) -> Iterator[tuple[tuple[int, ...], int]]:
    for l in range(1, min(n, max_len) + 1):
        for support in itertools.combinations(range(1, n + 1), l):
            for order in itertools.permutations(support):
                for signs in itertools.product((1, -1), repeat=l):
                    entries = tuple(s * v for s, v in zip(signs, order))
                    for parity in (1, -1):
                        yield entries, parity


def _check_cycle_rotation(max_n: int) -> CheckResult:
    """Rotating cycle entries (head moves to tail times the parity) fixes the element."""
    cases = bad = 0
    for entries, parity in _signed_entry_presentations(max_n, 5):
        cases += 1
        base = cycle_permutation(entries, parity, max_n)
        rotated = entries[1:] + (parity * entries[0],)
        if cycle_permutation(rotated, parity, max_n) != base:
            bad += 1
    return CheckResult("cycle-rotation", bad == 0, f"{cases} cases, {bad} failures")


def _canonical_cycles(n: int, max_len: int) -> Iterator[SignedCycle]:
    for l in range(1, min(n, max_len) + 1):
        for support in itertools.combinations(range(1, n + 1), l):
            for tail in itertools.permutations(support[1:]):
                for signs in itertools.product((1, -1), repeat=l - 1):
                    for parity in (1, -1):
                        yield SignedCycle((support[0],) + tail, signs, parity)


def _check_cycle_parity_flip(max_n: int) -> CheckResult:
    """A flip at the head (applied last) or at the tail (applied first) flips parity."""
    cases = bad = 0
    n = max_n
    for cyc in _canonical_cycles(n, 5):
        cases += 1
        perm = cyc.to_permutation(n)
        head_flip = SignedTransposition.inversion(cyc.support[0]).to_permutation(n)
        tail_flip = SignedTransposition.inversion(abs(cyc.entries()[-1])).to_permutation(n)
        flipped = SignedCycle(cyc.support, cyc.entry_signs, -cyc.parity).to_permutation(n)
        if not (head_flip * perm == perm * tail_flip == flipped):
            bad += 1
    return CheckResult("cycle-parity-flip", bad == 0, f"{cases} cases, {bad} failures")


def _check_cycle_expansion(max_n: int) -> CheckResult:
    """Cycles recompose from their reflection words (swap chain, plus a flip when odd)."""
    cases = bad = 0
    n = max_n
    for cyc in _canonical_cycles(n, 5):
        cases += 1
        if compose_word(cyc.transposition_word(), n) != cyc.to_permutation(n):
            bad += 1
    return CheckResult("cycle-expansion", bad == 0, f"{cases} cases, {bad} failures")


def _check_homomorphisms(n: int, pairs: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(pairs):
        a = _random_element(n, rng)
        b = _random_element(n, rng)
        ab = a * b
        if ab.phi_project() != a.phi_project() * b.phi_project():
            bad += 1
        if ab.psi_sign() != a.psi_sign() * b.psi_sign():
            bad += 1
    return CheckResult(
        "sign-projection-homomorphisms", bad == 0, f"{pairs} random pairs at degree {n}, {bad} failures"
    )


def _check_group_laws(n: int, triples: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    identity = SignedPermutation.identity(n)
    bad = 0
    for _ in range(triples):
        a = _random_element(n, rng)
        b = _random_element(n, rng)
        c = _random_element(n, rng)
        if (a * b) * c != a * (b * c):
            bad += 1
        if a * a.inverse() != identity or identity * a != a:
            bad += 1
    return CheckResult("group-laws", bad == 0, f"{triples} random triples at degree {n}, {bad} failures")


# -- existence of full-cyclic orderings ------------------------------------------


def all_signed_graphs(n: int, max_pairs: int, max_loops: int) -> Iterator[SignedGraph]:
    """Every signed graph on 1..n within the given edge budgets."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    pair_subsets = [
        subset
        for size in range(min(len(pairs), max_pairs) + 1)
        for subset in itertools.combinations(pairs, size)
    ]
    loop_subsets = [
        subset
        for size in range(min(n, max_loops) + 1)
        for subset in itertools.combinations(range(1, n + 1), size)
    ]
    for pos in pair_subsets:
        for neg in pair_subsets:
            if len(pos) + len(neg) > max_pairs:
                continue
            for loops in loop_subsets:
                yield SignedGraph(n, pos, neg, loops)


def _agree(reduction: FcpoReport, brute: FcpoReport) -> bool:
    return (
        reduction.even_exists == brute.even_exists
        and reduction.odd_exists == brute.odd_exists
    )


def existence_suite(max_n: int = 4, max_pairs: int = 5, max_loops: int = 2) -> list[CheckResult]:
    """Existence by reduction vs existence by exhaustive ordering sweep."""
    out = []
    for n in range(1, max_n + 1):
        graphs = disagreements = 0
        for g in all_signed_graphs(n, max_pairs, max_loops):
            graphs += 1
            if not _agree(has_signed_fcpo(g), has_signed_fcpo_brute(g)):
                disagreements += 1
        out.append(
            CheckResult(
                f"existence-agreement-n{n}",
                disagreements == 0,
                f"{graphs} graphs, {disagreements} disagreements",
            )
        )
    return out


# -- universality ----------------------------------------------------------------


def signed_trees_with_loops(n: int, max_edges: int) -> Iterator[SignedGraph]:
    """Signed graphs over every labeled tree with every signing and loop set."""
    for edges in census.labeled_trees(n):
        max_loops = max_edges - len(edges)
        loop_subsets = [
            subset
            for size in range(min(n, max_loops) + 1)
            for subset in itertools.combinations(range(1, n + 1), size)
        ]
        for mask in range(1 << len(edges)):
            pos = [e for i, e in enumerate(edges) if not mask >> i & 1]
            neg = [e for i, e in enumerate(edges) if mask >> i & 1]
            for loops in loop_subsets:
                yield SignedGraph(n, pos, neg, loops)


def connected_cyclic_multigraphs(n: int, max_edges: int) -> Iterator[Multigraph]:
    """Connected multigraphs with at least one cycle (pair multiplicity up to 2)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for counts in itertools.product((0, 1, 2), repeat=len(pairs)):
        total = sum(counts)
        if total > max_edges or total < n:
            continue
        edges = []
        for pair, c in zip(pairs, counts):
            edges.extend([pair] * c)
        m = Multigraph(n, edges)
        if m.is_connected() and not m.is_tree():
            yield m


def realize_signed(m: Multigraph) -> SignedGraph:
    """A signed graph with the given underlying multigraph and no loops."""
    pos = [p for p in set(m.edges)]
    neg = [p for p in set(m.edges) if m.multiplicity(*p) == 2]
    return SignedGraph(m.n, pos, neg, ())


def universality_suite(
    max_n: int = 5,
    max_edges: int = 7,
    converse_max_n: int = 4,
    converse_max_edges: int = 6,
) -> list[CheckResult]:
    out = []
    for n in range(1, max_n + 1):
        graphs = products = bad = 0
        for g in signed_trees_with_loops(n, max_edges):
            graphs += 1
            want = 1 if g.loop_count % 2 == 0 else -1
            expected = Universality.ALL_EVEN if want == 1 else Universality.ALL_ODD
            if universal_full_cyclic(g) is not expected:
                bad += 1
                continue
            images = ordering_product_images(n, [e.transposition() for e in g.edges()])
            products += len(images)
            if any(full_cycle_parity(img) != want for img in images):
                bad += 1
        out.append(
            CheckResult(
                f"universality-trees-n{n}",
                bad == 0,
                f"{graphs} signed trees with loops, {products} distinct products, {bad} failures",
            )
        )
    for n in range(2, converse_max_n + 1):
        graphs = bad = 0
        for m in connected_cyclic_multigraphs(n, converse_max_edges):
            graphs += 1
            g = realize_signed(m)
            if universal_full_cyclic(g) is not Universality.NOT_UNIVERSAL:
                bad += 1
                continue
            witness = fixed_point_ordering(g)
            if full_cycle_parity(witness.pi().images) != 0:
                bad += 1
        out.append(
            CheckResult(
                f"universality-converse-n{n}",
                bad == 0,
                f"{graphs} connected cyclic multigraphs, {bad} failures",
            )
        )
    return out


# -- factorization counts ----------------------------------------------------------


def counts_suite(max_n: int = 4, jobs: int = 1) -> list[CheckResult]:
    out = []
    for n in range(2, min(max_n, 5) + 1):
        measured, formula = census.even_cycle_factorization_check(n, jobs=jobs)
        out.append(
            CheckResult(
                f"even-cycle-words-n{n}",
                measured == formula,
                f"measured={measured} formula={formula}",
            )
        )
    for n in range(1, min(max_n, 5) + 1):
        measured, formula = census.odd_cycle_factorization_check(n, jobs=jobs)
        out.append(
            CheckResult(
                f"odd-cycle-words-n{n}",
                measured == formula,
                f"measured={measured} formula={formula}",
            )
        )
    return out


# -- census ---------------------------------------------------------------------


def census_suite(max_n: int = 4) -> list[CheckResult]:
    out = []
    for n in range(1, min(max_n, 6) + 1):
        enumerated = census.count_odd_full_cycles(n, mode="enumerate")
        formula = census.count_odd_full_cycles(n, mode="formula")
        out.append(
            CheckResult(
                f"odd-full-cycles-n{n}",
                enumerated == formula,
                f"enumerated={enumerated} formula={formula}",
            )
        )
    for n in range(2, min(max_n, 6) + 1):
        enumerated = census.enumerate_signed_trees_one_loop(n)
        formula = n ** (n - 2) * n * 2 ** (n - 1)
        out.append(
            CheckResult(
                f"one-loop-trees-n{n}",
                enumerated == formula,
                f"enumerated={enumerated} formula={formula}",
            )
        )
    for n in range(1, min(max_n, 3) + 1):
        formula = n ** (n - 1) * 2 ** (n - 1) * math.factorial(n)
        words = census.odd_cycle_words_enumerated(n)
        pairs = census.odd_fcpo_pairs_enumerated(n)
        out.append(
            CheckResult(
                f"word-ordering-bijection-n{n}",
                words == pairs == formula,
                f"words={words} pairs={pairs} formula={formula}",
            )
        )
    coxeter_ok = all(census.chapuy_stump_count(n) == n**n for n in range(1, 16))
    out.append(
        CheckResult(
            "coxeter-count-closed-form",
            coxeter_ok,
            "degrees 1..15 against n^n",
        )
    )
    return out
