"""Edge orderings, their products, and the flip/base factorization.

An edge ordering lists every edge of a signed graph exactly once; its product
multiplies the corresponding reflections with the first listed edge applied
first.  Stripping the loops from an ordering leaves an ordering of the
underlying multigraph, whose product is the sign-forgetting projection of the
signed product.

``decompose`` factors an ordering's product as (flip transpositions) *
(product of the loop-stripped ordering) by explicit word rewriting:

1. move the flips already present (the loops) to the left,
2. expand each negative transposition into two flips and a positive swap,
3. move the new flips to the left,

then cancel flips that occur twice.  Each move across a swap uses the
endpoint-exchange relation; moves across unrelated factors commute.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import Edge, Multigraph, SignedGraph
from .permutations import (
    INV,
    NEG,
    SignedPermutation,
    SignedTransposition,
    compose_word,
)


def _sequence_from_any(sequence: Iterable[Edge | str]) -> tuple[Edge, ...]:
    out = []
    for k, item in enumerate(sequence):
        if isinstance(item, Edge):
            out.append(item)
        elif isinstance(item, str):
            out.append(Edge.from_literal(item, where=f"ordering[{k}]"))
        else:
            raise ValueError(f"ordering[{k}]: expected an edge or literal, got {item!r}")
    return tuple(out)


@dataclass(frozen=True)
class EdgeOrdering:
    """A linear order on all edges of a signed graph; position 0 applies first."""

    graph: SignedGraph
    sequence: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "sequence", _sequence_from_any(self.sequence))
        if Counter(self.sequence) != Counter(self.graph.edges()):
            raise ValueError("ordering: sequence must list every edge of the graph exactly once")

    @classmethod
    def from_literals(cls, graph: SignedGraph, literals: Iterable[str]) -> "EdgeOrdering":
        return cls(graph, tuple(literals))

    def __len__(self) -> int:
        return len(self.sequence)

    def to_literals(self) -> list[str]:
        return [e.literal() for e in self.sequence]

    def word(self) -> tuple[SignedTransposition, ...]:
        """Reflection word in notation order: last edge leftmost, first edge rightmost."""
        return tuple(e.transposition() for e in reversed(self.sequence))

    def pi(self) -> SignedPermutation:
        """Product of the edge reflections, first edge applied first."""
        return compose_word(self.word(), self.graph.n)

    def rotate(self, k: int) -> "EdgeOrdering":
        """Cyclic shift starting at position k (1-based); products stay conjugate."""
        if not (1 <= k <= len(self.sequence)):
            raise ValueError(f"rotation index {k} out of range 1..{len(self.sequence)}")
        return EdgeOrdering(self.graph, self.sequence[k - 1 :] + self.sequence[: k - 1])


@dataclass(frozen=True)
class UnderlyingOrdering:
    """Loop-free ordering regarded over the underlying multigraph.

    Entries keep their source edges (so parallel edges of opposite sign stay
    distinguishable), but the product forgets signs: every entry contributes
    a plain swap.
    """

    graph: Multigraph
    sequence: tuple[Edge, ...]

    def pi(self) -> SignedPermutation:
        word = tuple(
            SignedTransposition.positive(*e.pair()) for e in reversed(self.sequence)
        )
        return compose_word(word, self.graph.n)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(e.pair() for e in self.sequence)


def phi(ordering: EdgeOrdering) -> UnderlyingOrdering:
    """Strip the loops, keeping the order of everything else."""
    return UnderlyingOrdering(
        graph=ordering.graph.underlying(),
        sequence=tuple(e for e in ordering.sequence if not e.is_loop),
    )


def phi_fiber_count(graph: SignedGraph) -> int:
    """Number of orderings of ``graph`` that strip to one fixed loop-free ordering.

    Choosing slots for the loops among all m positions and arranging the
    loops there gives binomial(m, l) * l!.
    """
    m = graph.edge_count
    l = graph.loop_count
    return math.comb(m, l) * math.factorial(l)


def phi_fiber(base: UnderlyingOrdering, graph: SignedGraph) -> Iterator[EdgeOrdering]:
    """Stream every ordering of ``graph`` whose loop-stripped form equals ``base``."""
    non_loops = tuple(base.sequence)
    loops = tuple(Edge.loop(v) for v in sorted(graph.loops))
    m = len(non_loops) + len(loops)
    for slots in itertools.combinations(range(m), len(loops)):
        for placed in itertools.permutations(loops):
            slot_map = dict(zip(slots, placed))
            rest = iter(non_loops)
            seq = tuple(
                slot_map[k] if k in slot_map else next(rest) for k in range(m)
            )
            yield EdgeOrdering(graph, seq)


# -- word rewriting ----------------------------------------------------------


def _cross_left(t: SignedTransposition, flip_index: int) -> int:
    """New flip index after moving a flip leftward across the factor t."""
    if t.kind == INV:
        return flip_index
    if flip_index == t.j:
        return t.i
    if flip_index == t.i:
        return t.j
    return flip_index


def push_flips_left(
    word: Iterable[SignedTransposition],
) -> tuple[list[SignedTransposition], list[SignedTransposition]]:
    """Move every flip to the front of the word, in arrival order.

    Returns (flips, rest): the word equals flips + rest as a product, with
    ``rest`` free of flips and in its original relative order.
    """
    flips: list[SignedTransposition] = []
    rest: list[SignedTransposition] = []
    for t in word:
        if t.kind == INV:
            x = t.i
            for passed in reversed(rest):
                x = _cross_left(passed, x)
            flips.append(SignedTransposition.inversion(x))
        else:
            rest.append(t)
    return flips, rest


def expand_negatives(word: Iterable[SignedTransposition]) -> list[SignedTransposition]:
    """Replace each negative swap (i -j) by (i -i)(j -j)(i j), in place."""
    out: list[SignedTransposition] = []
    for t in word:
        if t.kind == NEG:
            out.append(SignedTransposition.inversion(t.i))
            out.append(SignedTransposition.inversion(t.j))
            out.append(SignedTransposition.positive(t.i, t.j))
        else:
            out.append(t)
    return out


def cancel_flips(flips: Iterable[SignedTransposition]) -> tuple[SignedTransposition, ...]:
    """Drop flip pairs: keep one flip per index occurring an odd number of times."""
    counts = Counter(t.i for t in flips)
    return tuple(
        SignedTransposition.inversion(i) for i in sorted(counts) if counts[i] % 2
    )


def rewrite_steps(
    word: Iterable[SignedTransposition],
) -> tuple[list[SignedTransposition], list[SignedTransposition], list[SignedTransposition]]:
    """The three intermediate words of the flip-extraction rewrite."""
    flips1, rest1 = push_flips_left(list(word))
    after_step1 = flips1 + rest1
    expanded = expand_negatives(rest1)
    after_step2 = flips1 + expanded
    flips3, base = push_flips_left(after_step2)
    after_step3 = flips3 + base
    return after_step1, after_step2, after_step3


@dataclass(frozen=True)
class Decomposition:
    """An ordering's product split into flips times the loop-stripped product."""

    inversions: tuple[SignedTransposition, ...]
    base_word: tuple[SignedTransposition, ...]
    base_product: SignedPermutation

    def recompose(self) -> SignedPermutation:
        result = self.base_product
        for t in reversed(self.inversions):
            result = t.to_permutation(result.degree) * result
        return result


def decompose(ordering: EdgeOrdering) -> Decomposition:
    """Factor pi(ordering) as (flips) * pi(stripped ordering) by word rewriting.

    The flip count always matches the loop count modulo 2; cancellation keeps
    it minimal.
    """
    n = ordering.graph.n
    _, _, after_step3 = rewrite_steps(ordering.word())
    flips = [t for t in after_step3 if t.kind == INV]
    base_word = tuple(t for t in after_step3 if t.kind != INV)
    return Decomposition(
        inversions=cancel_flips(flips),
        base_word=base_word,
        base_product=compose_word(base_word, n),
    )
