"""Signed graphs and their underlying unsigned multigraphs.

A signed graph on vertices 1..n carries a set of positive edges, a set of
negative edges (the same pair may appear in both, giving parallel edges of
opposite sign, but never twice with one sign), and a set of looped vertices.
Loops carry no sign and there is at most one per vertex.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .permutations import MAX_DEGREE, SignedTransposition

Pair = tuple[int, int]

POS = "pos"
NEG = "neg"
LOOP = "loop"


def _check_vertex_count(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n: vertex count must be a positive integer, got {n!r}")
    if n > MAX_DEGREE:
        raise ValueError(f"n: vertex count {n} exceeds the supported maximum {MAX_DEGREE}")
    return n


def _canonical_pair(pair: Iterable[int], n: int, where: str) -> Pair:
    try:
        i, j = pair
    except (TypeError, ValueError):
        raise ValueError(f"{where}: expected a pair of vertices, got {pair!r}") from None
    if not (isinstance(i, int) and isinstance(j, int)):
        raise ValueError(f"{where}: vertices must be integers, got {pair!r}")
    if i == j:
        raise ValueError(f"{where}: self-pair {{{i},{j}}} is not allowed")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"{where}: vertex out of range 1..{n} in {{{i},{j}}}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True, order=True)
class Edge:
    """One edge of a signed graph: a signed pair or a loop.

    Loops store the vertex in both slots so edges sort and compare plainly.
    """

    kind: str
    i: int
    j: int

    @classmethod
    def pos(cls, i: int, j: int) -> "Edge":
        return cls(POS, min(i, j), max(i, j))

    @classmethod
    def neg(cls, i: int, j: int) -> "Edge":
        return cls(NEG, min(i, j), max(i, j))

    @classmethod
    def loop(cls, v: int) -> "Edge":
        return cls(LOOP, v, v)

    def __post_init__(self):
        if self.kind not in (POS, NEG, LOOP):
            raise ValueError(f"unknown edge kind {self.kind!r}")
        if self.kind == LOOP:
            if self.i != self.j:
                raise ValueError("loop edge stores a single vertex")
        elif self.i >= self.j:
            raise ValueError(f"edge pair must satisfy i < j, got {self.i}, {self.j}")

    @property
    def is_loop(self) -> bool:
        return self.kind == LOOP

    def pair(self) -> Pair:
        if self.is_loop:
            raise ValueError("a loop has no endpoint pair")
        return (self.i, self.j)

    def transposition(self) -> SignedTransposition:
        """The reflection this edge contributes to an ordering product."""
        if self.kind == POS:
            return SignedTransposition.positive(self.i, self.j)
        if self.kind == NEG:
            return SignedTransposition.negative(self.i, self.j)
        return SignedTransposition.inversion(self.i)

    def literal(self) -> str:
        if self.is_loop:
            return f"loop:{self.i}"
        return f"{self.kind}:{self.i}-{self.j}"

    @classmethod
    def from_literal(cls, text: str, where: str = "edge") -> "Edge":
        """Parse "pos:1-2", "neg:2-3" or "loop:2"."""
        head, sep, tail = text.strip().partition(":")
        if not sep:
            raise ValueError(f"{where}: missing ':' in edge literal {text!r}")
        if head == LOOP:
            try:
                return cls.loop(int(tail))
            except ValueError:
                raise ValueError(f"{where}: bad loop vertex in {text!r}") from None
        if head in (POS, NEG):
            a, sep2, b = tail.partition("-")
            try:
                i, j = int(a), int(b)
            except ValueError:
                raise ValueError(f"{where}: bad endpoints in {text!r}") from None
            if i == j:
                raise ValueError(f"{where}: self-pair in {text!r}")
            return cls.pos(i, j) if head == POS else cls.neg(i, j)
        raise ValueError(f"{where}: unknown edge kind {head!r} in {text!r}")

    def __str__(self) -> str:
        return self.literal()


class Multigraph:
    """Unsigned multigraph on 1..n; any pair occurs at most twice."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        self.n = _check_vertex_count(n)
        canon = sorted(_canonical_pair(e, n, "edges") for e in edges)
        counts = Counter(canon)
        worst = max(counts.values(), default=0)
        if worst > 2:
            pair = next(p for p, c in counts.items() if c > 2)
            raise ValueError(f"edges: pair {{{pair[0]},{pair[1]}}} occurs {counts[pair]} times, at most 2 allowed")
        self.edges: tuple[Pair, ...] = tuple(canon)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def multiplicity(self, i: int, j: int) -> int:
        pair = (i, j) if i < j else (j, i)
        return sum(1 for e in self.edges if e == pair)

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = self.adjacency()
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def betti(self) -> int:
        """|E| - |V| + 1.  Meaningful as a cycle count only when connected."""
        return len(self.edges) - self.n + 1

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.n - 1


class SignedGraph:
    """Vertices 1..n with positive edges, negative edges, and loops."""

    __slots__ = ("n", "pos", "neg", "loops")

    def __init__(
        self,
        n: int,
        pos: Iterable[Iterable[int]] = (),
        neg: Iterable[Iterable[int]] = (),
        loops: Iterable[int] = (),
    ):
        self.n = _check_vertex_count(n)
        self.pos = self._pair_set(pos, "pos")
        self.neg = self._pair_set(neg, "neg")
        loop_list = list(loops)
        for v in loop_list:
            if not isinstance(v, int) or not (1 <= v <= self.n):
                raise ValueError(f"loops: vertex {v!r} out of range 1..{self.n}")
        if len(set(loop_list)) != len(loop_list):
            raise ValueError("loops: duplicate loop vertex")
        self.loops: frozenset[int] = frozenset(loop_list)

    def _pair_set(self, pairs: Iterable[Iterable[int]], where: str) -> frozenset[Pair]:
        canon = [_canonical_pair(p, self.n, where) for p in pairs]
        if len(set(canon)) != len(canon):
            dup = next(p for p in canon if canon.count(p) > 1)
            raise ValueError(f"{where}: duplicate edge {{{dup[0]},{dup[1]}}}")
        return frozenset(canon)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedGraph)
            and (self.n, self.pos, self.neg, self.loops)
            == (other.n, other.pos, other.neg, other.loops)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.pos, self.neg, self.loops))

    def __repr__(self) -> str:
        return (
            f"SignedGraph(n={self.n}, pos={sorted(self.pos)}, "
            f"neg={sorted(self.neg)}, loops={sorted(self.loops)})"
        )

    # -- structure ---------------------------------------------------------

    def edges(self) -> tuple[Edge, ...]:
        """All edges in a fixed order: positive, negative, then loops."""
        return (
            tuple(Edge.pos(i, j) for i, j in sorted(self.pos))
            + tuple(Edge.neg(i, j) for i, j in sorted(self.neg))
            + tuple(Edge.loop(v) for v in sorted(self.loops))
        )

    @property
    def edge_count(self) -> int:
        return len(self.pos) + len(self.neg) + len(self.loops)

    @property
    def loop_count(self) -> int:
        return len(self.loops)

    def without_loops(self) -> "SignedGraph":
        return SignedGraph(self.n, self.pos, self.neg, ())

    def underlying(self) -> Multigraph:
        """The unsigned multigraph: positive and negative pairs side by side, loops dropped."""
        return Multigraph(self.n, tuple(self.pos) + tuple(self.neg))

    def is_signed_tree_with_loops(self) -> bool:
        """True when the underlying multigraph is a tree (loops are irrelevant)."""
        return self.underlying().is_tree()

    # -- JSON ----------------------------------------------------------------

    @classmethod
    def from_json_dict(cls, doc: dict) -> "SignedGraph":
        if not isinstance(doc, dict):
            raise ValueError(f"graph: expected an object, got {type(doc).__name__}")
        unknown = set(doc) - {"n", "pos", "neg", "loops"}
        if unknown:
            raise ValueError(f"graph: unknown field {sorted(unknown)[0]!r}")
        if "n" not in doc:
            raise ValueError("graph: missing field 'n'")
        return cls(
            doc["n"],
            doc.get("pos", ()),
            doc.get("neg", ()),
            doc.get("loops", ()),
        )

    @classmethod
    def from_json(cls, text: str) -> "SignedGraph":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"graph: invalid JSON ({exc})") from None
        return cls.from_json_dict(doc)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "pos": [list(p) for p in sorted(self.pos)],
            "neg": [list(p) for p in sorted(self.neg)],
            "loops": sorted(self.loops),
        }
