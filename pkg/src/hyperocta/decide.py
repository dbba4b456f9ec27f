"""Decision procedures for full-cyclic-permutation orderings.

The cheap necessary filter (connected, even cycle rank) runs first; existence
is then decided either by exhaustive ordering search on the underlying
multigraph plus loop parity, or by brute force over all orderings of the
signed graph itself.  For graphs whose underlying multigraph contains a
cycle, an explicit ordering whose product fixes a vertex is constructed.

Searches are deterministic: edges are taken in canonical order, so a witness
is the lexicographically least one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AcyclicGraphError, EdgeCapExceededError
from .graphs import Edge, Multigraph, Pair, SignedGraph
from .orderings import EdgeOrdering
from .permutations import Fullness, SignedPermutation, SignedTransposition

#: Largest edge count the ordering searches accept by default.
DEFAULT_EDGE_CAP = 9


class Universality(enum.Enum):
    """Whether every ordering of a graph yields a full cycle of one parity."""

    ALL_EVEN = "all-even"
    ALL_ODD = "all-odd"
    NOT_UNIVERSAL = "not-universal"


@dataclass(frozen=True)
class UnsignedFcpo:
    """Outcome of the unsigned full-cycle-ordering search."""

    found: bool
    witness: tuple[Pair, ...] | None
    method: str


@dataclass(frozen=True)
class FcpoReport:
    """Existence report for even/odd full-cyclic orderings of a signed graph."""

    even_exists: bool
    odd_exists: bool
    witness_even: EdgeOrdering | None
    witness_odd: EdgeOrdering | None
    method: str

    def to_json_dict(self) -> dict:
        return {
            "even_exists": self.even_exists,
            "odd_exists": self.odd_exists,
            "witness_even": None if self.witness_even is None else self.witness_even.to_literals(),
            "witness_odd": None if self.witness_odd is None else self.witness_odd.to_literals(),
            "method": self.method,
        }


def connected_even_betti(m: Multigraph) -> bool:
    """Necessary condition for a full-cyclic ordering: connected with even cycle rank."""
    return m.is_connected() and m.betti() % 2 == 0


def full_cycle_parity(images: Sequence[int]) -> int:
    """+1 or -1 when the images form a single full cycle of that parity, else 0."""
    n = len(images)
    x = images[0]
    steps = 1
    while x != 1 and x != -1:
        x = images[x - 1] if x > 0 else -images[-x - 1]
        steps += 1
    if steps != n:
        return 0
    return 1 if x == 1 else -1


# -- exhaustive machinery ------------------------------------------------------


def _shifted_map(t: SignedTransposition, n: int) -> tuple[int, ...]:
    # Index form: signed value v is stored as v + n, so maps chain without
    # per-element arithmetic.
    return tuple(
        (t.apply(v) + n) if v != 0 else n for v in range(-n, n + 1)
    )


def ordering_product_images(
    n: int, transpositions: Iterable[SignedTransposition]
) -> set[tuple[int, ...]]:
    """Image tuples of the products of every ordering of the given reflections.

    Orderings sharing an edge subset and a partial product are explored once,
    which keeps the sweep far below m! work while still covering every
    ordering's product.
    """
    maps = [_shifted_map(t, n) for t in transpositions]
    m = len(maps)
    identity = tuple(range(n + 1, 2 * n + 1))
    full = (1 << m) - 1
    by_mask: dict[int, set[tuple[int, ...]]] = {0: {identity}}
    for mask in sorted(range(full + 1), key=lambda x: x.bit_count()):
        if mask == full:
            break
        states = by_mask.pop(mask)
        for e in range(m):
            bit = 1 << e
            if mask & bit:
                continue
            vm = maps[e]
            bucket = by_mask.setdefault(mask | bit, set())
            for img in states:
                bucket.add(tuple(vm[v] for v in img))
    return {tuple(v - n for v in img) for img in by_mask[full]}


def has_fcpo_unsigned(m: Multigraph, cap: int = DEFAULT_EDGE_CAP) -> UnsignedFcpo:
    """Search all edge orderings of an unsigned multigraph for an n-cycle product.

    Fails fast on the necessary filter; otherwise runs a depth-first search
    over orderings that memoizes failed (edge subset, partial product) states.
    """
    if m.edge_count > cap:
        raise EdgeCapExceededError(
            f"{m.edge_count} edges exceed the search cap {cap}"
        )
    if not connected_even_betti(m):
        return UnsignedFcpo(found=False, witness=None, method="filter-rejected")
    n = m.n
    edges = m.edges
    count = len(edges)
    maps = []
    for i, j in edges:
        vm = list(range(n + 1))
        vm[i], vm[j] = j, i
        maps.append(tuple(vm))
    full = (1 << count) - 1
    identity = tuple(range(1, n + 1))

    def is_ncycle(img: tuple[int, ...]) -> bool:
        x = img[0]
        steps = 1
        while x != 1:
            x = img[x - 1]
            steps += 1
        return steps == n

    dead: set[tuple[int, tuple[int, ...]]] = set()
    chosen: list[int] = []

    def dfs(mask: int, img: tuple[int, ...]) -> bool:
        if mask == full:
            return is_ncycle(img)
        key = (mask, img)
        if key in dead:
            return False
        for e in range(count):
            bit = 1 << e
            if mask & bit:
                continue
            vm = maps[e]
            chosen.append(e)
            if dfs(mask | bit, tuple(vm[v] for v in img)):
                return True
            chosen.pop()
        dead.add(key)
        return False

    if dfs(0, identity):
        return UnsignedFcpo(
            found=True,
            witness=tuple(edges[e] for e in chosen),
            method="brute-force",
        )
    return UnsignedFcpo(found=False, witness=None, method="brute-force")


def lift_pair_sequence(g: SignedGraph, pairs: Sequence[Pair]) -> EdgeOrdering:
    """An ordering of g whose loop-stripped pair sequence equals ``pairs``.

    Parallel pairs take their positive copy first; loops go at the end in
    ascending order.  Any such choice strips back to ``pairs``.
    """
    pos_left = set(g.pos)
    neg_left = set(g.neg)
    seq: list[Edge] = []
    for pair in pairs:
        pair = (min(pair), max(pair))
        if pair in pos_left:
            pos_left.remove(pair)
            seq.append(Edge.pos(*pair))
        elif pair in neg_left:
            neg_left.remove(pair)
            seq.append(Edge.neg(*pair))
        else:
            raise ValueError(f"pair {pair} is not an available edge of the graph")
    seq.extend(Edge.loop(v) for v in sorted(g.loops))
    return EdgeOrdering(g, tuple(seq))


def has_signed_fcpo(g: SignedGraph, cap: int = DEFAULT_EDGE_CAP) -> FcpoReport:
    """Decide even/odd full-cyclic ordering existence via the underlying graph.

    An even (odd) full-cyclic ordering exists exactly when the underlying
    multigraph has a full-cyclic ordering and the loop count is even (odd).
    A found unsigned witness is lifted by reattaching signs and loops.
    """
    non_loops = len(g.pos) + len(g.neg)
    if non_loops > cap:
        raise EdgeCapExceededError(f"{non_loops} non-loop edges exceed the search cap {cap}")
    unsigned = has_fcpo_unsigned(g.underlying(), cap=cap)
    if not unsigned.found:
        return FcpoReport(
            even_exists=False,
            odd_exists=False,
            witness_even=None,
            witness_odd=None,
            method=unsigned.method if unsigned.method == "filter-rejected" else "reduction",
        )
    witness = lift_pair_sequence(g, unsigned.witness)
    parity_even = g.loop_count % 2 == 0
    expected = Fullness.EVEN_FULL if parity_even else Fullness.ODD_FULL
    if witness.pi().classify_full_cycle() is not expected:
        raise RuntimeError("lifted witness failed verification")
    return FcpoReport(
        even_exists=parity_even,
        odd_exists=not parity_even,
        witness_even=witness if parity_even else None,
        witness_odd=None if parity_even else witness,
        method="reduction",
    )


def has_signed_fcpo_brute(g: SignedGraph, cap: int = DEFAULT_EDGE_CAP) -> FcpoReport:
    """Decide existence by sweeping the products of all orderings of g itself."""
    if g.edge_count > cap + g.loop_count:
        raise EdgeCapExceededError(
            f"{g.edge_count} edges exceed the search cap {cap} plus loops"
        )
    products = ordering_product_images(
        g.n, [e.transposition() for e in g.edges()]
    )
    parities = {full_cycle_parity(img) for img in products}
    return FcpoReport(
        even_exists=1 in parities,
        odd_exists=-1 in parities,
        witness_even=None,
        witness_odd=None,
        method="brute-force",
    )


def universal_full_cyclic(g: SignedGraph) -> Universality:
    """Classify graphs where every ordering gives a full cycle.

    Purely structural: the underlying multigraph must be a tree, and then the
    loop parity fixes which parity every ordering produces.
    """
    if not g.is_signed_tree_with_loops():
        return Universality.NOT_UNIVERSAL
    return Universality.ALL_EVEN if g.loop_count % 2 == 0 else Universality.ALL_ODD


def minimal_cycle(m: Multigraph) -> list[int] | None:
    """Vertices of a shortest cycle, or None in a forest.

    Ties break toward the lexicographically smallest vertex sequence; a
    doubled pair counts as a 2-cycle.
    """
    doubled = sorted(p for p in set(m.edges) if m.multiplicity(*p) == 2)
    if doubled:
        return list(doubled[0])
    adj: dict[int, list[int]] = {v: [] for v in range(1, m.n + 1)}
    for i, j in set(m.edges):
        adj[i].append(j)
        adj[j].append(i)
    for v in adj:
        adj[v].sort()

    def extend(path: list[int], target_len: int) -> list[int] | None:
        if len(path) == target_len:
            return path if path[0] in adj[path[-1]] else None
        for w in adj[path[-1]]:
            if w > path[0] and w not in path:
                found = extend(path + [w], target_len)
                if found is not None:
                    return found
        return None

    for length in range(3, m.n + 1):
        for start in range(1, m.n + 1):
            found = extend([start], length)
            if found is not None:
                return found
    return None


def fixed_point_ordering(g: SignedGraph) -> EdgeOrdering:
    """An ordering of g whose product fixes a vertex up to sign.

    Requires a cycle in the underlying multigraph.  Taking a minimal cycle
    v_1..v_l, the ordering runs the first l-1 cycle edges, then every edge
    not incident to v_l, then the closing cycle edge, then the edges at v_l
    outside the cycle; its product returns v_1 to itself before anything
    else can move it, so no lift of it is full-cyclic.
    """
    under = g.underlying()
    cycle = minimal_cycle(under)
    if cycle is None:
        raise AcyclicGraphError("the underlying multigraph has no cycle")
    l = len(cycle)
    cycle_pairs = [
        tuple(sorted((cycle[k], cycle[(k + 1) % l]))) for k in range(l)
    ]
    remaining = list(under.edges)
    for pair in cycle_pairs:
        remaining.remove(pair)
    v_last = cycle[-1]
    incident_last = sorted(p for p in remaining if v_last in p)
    others = sorted(p for p in remaining if v_last not in p)
    sequence = cycle_pairs[:-1] + others + [cycle_pairs[-1]] + incident_last
    return lift_pair_sequence(g, sequence)
