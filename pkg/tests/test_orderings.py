import itertools
import random

import pytest

from hyperocta import (
    Edge,
    EdgeOrdering,
    SignedGraph,
    SignedPermutation,
    SignedTransposition,
    decompose,
    phi,
    phi_fiber,
    phi_fiber_count,
)
from hyperocta.orderings import (
    cancel_flips,
    expand_negatives,
    push_flips_left,
    rewrite_steps,
)
from hyperocta.verification import all_signed_graphs

CHAIN_IMAGES = (2, -3, -5, -1, -4)


def T(text):
    from hyperocta import parse_transposition

    return parse_transposition(text)


# -- the product -------------------------------------------------------------------


def test_pi_of_looped_tree_ordering(looped_tree_ordering):
    assert looped_tree_ordering.pi().images == CHAIN_IMAGES


def test_pi_single_edge():
    g = SignedGraph(2, pos=[(1, 2)])
    w = EdgeOrdering.from_literals(g, ["pos:1-2"])
    assert w.pi().images == (2, 1)


def test_pi_empty_ordering():
    g = SignedGraph(3)
    assert EdgeOrdering(g, ()).pi() == SignedPermutation.identity(3)


def test_ordering_must_cover_edges_exactly(looped_tree):
    with pytest.raises(ValueError):
        EdgeOrdering.from_literals(looped_tree, ["pos:1-2"])
    literals = [e.literal() for e in looped_tree.edges()]
    with pytest.raises(ValueError):
        EdgeOrdering.from_literals(looped_tree, literals[:-1] + [literals[0]])
    with pytest.raises(ValueError, match="ordering\\[2\\]"):
        EdgeOrdering.from_literals(looped_tree, literals[:2] + ["bad"] + literals[2:])


def test_word_reverses_the_sequence(looped_tree_ordering):
    word = looped_tree_ordering.word()
    assert [str(t) for t in word] == [
        "(1 2)",
        "(2 -2)",
        "(2 -3)",
        "(3 -4)",
        "(5 -5)",
        "(3 5)",
    ]


# -- loop stripping -----------------------------------------------------------------


def test_phi_of_looped_tree_ordering(looped_tree_ordering):
    stripped = phi(looped_tree_ordering)
    assert stripped.pairs() == ((3, 5), (3, 4), (2, 3), (1, 2))
    assert stripped.pi().images == (2, 3, 5, 1, 4)
    assert stripped.pi() == looped_tree_ordering.pi().phi_project()


def test_phi_of_loopless_ordering_is_itself():
    g = SignedGraph(3, pos=[(1, 2)], neg=[(2, 3)])
    w = EdgeOrdering.from_literals(g, ["neg:2-3", "pos:1-2"])
    assert phi(w).sequence == w.sequence


def test_phi_of_all_loops_is_empty():
    g = SignedGraph(2, loops=[1, 2])
    w = EdgeOrdering.from_literals(g, ["loop:2", "loop:1"])
    assert phi(w).sequence == ()
    assert phi(w).pi().is_identity


def test_phi_commutes_with_sign_projection_randomly():
    rng = random.Random(11)
    pairs = list(itertools.combinations(range(1, 7), 2))
    for _ in range(60):
        pos = [p for p in pairs if rng.random() < 0.2][:4]
        neg = [p for p in pairs if rng.random() < 0.2][:3]
        loops = [v for v in range(1, 7) if rng.random() < 0.3]
        g = SignedGraph(6, pos, neg, loops)
        seq = list(g.edges())
        rng.shuffle(seq)
        w = EdgeOrdering(g, tuple(seq))
        assert phi(w).pi() == w.pi().phi_project()


def test_phi_fiber_count_by_enumeration(looped_tree, looped_tree_ordering):
    base = phi(looped_tree_ordering)
    matches = sum(
        1
        for seq in itertools.permutations(looped_tree.edges())
        if phi(EdgeOrdering(looped_tree, seq)).sequence == base.sequence
    )
    assert matches == 30
    assert phi_fiber_count(looped_tree) == 30


def test_phi_fiber_count_edge_cases():
    assert phi_fiber_count(SignedGraph(3, pos=[(1, 2), (2, 3)])) == 1
    assert phi_fiber_count(SignedGraph(1, loops=[1])) == 1


def test_phi_fiber_streams_exactly_the_fiber(looped_tree, looped_tree_ordering):
    base = phi(looped_tree_ordering)
    fiber = list(phi_fiber(base, looped_tree))
    assert len(fiber) == phi_fiber_count(looped_tree) == len(set(fiber))
    assert looped_tree_ordering in fiber
    for w in fiber:
        assert phi(w).sequence == base.sequence


# -- the rewrite ---------------------------------------------------------------------


def test_rewrite_steps_of_looped_tree(looped_tree_ordering):
    step1, step2, step3 = rewrite_steps(looped_tree_ordering.word())
    assert [str(t) for t in step1] == ["(1 -1)", "(5 -5)", "(1 2)", "(2 -3)", "(3 -4)", "(3 5)"]
    assert [str(t) for t in step2] == [
        "(1 -1)", "(5 -5)",
        "(1 2)",
        "(2 -2)", "(3 -3)", "(2 3)",
        "(3 -3)", "(4 -4)", "(3 4)",
        "(3 5)",
    ]
    assert [str(t) for t in step3] == [
        "(1 -1)", "(5 -5)", "(1 -1)", "(3 -3)", "(1 -1)", "(4 -4)",
        "(1 2)", "(2 3)", "(3 4)", "(3 5)",
    ]


def test_decompose_looped_tree_golden(looped_tree_ordering):
    dec = decompose(looped_tree_ordering)
    assert [str(t) for t in dec.inversions] == ["(1 -1)", "(3 -3)", "(4 -4)", "(5 -5)"]
    assert [str(t) for t in dec.base_word] == ["(1 2)", "(2 3)", "(3 4)", "(3 5)"]
    assert dec.base_product.images == (2, 3, 5, 1, 4)
    assert dec.recompose() == looped_tree_ordering.pi()


def test_decompose_loopless_all_positive():
    g = SignedGraph(4, pos=[(1, 2), (2, 3), (3, 4)])
    w = EdgeOrdering.from_literals(g, ["pos:2-3", "pos:1-2", "pos:3-4"])
    dec = decompose(w)
    assert dec.inversions == ()
    assert dec.base_product == w.pi()


def test_decompose_single_loop():
    g = SignedGraph(1, loops=[1])
    dec = decompose(EdgeOrdering.from_literals(g, ["loop:1"]))
    assert [str(t) for t in dec.inversions] == ["(1 -1)"]
    assert dec.base_product.is_identity


def test_push_flips_left_uses_endpoint_exchange():
    word = [T("(1 2)"), T("(2 -2)")]
    flips, rest = push_flips_left(word)
    assert [str(t) for t in flips] == ["(1 -1)"]
    assert [str(t) for t in rest] == ["(1 2)"]
    # Crossing must preserve the product.
    from hyperocta import compose_word

    assert compose_word(tuple(word), 2) == compose_word(tuple(flips + rest), 2)


def test_expand_negatives_rule():
    out = expand_negatives([T("(2 -3)")])
    assert [str(t) for t in out] == ["(2 -2)", "(3 -3)", "(2 3)"]


def test_cancel_flips_keeps_odd_multiplicity_sorted():
    flips = [T("(3 -3)"), T("(1 -1)"), T("(3 -3)"), T("(2 -2)")]
    assert [str(t) for t in cancel_flips(flips)] == ["(1 -1)", "(2 -2)"]


def test_decompose_parity_matches_loop_count_exhaustively():
    graphs = [g for g in all_signed_graphs(3, 4, 3) if g.edge_count <= 4]
    checked = 0
    for g in graphs:
        for seq in itertools.permutations(g.edges()):
            w = EdgeOrdering(g, seq)
            dec = decompose(w)
            assert len(dec.inversions) % 2 == g.loop_count % 2
            assert dec.recompose() == w.pi()
            checked += 1
    assert checked > 1000


def test_decompose_parity_on_looped_tree_all_orderings(looped_tree):
    for seq in itertools.permutations(looped_tree.edges()):
        w = EdgeOrdering(looped_tree, seq)
        dec = decompose(w)
        assert len(dec.inversions) % 2 == 0
        assert dec.recompose() == w.pi()
        assert w.pi().psi_sign() == 1


def test_psi_of_product_counts_loops():
    g = SignedGraph(3, pos=[(1, 2)], loops=[2])
    w = EdgeOrdering.from_literals(g, ["loop:2", "pos:1-2"])
    assert w.pi().psi_sign() == -1


# -- rotation --------------------------------------------------------------------------


def test_rotate_identity(looped_tree_ordering):
    assert looped_tree_ordering.rotate(1) == looped_tree_ordering


def test_rotate_conjugates_the_product(looped_tree_ordering):
    base_type = looped_tree_ordering.pi().cycle_type()
    for k in range(1, len(looped_tree_ordering) + 1):
        rotated = looped_tree_ordering.rotate(k)
        assert rotated.pi().cycle_type() == base_type
    rotated = looped_tree_ordering.rotate(2)
    assert rotated.sequence[0] == Edge.loop(5)
    assert rotated.sequence[-1] == Edge.pos(3, 5)


def test_rotate_two_edge_path_products_are_conjugate():
    g = SignedGraph(3, pos=[(1, 2), (2, 3)])
    w = EdgeOrdering.from_literals(g, ["pos:1-2", "pos:2-3"])
    r = w.rotate(2)
    conj = SignedTransposition.positive(2, 3).to_permutation(3)
    assert r.pi() == w.pi().conjugate_by(conj.inverse())


def test_rotate_index_out_of_range(looped_tree_ordering):
    with pytest.raises(ValueError):
        looped_tree_ordering.rotate(0)
    with pytest.raises(ValueError):
        looped_tree_ordering.rotate(7)
