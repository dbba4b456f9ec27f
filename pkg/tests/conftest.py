import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from hyperocta import EdgeOrdering, SignedGraph, SignedPermutation

slow = pytest.mark.skipif(
    not os.environ.get("HYPEROCTA_SLOW"),
    reason="set HYPEROCTA_SLOW=1 to run the slow checks",
)


def signed_perms(n: int) -> st.SearchStrategy[SignedPermutation]:
    return st.builds(
        lambda perm, signs: SignedPermutation(
            tuple(s * v for s, v in zip(signs, perm))
        ),
        st.permutations(list(range(1, n + 1))),
        st.tuples(*([st.sampled_from((1, -1))] * n)),
    )


@pytest.fixture
def looped_tree() -> SignedGraph:
    """Five-vertex signed tree with two loops used across the suite."""
    return SignedGraph(
        5, pos=[(1, 2), (3, 5)], neg=[(2, 3), (3, 4)], loops=[2, 5]
    )


@pytest.fixture
def looped_tree_ordering(looped_tree) -> EdgeOrdering:
    return EdgeOrdering.from_literals(
        looped_tree,
        ["pos:3-5", "loop:5", "neg:3-4", "neg:2-3", "loop:2", "pos:1-2"],
    )
