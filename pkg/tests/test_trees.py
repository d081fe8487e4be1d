"""Tree/forest enumeration, preorder codes, and the forest bijection."""

from itertools import islice

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hooktrees.trees import (
    DecodeError,
    LEAF,
    MAryTree,
    PlaneForest,
    count_trees,
    decode,
    enumerate_forests,
    enumerate_trees,
    psi,
    psi_inverse,
)


@st.composite
def mary_nodes(draw, arity, size):
    if size == 0:
        return LEAF
    remaining = size - 1
    parts = []
    for _ in range(arity - 1):
        take = draw(st.integers(0, remaining))
        parts.append(take)
        remaining -= take
    parts.append(remaining)
    return tuple(draw(mary_nodes(arity, p)) for p in parts)


@st.composite
def mary_trees(draw, min_arity=2, max_arity=4, max_size=5):
    arity = draw(st.integers(min_arity, max_arity))
    size = draw(st.integers(0, max_size))
    return MAryTree(arity, draw(mary_nodes(arity, size)))


def test_count_trees_values():
    assert count_trees(2, 0) == 1
    assert count_trees(2, 3) == 5
    assert count_trees(3, 3) == 12
    assert count_trees(1, 7) == 1
    with pytest.raises(ValueError):
        count_trees(0, 2)
    with pytest.raises(ValueError):
        count_trees(2, -1)


def test_enumerate_single_tree():
    trees = list(enumerate_trees(2, 1))
    assert len(trees) == 1
    assert trees[0] == MAryTree(2, (LEAF, LEAF))
    assert trees[0].encode() == "100"


def test_enumerate_order_is_canonical():
    assert [t.encode() for t in enumerate_trees(2, 2)] == ["10100", "11000"]
    assert [t.encode() for t in enumerate_trees(3, 2)] == [
        "1001000",
        "1010000",
        "1100000",
    ]


def test_enumerate_matches_count_by_brute_force():
    for arity in (1, 2, 3, 4, 5):
        for n in range(6):
            codes = [t.encode() for t in enumerate_trees(arity, n)]
            assert len(codes) == count_trees(arity, n)
            assert len(set(codes)) == len(codes)


def test_enumerated_trees_are_complete():
    for arity in (2, 3, 4):
        for n in range(5):
            for tree in enumerate_trees(arity, n):
                tree.check()
                assert tree.internal_count() == n
                assert tree.leaf_count() == (arity - 1) * n + 1


def test_enumeration_is_lazy():
    # the universe for n = 40 is astronomically large; taking a prefix
    # must not materialize it
    first = list(islice(enumerate_trees(2, 40), 3))
    assert len(first) == 3
    assert first[0].internal_count() == 40


def test_encode_examples():
    assert MAryTree(2).encode() == "0"
    assert MAryTree(7).encode() == "0"
    assert MAryTree(2, ((LEAF, LEAF), LEAF)).encode() == "11000"
    ternary = MAryTree(3, ((LEAF, LEAF, LEAF), (LEAF, LEAF, LEAF), LEAF))
    assert ternary.encode() == "1100010000"


def test_decode_examples():
    assert decode("0", 2) == MAryTree(2)
    assert decode("11000", 2) == MAryTree(2, ((LEAF, LEAF), LEAF))
    assert decode("10", 1) == MAryTree(1, (LEAF,))


def test_decode_rejects_truncated_code():
    with pytest.raises(DecodeError) as err:
        decode("110", 2)
    assert err.value.position == 3
    with pytest.raises(DecodeError):
        decode("", 2)


def test_decode_rejects_trailing_characters():
    with pytest.raises(DecodeError) as err:
        decode("00", 2)
    assert err.value.position == 1
    with pytest.raises(DecodeError) as err:
        decode("100100", 2)
    assert err.value.position == 3


def test_decode_rejects_bad_alphabet():
    with pytest.raises(DecodeError) as err:
        decode("1x000", 2)
    assert err.value.position == 1


@given(mary_trees())
def test_decode_inverts_encode(tree):
    assert decode(tree.encode(), tree.arity) == tree


def test_encode_inverts_decode_on_all_small_codes():
    for arity in (2, 3):
        for n in range(4):
            for tree in enumerate_trees(arity, n):
                code = tree.encode()
                assert decode(code, arity).encode() == code


def test_plane_forest_vertex_count():
    assert PlaneForest().vertex_count() == 0
    assert PlaneForest(((), ())).vertex_count() == 2
    assert PlaneForest((((),),)).vertex_count() == 2


def test_psi_examples():
    assert psi(PlaneForest()).encode() == "0"
    assert psi(PlaneForest(((),))).encode() == "100"
    assert psi(PlaneForest((((),),))).encode() == "11000"
    assert psi(PlaneForest(((), ()))).encode() == "10100"


def test_psi_inverse_examples():
    assert psi_inverse(decode("10100", 2)) == PlaneForest(((), ()))
    assert psi_inverse(decode("11000", 2)) == PlaneForest((((),),))
    with pytest.raises(ValueError):
        psi_inverse(MAryTree(3))


def test_psi_preserves_size():
    for n in range(6):
        for forest in enumerate_forests(n):
            image = psi(forest)
            assert image.internal_count() == forest.vertex_count() == n


def test_psi_round_trips():
    for n in range(7):
        for tree in enumerate_trees(2, n):
            assert psi(psi_inverse(tree)) == tree
        for forest in enumerate_forests(n):
            assert psi_inverse(psi(forest)) == forest


def test_enumerate_forests_counts():
    assert [f for f in enumerate_forests(0)] == [PlaneForest()]
    two = list(enumerate_forests(2))
    assert len(two) == 2
    assert set(two) == {PlaneForest(((), ())), PlaneForest((((),),))}
    assert len(list(enumerate_forests(3))) == 5
