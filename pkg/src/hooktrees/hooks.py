"""Hook statistics on complete m-ary trees and plane forests.

Three statistics are computed for every internal vertex v of an m-ary
tree, each in one bottom-up pass and keyed by the vertex's preorder index
over all vertices:

* ``standard_hooks``     h_v   -- internal vertices in the subtree at v.
* ``first_kind_hooks``   hcal  -- internal vertices left in that subtree
                                  after removing v's rightmost subtree.
* ``second_kind_hooks``  hbb   -- internal vertices left after recursively
                                  deleting the children at a fixed position
                                  set S from every surviving vertex.

``forest_hooks`` is the plane-forest analogue counting all vertices (not
just internal ones).  ``prune`` materializes the S-deletion as a tree of
smaller arity, and ``decompose`` / ``compose`` realize the induced
bijection between an arity-(m+1) tree and a pruned skeleton plus the
ordered forest of deleted subtrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .trees import LEAF, MAryTree, Node, PlaneForest


def _position_set(positions: Iterable[int], arity: int) -> frozenset[int]:
    """Validate a prunable position set: a subset of {1, ..., arity-1}.

    The last child position is never prunable, so a nonempty tree always
    survives its own pruning.
    """
    s = frozenset(positions)
    for p in s:
        if not isinstance(p, int) or not 1 <= p <= arity - 1:
            raise ValueError(f"pruned position {p!r} outside 1..{arity - 1}")
    return s


def standard_hooks(tree: MAryTree) -> dict[int, int]:
    """h_v = 1 + sum of h over internal children, for every internal v."""
    out: dict[int, int] = {}

    def walk(node: Node, idx: int) -> tuple[int, int]:
        if not node:
            return idx + 1, 0
        here = idx
        idx += 1
        total = 1
        for child in node:
            idx, sub = walk(child, idx)
            total += sub
        out[here] = total
        return idx, total

    walk(tree.root, 0)
    return out


def first_kind_hooks(tree: MAryTree) -> dict[int, int]:
    """hcal_v = 1 + sum of h over internal children at positions 1..m-1.

    Equivalently h_v minus the standard hook of v's rightmost child when
    that child is internal.
    """
    out: dict[int, int] = {}

    def walk(node: Node, idx: int) -> tuple[int, int]:
        if not node:
            return idx + 1, 0
        here = idx
        idx += 1
        total = 1
        kept = 1
        last = len(node) - 1
        for pos, child in enumerate(node):
            idx, sub = walk(child, idx)
            total += sub
            if pos != last:
                kept += sub
        out[here] = kept
        return idx, total

    walk(tree.root, 0)
    return out


def second_kind_hooks(tree: MAryTree, positions: Iterable[int]) -> dict[int, int]:
    """hbb_v = 1 + sum of hbb over internal children at unpruned positions.

    Defined for every internal vertex of the original tree: each v's value
    prunes within its own subtree, so vertices that the root's pruning
    would delete still get a value.  Agrees with standard hooks of
    ``prune`` applied at each vertex.
    """
    pruned = _position_set(positions, tree.arity)
    out: dict[int, int] = {}

    def walk(node: Node, idx: int) -> tuple[int, int]:
        if not node:
            return idx + 1, 0
        here = idx
        idx += 1
        kept = 1
        for pos, child in enumerate(node, start=1):
            idx, sub = walk(child, idx)
            if pos not in pruned:
                kept += sub
        out[here] = kept
        return idx, kept

    walk(tree.root, 0)
    return out


def forest_hooks(forest: PlaneForest) -> dict[int, int]:
    """H_v = 1 + sum of H over children, for every vertex of every tree.

    Keys are preorder indices taken across the whole forest, trees left to
    right.  The root of each component tree gets that tree's vertex count.
    """
    out: dict[int, int] = {}

    def walk(node: tuple, idx: int) -> tuple[int, int]:
        here = idx
        idx += 1
        total = 1
        for child in node:
            idx, sub = walk(child, idx)
            total += sub
        out[here] = total
        return idx, total

    idx = 0
    for tree in forest.trees:
        idx, _ = walk(tree, idx)
    return out


ForestHookProfile = dict[int, int]


@dataclass(frozen=True)
class HookProfile:
    """All hook statistics of one tree, keyed by preorder vertex index.

    ``hbb`` maps each queried position set to its per-vertex statistic.
    """

    h: dict[int, int]
    hcal: dict[int, int]
    hbb: dict[frozenset[int], dict[int, int]]


def hook_profile(tree: MAryTree, position_sets: Iterable[Iterable[int]] = ()) -> HookProfile:
    """Bundle h, hcal, and hbb for each requested position set."""
    hbb = {}
    for positions in position_sets:
        key = _position_set(positions, tree.arity)
        hbb[key] = second_kind_hooks(tree, key)
    return HookProfile(standard_hooks(tree), first_kind_hooks(tree), hbb)


def prune(tree: MAryTree, positions: Iterable[int]) -> MAryTree:
    """Recursively delete the subtrees at the given child positions.

    Every internal node keeps exactly the children at the complementary
    positions, in order; leaves stay leaves.  The result is a complete tree
    of arity ``tree.arity - len(positions)`` (arity 1, a path, when all
    prunable positions are deleted).  Pruning with the empty set is the
    identity.
    """
    pruned = _position_set(positions, tree.arity)
    if not pruned:
        return tree
    keep = [p - 1 for p in range(1, tree.arity + 1) if p not in pruned]

    def walk(node: Node) -> Node:
        if not node:
            return LEAF
        return tuple(walk(node[i]) for i in keep)

    return MAryTree(tree.arity - len(pruned), walk(tree.root))


def decompose(
    tree: MAryTree, positions: Iterable[int]
) -> tuple[MAryTree, tuple[MAryTree, ...]]:
    """Split a tree into its pruned skeleton and the deleted subtrees.

    The forest holds one original subtree per (surviving internal vertex,
    pruned position) pair, ordered by the vertex's preorder position in
    the skeleton and then by ascending pruned position; ``compose``
    restores the tree exactly.  Requires at least one internal vertex.
    """
    pruned = _position_set(positions, tree.arity)
    if not tree.root:
        raise ValueError("decompose needs a tree with at least one internal vertex")
    cut = sorted(p - 1 for p in pruned)
    keep = [p - 1 for p in range(1, tree.arity + 1) if p not in pruned]
    pieces: list[MAryTree] = []

    def walk(node: Node) -> Node:
        if not node:
            return LEAF
        for i in cut:
            pieces.append(MAryTree(tree.arity, node[i]))
        return tuple(walk(node[i]) for i in keep)

    skeleton = MAryTree(tree.arity - len(pruned), walk(tree.root))
    return skeleton, tuple(pieces)


def compose(
    skeleton: MAryTree, forest: Iterable[MAryTree], positions: Iterable[int]
) -> MAryTree:
    """Inverse of ``decompose``: graft the forest back onto the skeleton.

    The skeleton must have arity m+1-s where m+1 is the arity of the forest
    trees and s the number of pruned positions; the forest must hold exactly
    s subtrees per internal skeleton vertex, in decompose order.
    """
    pieces = list(forest)
    s_sorted = sorted(positions)
    pruned = frozenset(s_sorted)
    if len(pruned) != len(s_sorted):
        raise ValueError("duplicate pruned positions")
    arity = skeleton.arity + len(pruned)
    _position_set(pruned, arity)
    for piece in pieces:
        if piece.arity != arity:
            raise ValueError(f"forest tree of arity {piece.arity}, expected {arity}")
    expected = len(pruned) * skeleton.internal_count()
    if len(pieces) != expected:
        raise ValueError(f"forest length {len(pieces)}, expected {expected}")
    it = iter(pieces)
    cut = set(p - 1 for p in pruned)

    def walk(node: Node) -> Node:
        if not node:
            return LEAF
        grafts = [next(it).root for _ in range(len(cut))]
        out = []
        gi = 0
        ki = 0
        for i in range(arity):
            if i in cut:
                out.append(grafts[gi])
                gi += 1
            else:
                out.append(walk(node[ki]))
                ki += 1
        return tuple(out)

    return MAryTree(arity, walk(skeleton.root))
