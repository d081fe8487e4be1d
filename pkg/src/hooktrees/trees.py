"""Complete m-ary trees and plane forests.

A tree node is a plain tuple of its child nodes; ``()`` is a leaf.  In a
complete m-ary tree every internal node is an m-tuple.  A plane tree node
is a tuple of arbitrarily many children, and a plane forest a linearly
ordered tuple of plane trees.  Sharing the one node vocabulary keeps the
forest <-> binary-tree bijection (``psi`` / ``psi_inverse``) a four-line
recursion.

Enumeration is streaming: memory stays proportional to the tree depth,
never to the (Fuss-Catalan sized) stream length.  The order is canonical
and documented on ``enumerate_trees`` so streams are reproducible and can
be chunked for parallel consumption.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

Node = tuple
LEAF: Node = ()


@dataclass(frozen=True, slots=True)
class MAryTree:
    """A complete m-ary tree: every internal vertex has exactly m ordered children.

    With n internal vertices there are exactly (m-1)*n + 1 leaves.  Arity 1
    (a path of internal vertices ending in one leaf) is the degenerate case
    produced by pruning away all but one child position; it is supported
    everywhere in the library, while the command line restricts itself to
    arity >= 2.

    Constructors assume a well-formed node structure; ``check`` validates.
    """

    arity: int
    root: Node = LEAF

    def internal_count(self) -> int:
        total = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node:
                total += 1
                stack.extend(node)
        return total

    def leaf_count(self) -> int:
        total = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node:
                stack.extend(node)
            else:
                total += 1
        return total

    def encode(self) -> str:
        """Preorder code: '1' per internal vertex, '0' per leaf.

        A complete m-ary tree with n internal vertices yields n ones and
        (m-1)*n + 1 zeros, and every proper prefix of the code has
        #zeros <= (m-1) * #ones.  ``decode`` is the exact inverse.
        """
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node:
                out.append("1")
                stack.extend(reversed(node))
            else:
                out.append("0")
        return "".join(out)

    def check(self) -> None:
        """Raise ValueError unless every internal node has exactly ``arity`` children."""
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node:
                if len(node) != self.arity:
                    raise ValueError(
                        f"internal node with {len(node)} children in an arity-{self.arity} tree"
                    )
                stack.extend(node)


class DecodeError(ValueError):
    """Malformed preorder code; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


def decode(text: str, arity: int) -> MAryTree:
    """Parse a preorder 0/1 code back into a complete ``arity``-ary tree.

    Rejects characters outside {0, 1}, codes that end before the tree is
    complete, and trailing characters after it is, naming the offending
    position in each case.
    """
    if arity < 1:
        raise ValueError(f"arity must be >= 1, got {arity}")
    stack: list[list[Node]] = []
    root: Node | None = None
    for pos, ch in enumerate(text):
        if root is not None:
            raise DecodeError("trailing characters after a complete tree", pos)
        if ch == "1":
            stack.append([])
            continue
        if ch != "0":
            raise DecodeError(f"invalid character {ch!r}", pos)
        node: Node = LEAF
        while True:
            if not stack:
                root = node
                break
            stack[-1].append(node)
            if len(stack[-1]) < arity:
                break
            node = tuple(stack.pop())
    if root is None:
        raise DecodeError("truncated code", len(text))
    return MAryTree(arity, root)


def count_trees(arity: int, internal: int) -> int:
    """Number of complete ``arity``-ary trees with ``internal`` internal vertices.

    The Fuss-Catalan count C(arity*n + 1, n) / (arity*n + 1), exact.
    """
    if arity < 1 or internal < 0:
        raise ValueError(f"need arity >= 1 and internal >= 0, got {arity}, {internal}")
    top = arity * internal + 1
    return math.comb(top, internal) // top


def enumerate_trees(arity: int, internal: int) -> Iterator[MAryTree]:
    """Yield every complete ``arity``-ary tree with ``internal`` internal vertices once.

    Canonical order: a tree with n >= 1 internal vertices distributes the
    remaining n-1 among the root's subtrees; the compositions
    (i_1, ..., i_m) run in increasing lexicographic order (i_1 slowest),
    and within one composition the child streams advance in left-to-right
    product order (leftmost slowest).  For arity 2, n = 2 this yields the
    codes "10100" then "11000".
    """
    if arity < 1 or internal < 0:
        raise ValueError(f"need arity >= 1 and internal >= 0, got {arity}, {internal}")
    for root in _nodes(arity, internal):
        yield MAryTree(arity, root)


def _nodes(m: int, n: int) -> Iterator[Node]:
    if n == 0:
        yield LEAF
        return
    for comp in _compositions(n - 1, m):
        yield from _children(m, comp, 0)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _children(m: int, comp: tuple[int, ...], start: int) -> Iterator[Node]:
    if start == len(comp):
        yield ()
        return
    for child in _nodes(m, comp[start]):
        for rest in _children(m, comp, start + 1):
            yield (child,) + rest


PlaneNode = tuple


@dataclass(frozen=True, slots=True)
class PlaneForest:
    """A linearly ordered sequence of plane trees.

    Each plane tree node is the tuple of its (arbitrarily many, ordered)
    child nodes, so a tree with its root removed is literally the node
    itself read as a forest.
    """

    trees: tuple[PlaneNode, ...] = ()

    def vertex_count(self) -> int:
        total = 0
        stack = list(self.trees)
        while stack:
            node = stack.pop()
            total += 1
            stack.extend(node)
        return total


def psi(forest: PlaneForest) -> MAryTree:
    """The recursive bijection from plane forests to complete binary trees.

    The empty forest maps to a single leaf; otherwise the first tree's root
    becomes the binary root, whose left subtree is the image of that tree's
    children-forest and whose right subtree is the image of the remaining
    forest.  The vertex count of the forest equals the internal-vertex
    count of the image.
    """
    return MAryTree(2, _psi(forest.trees))


def _psi(trees: tuple) -> Node:
    if not trees:
        return LEAF
    return (_psi(trees[0]), _psi(trees[1:]))


def psi_inverse(tree: MAryTree) -> PlaneForest:
    """Exact inverse of ``psi``."""
    if tree.arity != 2:
        raise ValueError(f"psi_inverse expects a binary tree, got arity {tree.arity}")
    return PlaneForest(_psi_inv(tree.root))


def _psi_inv(node: Node) -> tuple:
    if not node:
        return ()
    left, right = node
    return (_psi_inv(left),) + _psi_inv(right)


def enumerate_forests(vertices: int) -> Iterator[PlaneForest]:
    """Yield every plane forest with the given vertex count exactly once.

    The stream is the ``psi_inverse`` pullback of ``enumerate_trees(2, n)``,
    so its length is the Catalan number count_trees(2, n).
    """
    if vertices < 0:
        raise ValueError(f"need vertices >= 0, got {vertices}")
    for tree in enumerate_trees(2, vertices):
        yield psi_inverse(tree)
