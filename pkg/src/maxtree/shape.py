"""
Strictly r-furcating unlabeled rooted tree shapes.

A shape is an immutable value.  Children of every internal node are kept in
canonical order, sorted by ``(leaf_count, text)`` where ``text`` is the
serialization of the child, so isomorphic shapes compare equal and hash
identically.

Text grammar::

    shape := node ';'
    node  := '*' | '(' node (',' node){r-1} ')'

Whitespace is ignored by the parser.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Raised for structurally invalid shapes or malformed shape text."""


class TreeShape:
    """Canonical strictly r-furcating rooted tree shape.

    Build shapes with :func:`leaf`, :func:`compose`, :func:`canonicalize` or
    :func:`parse`; the constructor assumes its children are already in
    canonical order.
    """

    __slots__ = ("r", "children", "leaf_count", "internal_count", "height", "text", "_hash")

    def __init__(self, r: int, children: tuple[TreeShape, ...] = ()):
        self.r = r
        self.children = children
        if children:
            self.leaf_count = sum(c.leaf_count for c in children)
            self.internal_count = 1 + sum(c.internal_count for c in children)
            self.height = 1 + max(c.height for c in children)
            self.text = "(" + ",".join(c.text for c in children) + ")"
        else:
            self.leaf_count = 1
            self.internal_count = 0
            self.height = 0
            self.text = "*"
        self._hash = hash((r, self.text))

    @property
    def n(self) -> int:
        return self.leaf_count

    @property
    def w(self) -> int:
        return self.internal_count

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def sort_key(self) -> tuple[int, str]:
        return (self.leaf_count, self.text)

    def __eq__(self, other):
        if not isinstance(other, TreeShape):
            return NotImplemented
        return self.r == other.r and self.text == other.text

    def __lt__(self, other: TreeShape) -> bool:
        return self.sort_key < other.sort_key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"TreeShape(r={self.r}, {self.text};)"

    def __str__(self):
        return self.text + ";"

    def internal_nodes(self) -> Iterable[TreeShape]:
        """Yield every internal node (as its subtree), root first."""
        stack = [self]
        while stack:
            node = stack.pop()
            if node.children:
                yield node
                stack.extend(reversed(node.children))


_LEAVES: dict[int, TreeShape] = {}


def _check_arity(r: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise ShapeError(f"arity must be an integer >= 2, got {r!r}")


def leaf(r: int) -> TreeShape:
    """The single-leaf shape for arity ``r``."""
    _check_arity(r)
    if r not in _LEAVES:
        _LEAVES[r] = TreeShape(r)
    return _LEAVES[r]


def compose(subtrees: Sequence[TreeShape]) -> TreeShape:
    """Join exactly r subtrees under a new root (the ``T1 + ... + Tr`` operation)."""
    if not subtrees:
        raise ShapeError("compose needs r >= 2 subtrees, got none")
    r = subtrees[0].r
    if any(t.r != r for t in subtrees):
        raise ShapeError("arity mismatch among subtrees: %s" % sorted({t.r for t in subtrees}))
    if len(subtrees) != r:
        raise ShapeError(f"compose needs exactly r={r} subtrees, got {len(subtrees)}")
    return TreeShape(r, tuple(sorted(subtrees, key=lambda t: t.sort_key)))


def _is_leaf_token(raw) -> bool:
    return raw is None or raw == "*" or (isinstance(raw, (list, tuple)) and len(raw) == 0)


def canonicalize(raw, r: int) -> TreeShape:
    """Build a canonical shape from a raw nested structure.

    Leaves may be given as ``"*"``, ``None`` or an empty sequence; an internal
    node is any sequence of exactly ``r`` children.  Existing
    :class:`TreeShape` values are accepted (and re-checked for arity).
    """
    _check_arity(r)
    # explicit stack; caterpillars can be deeper than the recursion limit
    out: list[TreeShape] = []
    stack: list[tuple[object, bool]] = [(raw, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, TreeShape):
            if node.r != r:
                raise ShapeError(f"shape has arity {node.r}, expected {r}")
            out.append(node)
            continue
        if _is_leaf_token(node):
            out.append(leaf(r))
            continue
        if isinstance(node, str) or not isinstance(node, (list, tuple)):
            raise ShapeError(f"cannot interpret {node!r} as a tree node")
        if len(node) != r:
            raise ShapeError(f"node has {len(node)} children; expected 0 or {r}")
        if expanded:
            kids = out[-r:]
            del out[-r:]
            out.append(compose(kids))
        else:
            stack.append((node, True))
            for child in reversed(node):
                stack.append((child, False))
    return out[0]


def serialize(t: TreeShape) -> str:
    """Canonical text form, terminated by ``;``."""
    return t.text + ";"


def parse(text: str, r: int) -> TreeShape:
    """Parse shape text; the declared arity ``r`` is validated, not inferred."""
    _check_arity(r)
    s = "".join(text.split())
    if not s.endswith(";"):
        raise ShapeError("shape text must end with ';'")
    s = s[:-1]
    if not s:
        raise ShapeError("empty shape text")
    frames: list[list[TreeShape]] = []
    done: TreeShape | None = None
    i = 0
    expect_node = True
    while i < len(s):
        ch = s[i]
        if done is not None:
            raise ShapeError(f"trailing characters at offset {i}")
        if expect_node:
            if ch == "*":
                node = leaf(r)
                if frames:
                    frames[-1].append(node)
                else:
                    done = node
                expect_node = False
            elif ch == "(":
                frames.append([])
            else:
                raise ShapeError(f"expected '*' or '(' at offset {i}, got {ch!r}")
        else:
            if ch == ",":
                if not frames:
                    raise ShapeError(f"unexpected ',' at offset {i}")
                expect_node = True
            elif ch == ")":
                if not frames:
                    raise ShapeError(f"unbalanced ')' at offset {i}")
                kids = frames.pop()
                if len(kids) != r:
                    raise ShapeError(f"child count {len(kids)} != {r} at offset {i}")
                node = compose(kids)
                if frames:
                    frames[-1].append(node)
                else:
                    done = node
            else:
                raise ShapeError(f"expected ',' or ')' at offset {i}, got {ch!r}")
        i += 1
    if done is None:
        raise ShapeError("unterminated shape text")
    return done


@dataclass(frozen=True)
class NodeStats:
    """Leaf counts below each internal node, plus the tree height."""

    subtree_sizes: Counter
    height: int

    def sorted_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(self.subtree_sizes.elements()))


def node_stats(t: TreeShape) -> NodeStats:
    sizes = Counter(v.leaf_count for v in t.internal_nodes())
    return NodeStats(sizes, t.height)


def is_fully_symmetric(t: TreeShape) -> bool:
    """True when every internal node has r identical child shapes."""
    return all(all(c == v.children[0] for c in v.children) for v in t.internal_nodes())


def fully_symmetric(r: int, k: int) -> TreeShape:
    """The fully symmetric shape on ``r**k`` leaves."""
    t = leaf(r)
    for _ in range(k):
        t = compose([t] * r)
    return t


def caterpillar(r: int, w: int) -> TreeShape:
    """Shape whose internal nodes form a single path of length ``w``."""
    t = leaf(r)
    lf = leaf(r)
    for _ in range(w):
        t = compose([t] + [lf] * (r - 1))
    return t


def valid_leaf_count(r: int, n: int) -> bool:
    return n >= 1 and (n - 1) % (r - 1) == 0


def ascii_art(t: TreeShape) -> str:
    """Indented drawing, one node per line, leaf counts on internal nodes."""
    lines = []
    stack = [(t, "", True, True)]
    while stack:
        node, prefix, last, root = stack.pop()
        label = "*" if node.is_leaf else f"o [{node.leaf_count}]"
        if root:
            lines.append(label)
            child_prefix = ""
        else:
            lines.append(prefix + ("`-- " if last else "|-- ") + label)
            child_prefix = prefix + ("    " if last else "|   ")
        kids = node.children
        for j in range(len(kids) - 1, -1, -1):
            stack.append((kids[j], child_prefix, j == len(kids) - 1, False))
    return "\n".join(lines)
