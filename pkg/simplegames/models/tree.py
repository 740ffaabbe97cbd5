"""
Perfect-information game trees

Text format: a leaf is a bare voter label, an internal node is
`label(child,child,...)`, e.g. `1(2(4,5),3(6,7))`.
"""
from dataclasses import dataclass

from simplegames.errors import ParseError


@dataclass(frozen=True, slots=True)
class GameTree:
    """Internal nodes name the mover, leaves the winner (1-based)"""
    label: int
    children: tuple["GameTree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if self.label < 1:
            raise ValueError(f"tree label {self.label} must be positive")
        if len(self.children) == 1:
            raise ValueError("an internal node needs at least two children")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def nodes(self) -> list["GameTree"]:
        """Distinct nodes; shared subtrees are visited once"""
        seen: dict[int, GameTree] = {}
        stack = [self]
        while stack:
            node = stack.pop()
            if id(node) not in seen:
                seen[id(node)] = node
                stack.extend(node.children)
        return list(seen.values())

    def height(self) -> int:
        heights: dict[int, int] = {}
        for node in _postorder(self):
            heights[id(node)] = 1 + max((heights[id(c)] for c in node.children), default=-1)
        return heights[id(self)]

    def labels(self) -> set[int]:
        return {node.label for node in self.nodes()}

    def __str__(self) -> str:
        return format_tree(self)


def format_tree(tree: GameTree) -> str:
    if tree.is_leaf:
        return str(tree.label)
    return f"{tree.label}(" + ",".join(format_tree(c) for c in tree.children) + ")"


def parse_tree(text: str) -> GameTree:
    source = "".join(text.split())
    tree, position = _parse_node(source, 0)
    if position != len(source):
        raise ParseError(f"unexpected '{source[position:]}' after tree")
    return tree


def _parse_node(source: str, position: int) -> tuple[GameTree, int]:
    start = position
    while position < len(source) and source[position].isdigit():
        position += 1
    if start == position:
        raise ParseError(f"expected a voter label at position {start} of '{source}'")
    label = int(source[start:position])
    if position == len(source) or source[position] != "(":
        return GameTree(label), position

    children = []
    position += 1
    while True:
        child, position = _parse_node(source, position)
        children.append(child)
        if position >= len(source):
            raise ParseError(f"unclosed '(' in '{source}'")
        if source[position] == ",":
            position += 1
            continue
        if source[position] == ")":
            position += 1
            break
        raise ParseError(f"unexpected '{source[position]}' at position {position}")
    if len(children) < 2:
        raise ParseError(f"node {label} needs at least two children")
    return GameTree(label, tuple(children)), position


def _postorder(tree: GameTree) -> list[GameTree]:
    """Distinct nodes, children before parents"""
    order: list[GameTree] = []
    done: set[int] = set()
    stack: list[tuple[GameTree, bool]] = [(tree, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in done:
            continue
        if expanded:
            done.add(id(node))
            order.append(node)
        else:
            stack.append((node, True))
            stack.extend((child, False) for child in node.children)
    return order
