"""Enriched plane rooted trees, generated and counted by brute force.

A vertex with out-degree ``d`` carries a decoration of size ``d``: a stack
polyomino of rise ``d``, a Ferrers diagram of width ``d`` satisfying the
Durfee condition, or the empty decoration when ``d = 0``.  Which family
decorates a level is given by a sigma word (0 = stack, 1 = Ferrers), extended
past its end by its last letter.

Counting uses a memoised recursion over (level, area budget) with its own
dictionary arithmetic and the decoration catalogue from the polyomino
enumerators, so it is independent of the generating-function code it checks.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, Sequence, Union

from .polyomino import FerrersDiagram, StackPolyomino, iter_ferrers, iter_stacks
from .series import QSeries

STACK = 0
FERRERS = 1


@dataclass(frozen=True)
class Empty:
    """The empty polyomino: area 0, size 0."""

    area: int = field(default=0, init=False)

    def __repr__(self) -> str:
        return "Empty()"


EMPTY = Empty()
Decoration = Union[StackPolyomino, FerrersDiagram, Empty]


def decoration_size(deco: Decoration) -> int:
    if isinstance(deco, StackPolyomino):
        return deco.rise
    if isinstance(deco, FerrersDiagram):
        return deco.width
    return 0


@dataclass(frozen=True)
class EnrichedTree:
    decoration: Decoration
    children: tuple[EnrichedTree, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) != decoration_size(self.decoration):
            raise ValueError(
                f"out-degree {len(self.children)} does not match decoration size "
                f"{decoration_size(self.decoration)} of {self.decoration!r}"
            )
        if isinstance(self.decoration, FerrersDiagram) and not self.decoration.durfee_condition:
            raise ValueError(f"{self.decoration!r} fails the Durfee condition")

    @property
    def area(self) -> int:
        return self.decoration.area + sum(c.area for c in self.children)

    @property
    def vertices(self) -> int:
        return 1 + sum(c.vertices for c in self.children)

    @property
    def height(self) -> int:
        return 1 + max(c.height for c in self.children) if self.children else 0

    def walk(self, level: int = 0) -> Iterator[tuple[int, EnrichedTree]]:
        """Preorder ``(level, subtree)`` pairs."""
        yield level, self
        for child in self.children:
            yield from child.walk(level + 1)


# ---------------------------------------------------------------------------
# species per level


def species_lookup(species) -> Callable[[int], int]:
    """Turn a sigma word, a string such as ``"110"``, or a callable into ``level -> letter``."""
    if callable(species):
        return species
    if isinstance(species, int):
        species = (species,)
    if isinstance(species, str):
        species = [c for c in species if c not in ", "]
    word = tuple(int(c) for c in species)
    if not word or any(c not in (STACK, FERRERS) for c in word):
        raise ValueError(f"species word must be a non-empty word over 0/1, got {species!r}")
    return lambda level: word[min(level, len(word) - 1)]


@lru_cache(maxsize=None)
def _catalogue(letter: int, max_area: int) -> tuple[Decoration, ...]:
    if letter == STACK:
        decos = list(iter_stacks(max_area))
    elif letter == FERRERS:
        decos = list(iter_ferrers(max_area, durfee_condition=True))
    else:
        raise ValueError(f"unknown species letter {letter!r}")
    decos.sort(key=lambda d: (d.area, decoration_size(d), getattr(d, "heights", None) or d.rows))
    return (EMPTY, *decos)


@lru_cache(maxsize=None)
def _catalogue_counts(letter: int, max_area: int) -> tuple[tuple[int, int, int], ...]:
    counts = Counter((d.area, decoration_size(d)) for d in _catalogue(letter, max_area))
    return tuple((a, s, c) for (a, s), c in sorted(counts.items()))


# ---------------------------------------------------------------------------
# counting


def _pmul(p: dict, r: dict, budget: int) -> dict:
    out: dict = defaultdict(int)
    for (a1, v1), c1 in p.items():
        for (a2, v2), c2 in r.items():
            if a1 + a2 <= budget:
                out[a1 + a2, v1 + v2] += c1 * c2
    return dict(out)


def enumerate_trees(species, max_area: int, max_height: int | None = None) -> Counter:
    """Count enriched trees with area <= ``max_area`` by ``(area, vertices)``."""
    if max_area < 0:
        raise ValueError("max_area must be non-negative")
    letter_at = species_lookup(species)

    @lru_cache(maxsize=None)
    def rooted(level: int, budget: int) -> dict:
        leaf_only = max_height is not None and level >= max_height
        out: dict = defaultdict(int)
        for area, size, count in _catalogue_counts(letter_at(level), max_area):
            if area > budget:
                break
            if size and leaf_only:
                continue
            forest = {(0, 0): 1}
            if size:
                child = rooted(level + 1, budget - area)
                for _ in range(size):
                    forest = _pmul(forest, child, budget - area)
            for (a, v), c in forest.items():
                out[area + a, v + 1] += count * c
        return dict(out)

    return Counter({k: c for k, c in rooted(0, max_area).items() if c})


def count_by_area(species, max_area: int) -> QSeries:
    """Number of enriched trees of each total area, as a series in ``q``."""
    marginal = [0] * (max_area + 1)
    for (area, _), c in enumerate_trees(species, max_area).items():
        marginal[area] += c
    return QSeries(marginal, max_area)


# ---------------------------------------------------------------------------
# materialisation


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def generate_trees(
    species, area: int, max_height: int | None = None, level: int = 0
) -> Iterator[EnrichedTree]:
    """Every enriched tree of total area exactly ``area`` rooted at ``level``."""
    letter_at = species_lookup(species)
    for deco in _catalogue(letter_at(level), area):
        rest = area - deco.area
        if rest < 0:
            break
        size = decoration_size(deco)
        if size == 0:
            if rest == 0:
                yield EnrichedTree(deco)
            continue
        if max_height is not None and level >= max_height:
            continue
        for split in _compositions(rest, size):
            options = [list(generate_trees(letter_at, a, max_height, level + 1)) for a in split]
            for kids in product(*options):
                yield EnrichedTree(deco, kids)


def tree_table(trees: Sequence[EnrichedTree]) -> Counter:
    return Counter((t.area, t.vertices) for t in trees)


# ---------------------------------------------------------------------------
# the area + 1 injection on stack-enriched trees


def injection_step(tree: EnrichedTree) -> EnrichedTree:
    """Map a stack-enriched tree of area A to one of area A + 1, injectively.

    A nonempty root stack gets one more cell at the right end of its bottom
    row, i.e. a trailing column of height 1, which keeps the rise.  The lone
    area-0 tree goes to the only area-1 tree, a single cell with no children.
    """
    for _, sub in tree.walk():
        if isinstance(sub.decoration, FerrersDiagram):
            raise ValueError("injection defined on S_q trees")
    if isinstance(tree.decoration, Empty):
        return EnrichedTree(StackPolyomino((1,)))
    widened = StackPolyomino(tree.decoration.heights + (1,))
    return EnrichedTree(widened, tree.children)


# ---------------------------------------------------------------------------
# text encodings


def canonical_encoding(tree: EnrichedTree) -> str:
    """Preorder text form: ``()`` for an empty leaf, ``(s1,2...)`` / ``(f2,2...)`` otherwise."""
    deco = tree.decoration
    if isinstance(deco, StackPolyomino):
        head = "s" + ",".join(map(str, deco.heights))
    elif isinstance(deco, FerrersDiagram):
        head = "f" + ",".join(map(str, deco.rows))
    else:
        head = ""
    return "(" + head + "".join(canonical_encoding(c) for c in tree.children) + ")"


_TOKEN = re.compile(r"\(|\)|[sf]\d+(?:,\d+)*")


def decode_tree(text: str) -> EnrichedTree:
    """Inverse of :func:`canonical_encoding`."""
    tokens = _TOKEN.findall(text)
    if "".join(tokens) != text:
        raise ValueError(f"malformed tree encoding: {text!r}")
    pos = 0

    def parse() -> EnrichedTree:
        nonlocal pos
        if tokens[pos] != "(":
            raise ValueError(f"malformed tree encoding: {text!r}")
        pos += 1
        deco: Decoration = EMPTY
        if tokens[pos] not in "()":
            kind, nums = tokens[pos][0], tuple(int(v) for v in tokens[pos][1:].split(","))
            deco = StackPolyomino(nums) if kind == "s" else FerrersDiagram(nums)
            pos += 1
        kids = []
        while tokens[pos] == "(":
            kids.append(parse())
        pos += 1
        return EnrichedTree(deco, kids)

    try:
        tree = parse()
    except IndexError:
        raise ValueError(f"malformed tree encoding: {text!r}") from None
    if pos != len(tokens):
        raise ValueError(f"malformed tree encoding: {text!r}")
    return tree


def _label(deco: Decoration) -> str:
    if isinstance(deco, StackPolyomino):
        return "S " + " ".join(map(str, deco.heights))
    if isinstance(deco, FerrersDiagram):
        return "F " + " ".join(map(str, deco.rows))
    return "empty"


def to_dot(trees: Sequence[EnrichedTree], name: str = "trees") -> str:
    """One DOT digraph holding every tree as a cluster; labels show decorations."""
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    counter = 0
    for i, tree in enumerate(trees):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="area {tree.area}, {tree.vertices} vertices";')

        def emit(node: EnrichedTree) -> str:
            nonlocal counter
            ident = f"n{counter}"
            counter += 1
            lines.append(f'    {ident} [label="{_label(node.decoration)}"];')
            for child in node.children:
                lines.append(f"    {ident} -> {emit(child)};")
            return ident

        emit(tree)
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
