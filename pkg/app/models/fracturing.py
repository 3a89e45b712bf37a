# app/models/fracturing.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterator, Tuple

import networkx as nx

from app.models.ground_set import SubsetMask
from app.models.poset import Poset
from app.utils.bitmask import iter_bits, lowest_bit, popcount


@dataclass(frozen=True)
class Fracturing:
    """
    Fracturing Q von P: Träger V ⊆ P, zerlegt in Blöcke, die jeweils eine Hasse-zusammenhängende
    induzierte Teilordnung bilden. Q ist die disjunkte Summe der P[Block].
    """

    parent: Poset
    blocks: Tuple[SubsetMask, ...]

    @classmethod
    def of(cls, parent: Poset, blocks) -> "Fracturing":
        return cls(parent, tuple(sorted(blocks, key=lowest_bit)))

    @cached_property
    def carrier(self) -> SubsetMask:
        out = 0
        for b in self.blocks:
            out |= b
        return out

    @property
    def omitted(self) -> SubsetMask:
        """P ∖ Q"""
        return self.parent.full & ~self.carrier

    def c(self) -> int:
        return len(self.blocks)

    def sign(self) -> int:
        return -1 if (self.c() + popcount(self.omitted)) % 2 else 1

    @cached_property
    def block_index(self) -> Dict[int, int]:
        return {i: pos for pos, b in enumerate(self.blocks) for i in iter_bits(b)}

    def lt(self, x: int, y: int) -> bool:
        """x <_Q y"""
        bx = self.block_index.get(x)
        return bx is not None and bx == self.block_index.get(y) and self.parent.lt(x, y)

    def below_rows(self) -> Tuple[SubsetMask, ...]:
        """below-Zeilen der disjunkten Summe Q, in den Bits von P (0 außerhalb des Trägers)."""
        rows = [0] * len(self.parent.below)
        for b in self.blocks:
            for i in iter_bits(b):
                rows[i] = self.parent.below[i] & b
        return tuple(rows)

    def render(self) -> str:
        ground = self.parent.ground
        return "|".join(",".join(str(x) for x in ground.labels_of(b)) for b in self.blocks)


@dataclass(frozen=True)
class ConflictDigraph:
    """Kante i→j (i≠j), wenn ein y ∈ Q_j unter einem x ∈ Q_i liegt."""

    vertices: Tuple[SubsetMask, ...]
    edges: FrozenSet[Tuple[int, int]]

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for i, block in enumerate(self.vertices):
            graph.add_node(i, block=block)
        graph.add_edges_from(self.edges)
        return graph

    def is_acyclic(self) -> bool:
        if not self.edges:
            return True
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def topological_order(self) -> Tuple[int, ...]:
        return tuple(nx.topological_sort(self.to_networkx()))


@dataclass(frozen=True)
class BetrayalFunction:
    """β: P∖Q → P mit β(b) <_P b, als sortierte (b, β(b))-Paare in Bitindizes."""

    assignment: Tuple[Tuple[int, int], ...]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.assignment)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.assignment)
