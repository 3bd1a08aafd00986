"""Antecedent graphs of single-digit targets and their digit combinatorics.

A target graph for digit d collects the values f(x) of all x whose iterated
digit product reaches d; edges point from a value s to every f(x) with
f(f(x)) = s.  The graphs for d in {1,2,3,4,5,7,9} are stored explicitly.
Roots conceptually carry a self-loop (f(d) = d); it is not stored as an
edge, callers that need it add it back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .digits import digit_product
from .smooth import Factorization, factorize_7smooth


@dataclass(frozen=True)
class DigitSplit:
    """Digit-count descriptor of an antecedent: how many 3s, 9s, 5s, 7s.

    A number with beta1 threes, beta2 nines, gamma fives, delta sevens (and
    any number of ones) has digit product 3^(beta1+2*beta2) 5^gamma 7^delta.
    """

    beta1: int
    beta2: int
    gamma: int
    delta: int

    def digit_multiset(self) -> tuple[int, ...]:
        """Non-1 digits of the split, as a sorted tuple."""
        return tuple(sorted([3] * self.beta1 + [9] * self.beta2
                            + [5] * self.gamma + [7] * self.delta))


@dataclass(frozen=True)
class TargetGraph:
    target: int
    vertices: tuple[int, ...]              # sorted ascending
    edges: tuple[tuple[int, int], ...]     # (parent, child), sorted
    factorizations: dict = field(compare=False, repr=False, default=None)

    def children(self, s: int) -> tuple[int, ...]:
        return tuple(c for p, c in self.edges if p == s)

    def depth(self) -> int:
        """Edge count of the longest root-to-leaf path."""
        def down(v: int) -> int:
            kids = self.children(v)
            return 1 + max(map(down, kids)) if kids else 0
        return down(self.target)

    def depth_of(self, v: int) -> int:
        """Edge distance from the root to vertex v."""
        parent = {c: p for p, c in self.edges}
        d = 0
        while v != self.target:
            v = parent[v]
            d += 1
        return d

    def to_text(self) -> str:
        return "".join(f"{p} {c}\n" for p, c in self.edges) or f"{self.target}\n"

    def to_json(self) -> str:
        payload = {
            "target": self.target,
            "vertices": [
                {"value": v, "factorization": [f.e2, f.e3, f.e5, f.e7]}
                for v, f in ((v, self.factorizations[v])
                             for v in self.vertices)
            ],
            "edges": [list(e) for e in self.edges],
        }
        return json.dumps(payload, sort_keys=True)


_EDGE_TABLE: dict[int, list[tuple[int, int]]] = {
    1: [],
    3: [],
    7: [],
    9: [],
    5: [
        (5, 15),
        (15, 35), (15, 135), (15, 315),
        (35, 75), (35, 175), (35, 1715),
        (175, 1575),
        (315, 3375),
        (1715, 77175),
        (3375, 59535),
    ],
    2: [
        (2, 12), (2, 21), (2, 112),
        (12, 126), (12, 162), (12, 216), (12, 1134), (12, 13122),
        (112, 1728), (112, 2187),
        (126, 729), (126, 972), (126, 1792),
        (162, 93312),
        (216, 14336), (216, 33614), (216, 61236), (216, 1229312),
        (972, 393216), (972, 3111696),
        (1728, 268912), (1728, 314928), (1728, 321489), (1728, 11239424),
        (1792, 8748), (1792, 1411788), (1792, 1741824), (1792, 7112448),
        (61236, 2 ** 16 * 3 * 7 ** 2),
        (93312, 2 ** 26 * 3 ** 3), (93312, 2 ** 8 * 3 ** 3 * 7 ** 5),
        (1741824, 2 ** 6 * 7 ** 8),
    ],
    4: [
        (4, 14),
        (14, 27), (14, 72),
        (72, 98), (72, 189), (72, 294), (72, 1161216),
        (1161216, 2 ** 23 * 3 ** 7 * 7),
    ],
}


def builtin_graph(d: int) -> TargetGraph:
    """The stored antecedent graph for d in {1, 2, 3, 4, 5, 7, 9}."""
    if d not in _EDGE_TABLE:
        raise ValueError(f"no stored graph for target {d}")
    edges = sorted(_EDGE_TABLE[d])
    vertices = sorted({d} | {v for e in edges for v in e})
    facts = {v: factorize_7smooth(v) for v in vertices}
    return TargetGraph(target=d, vertices=tuple(vertices),
                       edges=tuple(edges), factorizations=facts)


def odd_splits(s: Factorization) -> list[DigitSplit]:
    """All ways to write an odd 7-smooth value as a product of digits.

    The exponent of 3 splits as beta1 + 2*beta2 over digits 3 and 9; fives
    and sevens are forced.  Yields floor(e3/2)+1 splits.
    """
    if s.e2 != 0:
        raise ValueError("odd_splits requires an odd value")
    return [DigitSplit(beta1=s.e3 - 2 * b2, beta2=b2, gamma=s.e5, delta=s.e7)
            for b2 in range(s.e3 // 2 + 1)]


# Admissible trailing powers of 5 for antecedents of the U_5 vertices.
# For each level g, only vertices divisible by the digit product of the
# forced decimal ending of an odd multiple of 5^g can occur:
#   g=2 ending 75  -> 35 | s;  g=3 ending 375 -> 105 | s;
#   g=4 ending 9375 -> 945 | s;  g>=5 is impossible.
_GAMMA_SETS = {
    4: frozenset({59535}),
    3: frozenset({315, 1575, 59535, 77175}),
    2: frozenset({35, 175, 315, 1575, 1715, 59535, 77175}),
}


def gamma_candidates(d: int, s: int) -> frozenset[int]:
    """Admissible exponents of 5 in an antecedent of vertex s of the graph
    of odd target d.

    For d != 5 the antecedent cannot contain the digit 5 at all; for d = 5
    it must (a power of 3 times a power of 7 never has an odd tens digit),
    and levels 2..4 are restricted by the forced decimal endings.
    """
    if d % 2 == 0:
        raise ValueError("even targets are handled by the census module")
    if d != 5:
        return frozenset({0})
    if s not in builtin_graph(5).vertices:
        raise ValueError(f"{s} is not a vertex of the target-5 graph")
    return frozenset({1} | {g for g, ok in _GAMMA_SETS.items() if s in ok})


def preimage_families(d: int) -> list[tuple[int, DigitSplit]]:
    """Digit-count descriptors covering every n with target d (d odd).

    Each (vertex, split) pair describes the decimal set of integers whose
    digit product is that vertex; the union over all pairs is exactly
    {n : target(n) = d}.
    """
    if d % 2 == 0:
        raise ValueError("d must be odd")
    graph = builtin_graph(d)
    out = []
    for v in graph.vertices:
        for split in odd_splits(graph.factorizations[v]):
            out.append((v, split))
    return out


def verify_builtin_edges(d: int) -> bool:
    """Check that every stored edge (s, c) satisfies digit_product(c) = s."""
    g = builtin_graph(d)
    for p, c in g.edges:
        if digit_product(c) != p:
            raise AssertionError(f"bad edge {p} -> {c} in graph {d}")
    if d % 2 == 1:
        for v in g.vertices:
            if v % 2 == 0:
                raise AssertionError(f"even vertex {v} in odd graph {d}")
    return True
