"""Census of the even-target graphs and the power-of-two digit bound.

Even targets are not proved here; this module measures why: it counts the
vertices and equations each even graph would require, and it implements the
divisibility bound showing that a number whose non-1 digits form a fixed
multiset can only be divisible by a bounded power of two.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from sympy.utilities.iterables import multiset_permutations

from .digits import target
from .equations import generate_even_equations
from .genealogy import builtin_graph
from .smooth import seven_smooth_up_to

#: Safety factor for vertex enumeration: the scan range must exceed the
#: largest vertex found by at least this much, or the set is suspect.
_MARGIN = 16

_DEFAULT_CAP = 10 ** 17


def even_vertices(d: int, cap: int = _DEFAULT_CAP) -> list[int]:
    """All 7-smooth y <= cap whose repeated digit product ends at d.

    Raises if the largest vertex sits within the safety margin of the cap,
    since that would leave the completeness of the census in doubt.
    """
    if d not in (2, 4, 6, 8):
        raise ValueError("d must be a nonzero even digit")
    vertices = [y for y in seven_smooth_up_to(cap) if target(y) == d]
    if vertices and max(vertices) * _MARGIN > cap:
        raise ValueError(
            f"vertex {max(vertices)} too close to the scan cap {cap};"
            f" raise the cap")
    return vertices


@dataclass(frozen=True)
class CensusRow:
    target: int
    vertices: int
    equations: int
    max_terms: int          # largest k+1 over the target's equations
    max_terms_vertex: int   # a vertex attaining it

    def to_dict(self) -> dict:
        return {"target": self.target, "vertices": self.vertices,
                "equations": self.equations, "max_terms": self.max_terms,
                "max_terms_vertex": self.max_terms_vertex}


def complexity_table(cap: int = _DEFAULT_CAP) -> list[CensusRow]:
    """Vertex and equation counts for every even target, with the widest
    equation each would need."""
    rows = []
    for d in (2, 4, 6, 8):
        if d in (2, 4):
            vertices = list(builtin_graph(d).vertices)
        else:
            vertices = even_vertices(d, cap)
        eqs = generate_even_equations(d, vertices=vertices)
        widest = max(eqs, key=lambda e: e.k)
        rows.append(CensusRow(target=d, vertices=len(vertices),
                              equations=len(eqs), max_terms=widest.k + 1,
                              max_terms_vertex=widest.vertex_s))
    return rows


def census_json(cap: int = _DEFAULT_CAP) -> str:
    return json.dumps([r.to_dict() for r in complexity_table(cap)],
                      sort_keys=True)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of the power-of-two bound for one non-1 digit multiset."""

    multiset: tuple[int, ...]
    bound: int          # max e with some candidate divisible by 2^e
    witness: int        # smallest candidate divisible by 2^bound

    def to_dict(self) -> dict:
        return {"multiset": list(self.multiset), "bound": self.bound,
                "witness": self.witness}


def _candidates(multiset: tuple[int, ...], e: int):
    """Decimal strings certifying divisibility by 2^e: full numbers shorter
    than e digits using the whole multiset padded with 1s, plus length-e
    suffixes using any sub-multiset padded with 1s."""
    counts = Counter(multiset)
    for length in range(len(multiset), e):
        digits = list(multiset) + [1] * (length - len(multiset))
        for perm in multiset_permutations(digits):
            yield int("".join(map(str, perm)))
    sub = [[]]
    for digit, n in sorted(counts.items()):
        sub = [s + [digit] * i for s in sub for i in range(n + 1)]
    for chosen in sub:
        if len(chosen) > e:
            continue
        digits = chosen + [1] * (e - len(chosen))
        for perm in multiset_permutations(digits):
            yield int("".join(map(str, perm)))


def lemma_two_adic_bound(multiset, e_max: int = 64) -> BoundReport:
    """Largest e such that some number with the given non-1 digit multiset
    is divisible by 2^e, found by exhausting candidate endings.

    Stops at the first e admitting no candidate; e_max only guards against
    runaway input.
    """
    ms = tuple(sorted(multiset))
    if not ms or any(x not in range(2, 10) for x in ms):
        raise ValueError("multiset must be non-empty digits in 2..9")
    prev_witness = int("".join(map(str, ms)))
    for e in range(1, e_max + 1):
        hits = [x for x in _candidates(ms, e) if x % 2 ** e == 0]
        if not hits:
            return BoundReport(multiset=ms, bound=e - 1,
                               witness=prev_witness)
        prev_witness = min(hits)
    raise RuntimeError(f"no bound below 2^{e_max} for {ms}")


def tabulated_bounds() -> list[BoundReport]:
    """The three multisets whose bound the height argument leans on."""
    return [lemma_two_adic_bound(ms)
            for ms in ((2, 2, 2, 2, 7), (2, 2, 4, 7), (4, 4, 7))]
