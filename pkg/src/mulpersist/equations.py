"""The digit-position equations behind the odd-target proof.

An antecedent x of a graph vertex s has digits drawn from a known multiset
plus free 1s.  Writing 9*f(x) as a combination of powers of 10 and dividing
out the forced trailing power of 5 puts every case in the form

    2^h * (10^a0 + 18 * sum(c_i * 10^a_i)) + tau_h  =  3^u * 7^w

where h is the number of trailing 5s of f(x), each coefficient c_i encodes
one non-suffix digit ((digit-1)/2), and tau_h is a fixed constant.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .genealogy import builtin_graph, gamma_candidates, odd_splits

# tau_h for suffix levels 0..4; equals 9*S_h/5^h - 2^h where S_h is the
# forced decimal ending (1, 5, 75, 375, 9375).
TAU = (-1, 7, 23, 19, 119)

# Forced trailing digits of an antecedent with exactly h trailing 5s.
SUFFIX_DIGITS = ((), (5,), (5, 7), (3, 5, 7), (3, 5, 7, 9))

# Forced decimal endings: int("".join) of the suffix read most-significant
# first; index h.
SUFFIX_VALUES = (0, 5, 75, 375, 9375)

_COEFF_OF_DIGIT = {3: 1, 5: 2, 7: 3, 9: 4}


def tau_of(h: int) -> int:
    if not 0 <= h <= 4:
        raise ValueError(f"suffix level {h} out of range")
    return TAU[h]


@dataclass(frozen=True)
class Equation:
    """One left-combination equation: LC(a) = 3^u * 7^w."""

    id: str
    target_d: int
    vertex_s: int
    h: int
    coeffs: tuple[int, ...]     # sorted non-decreasing, each in {1,2,3,4}
    tau: int

    @property
    def k(self) -> int:
        return len(self.coeffs)

    def canonical_form(self) -> tuple[int, tuple[int, ...]]:
        return (self.h, self.coeffs)

    def to_json(self) -> str:
        return json.dumps({"id": self.id, "d": self.target_d,
                           "s": self.vertex_s, "h": self.h,
                           "coeffs": list(self.coeffs), "tau": self.tau},
                          sort_keys=True)


@dataclass(frozen=True)
class EvenEquation:
    """Census-only analogue for even targets: free power of two on the right."""

    target_d: int
    vertex_s: int
    digits: tuple[int, ...]     # non-1 digits, sorted
    coeffs: tuple[int, ...]     # 9*(digit-1) per digit

    @property
    def k(self) -> int:
        return len(self.coeffs)


def lc_eval(eq: Equation, a: tuple[int, ...] | list[int]) -> int:
    """Exact value of the left side for exponent vector a = (a_0 .. a_k)."""
    if len(a) != eq.k + 1:
        raise ValueError(f"expected {eq.k + 1} exponents, got {len(a)}")
    s = 10 ** a[0] + 18 * sum(c * 10 ** ai for c, ai in zip(eq.coeffs, a[1:]))
    return 2 ** eq.h * s + eq.tau


def reconstruct_value(eq: Equation, u: int, w: int) -> int:
    """The antecedent value f(x) = 3^(u-2) * 5^h * 7^w named by a solution."""
    if u < 2:
        raise ValueError(f"right-side exponent of 3 must be >= 2, got {u}")
    return 3 ** (u - 2) * 5 ** eq.h * 7 ** w


def generate_odd_equations(d: int) -> list[Equation]:
    """All equations for the odd target d, one per (vertex, split, suffix
    level) whose forced suffix digits occur in the split."""
    if d not in (1, 3, 5, 7, 9):
        raise ValueError("d must be an odd digit")
    graph = builtin_graph(d)
    out = []
    for s in graph.vertices:
        rows = []
        for h in sorted(gamma_candidates(d, s)):
            suffix = Counter(SUFFIX_DIGITS[h])
            for split in odd_splits(graph.factorizations[s]):
                digits = Counter(split.digit_multiset())
                if any(digits[x] < n for x, n in suffix.items()):
                    continue
                rest = digits - suffix
                coeffs = tuple(sorted(
                    _COEFF_OF_DIGIT[x] for x in rest.elements()))
                rows.append((h, coeffs))
        rows.sort()
        for h, coeffs in rows:
            out.append(Equation(id=f"{d}.{len(out) + 1:02d}", target_d=d,
                                vertex_s=s, h=h, coeffs=coeffs, tau=TAU[h]))
    return out


def generate_even_equations(d: int, vertices=None) -> list[EvenEquation]:
    """Census equations for an even target; never solved here.

    Vertex sets for d in {2, 4} default to the stored graphs; for d in
    {6, 8} they must be supplied (see the census module).
    """
    from .smooth import digit_factorizations

    if d not in (2, 4, 6, 8):
        raise ValueError("d must be a nonzero even digit")
    if vertices is None:
        if d not in (2, 4):
            raise ValueError(f"no stored graph for {d}; pass vertices")
        vertices = builtin_graph(d).vertices
    out = []
    for s in sorted(vertices):
        for digits in sorted(digit_factorizations(s)):
            ds = tuple(sorted(digits))
            out.append(EvenEquation(target_d=d, vertex_s=s, digits=ds,
                                    coeffs=tuple(9 * (x - 1) for x in ds)))
    return out
