"""Independent brute-force checks for the solver and the height claims.

Nothing here shares code with the staged solver: equations are solved by
direct enumeration over bounded exponents, and heights are recomputed by
literal digit-product iteration, so agreement between the two sides is
meaningful evidence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .digits import digit_product, height
from .equations import Equation
from .genealogy import builtin_graph
from .smooth import is_7smooth, seven_smooth_up_to

#: Above this bound the exact left side would overflow int64.
_MAX_BOUND = 14


def brute_solve_equation(eq: Equation, bound: int = 12,
                         require_r: bool = True):
    """All canonical exponent tuples with every a_i < bound that solve the
    equation exactly; returns (a, u, w) triples sorted.

    With require_r the ordering requirement is enforced (leading exponent
    strictly dominant, trailing ones pairwise distinct), matching the
    accepted records of the staged solver; without it, every exact solution
    in the box is returned.
    """
    if not 1 <= bound <= _MAX_BOUND:
        raise ValueError(f"bound must be in 1..{_MAX_BOUND}")
    pow10 = 10 ** np.arange(bound, dtype=np.int64)

    groups: list[tuple[int, int]] = []      # (coeff, multiplicity)
    for c in eq.coeffs:
        if groups and groups[-1][0] == c:
            groups[-1] = (c, groups[-1][1] + 1)
        else:
            groups.append((c, 1))

    group_tuples = []
    group_sums = []
    for c, mult in groups:
        tuples = [t[::-1] for t in
                  combinations_with_replacement(range(bound), mult)]
        group_tuples.append(tuples)
        group_sums.append(np.array(
            [c * sum(int(pow10[a]) for a in t) for t in tuples],
            dtype=np.int64))

    shape = [len(t) for t in group_tuples]
    total = np.zeros((1,) * len(shape) or (1,), dtype=np.int64)
    for axis, sums in enumerate(group_sums):
        total = total + sums.reshape(tuple(
            len(sums) if i == axis else 1 for i in range(len(shape))))

    out = []
    for a0 in range(bound):
        lc = (2 ** eq.h * (int(pow10[a0]) + 18 * total) + eq.tau).ravel()
        x = np.where(lc > 0, lc, 1)
        u = np.zeros_like(x)
        for _ in range(40):
            m = x % 3 == 0
            if not m.any():
                break
            x[m] //= 3
            u[m] += 1
        w = np.zeros_like(x)
        for _ in range(20):
            m = x % 7 == 0
            if not m.any():
                break
            x[m] //= 7
            w[m] += 1
        hits = np.nonzero((lc > 0) & (x == 1) & (u >= 2))[0]
        for pos in hits:
            rest: tuple[int, ...] = ()
            if shape:
                multi = np.unravel_index(int(pos), shape)
                rest = tuple(x2 for gi, ti in zip(multi, group_tuples)
                             for x2 in ti[gi])
            a = (a0,) + rest
            if require_r:
                if len(set(rest)) != len(rest):
                    continue
                if any(ai >= a0 for ai in rest):
                    continue
            out.append((a, int(u[pos]), int(w[pos])))
    return sorted(out)


def heights_and_targets(n: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(height, final digit) of every entry, by repeated digit product."""
    cur = n.copy()
    steps = np.zeros_like(cur)
    while True:
        active = cur >= 10
        if not active.any():
            return steps, cur
        x = cur[active]
        prod = np.ones_like(x)
        while (x > 0).any():
            d = x % 10
            np.copyto(d, 1, where=x == 0)
            prod *= d
            x //= 10
        cur[active] = prod
        steps[active] += 1


@dataclass(frozen=True)
class ScanReport:
    limit: int
    max_height: int
    witness: int                       # smallest n attaining max_height
    histogram: tuple[int, ...]         # histogram[e] = #{n < limit : height e}
    violations: tuple[int, ...]        # n with height > 11, expected empty
    target_max: tuple[int, ...]        # per final digit 0..9; -1 if unseen

    def to_json(self) -> str:
        return json.dumps({
            "limit": self.limit, "max_height": self.max_height,
            "witness": self.witness, "histogram": list(self.histogram),
            "violations": list(self.violations),
            "target_max": list(self.target_max)}, sort_keys=True)

    def histogram_csv(self) -> str:
        lines = ["height,count"]
        lines += [f"{e},{c}" for e, c in enumerate(self.histogram)]
        return "\n".join(lines) + "\n"


def scan_persistence(limit: int, chunk: int = 1 << 22) -> ScanReport:
    """Exhaustive height scan of [0, limit) by direct iteration."""
    if limit < 1:
        raise ValueError("limit must be positive")
    best_h, best_n = -1, -1
    hist: list[int] = []
    violations: list[int] = []
    target_max = [-1] * 10
    for start in range(0, limit, chunk):
        n = np.arange(start, min(start + chunk, limit), dtype=np.int64)
        hs, ts = heights_and_targets(n)
        top = int(hs.max())
        if top > best_h:
            best_h = top
            best_n = int(n[int(np.argmax(hs == top))])
        counts = np.bincount(hs)
        if len(counts) > len(hist):
            hist += [0] * (len(counts) - len(hist))
        for e, c in enumerate(counts):
            hist[e] += int(c)
        violations += [int(v) for v in n[hs > 11]]
        for d in range(10):
            sel = ts == d
            if sel.any():
                target_max[d] = max(target_max[d], int(hs[sel].max()))
    return ScanReport(limit=limit, max_height=best_h, witness=best_n,
                      histogram=tuple(hist), violations=tuple(violations),
                      target_max=tuple(target_max))


def _min_arrangement(digits: tuple[int, ...]) -> int:
    """Smallest integer whose digit multiset is exactly `digits`."""
    ds = sorted(digits)
    nz = next((i for i, d in enumerate(ds) if d), None)
    if nz is None:
        raise ValueError("all-zero digit multiset")
    lead = ds.pop(nz)
    return int(str(lead) + "".join(map(str, ds)))


def scan_persistence_grouped(limit: int) -> tuple[int, int]:
    """(max height, smallest witness) over [1, limit), computed per digit
    multiset instead of per number; independent cross-check of the scan."""
    if limit < 2:
        raise ValueError("limit must exceed 1")
    best_h, best_n = 0, 1
    ndigits = len(str(limit - 1))
    for length in range(1, ndigits + 1):
        for digits in combinations_with_replacement(range(10), length):
            if all(d == 0 for d in digits):
                continue
            n = _min_arrangement(digits)
            if n >= limit:
                continue
            h = height(n)
            if h > best_h or (h == best_h and n < best_n):
                if h > best_h:
                    best_h, best_n = h, n
    return best_h, best_n


def verify_graph_closure(d: int, limit: int) -> bool:
    """The stored vertex set of the graph of d, restricted to [1, limit],
    must coincide with a fresh enumeration of 7-smooth numbers with
    repeated digit product ending at d; edges must match digit products."""
    graph = builtin_graph(d)
    from .digits import target as _target
    fresh = {y for y in seven_smooth_up_to(limit) if _target(y) == d}
    stored = {v for v in graph.vertices if v <= limit}
    if fresh != stored:
        return False
    for parent, child in graph.edges:
        if digit_product(child) != parent or not is_7smooth(child):
            return False
    return True
