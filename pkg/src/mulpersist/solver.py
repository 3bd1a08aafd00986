"""Staged modular solver for the left-combination equations.

Pipeline per equation:
  1. exhaust all exponent residues mod 12 against the 3^u 7^w index mod m_12,
     which pins u mod 9900 and w mod 900;
  2. lift the residues to mod 24 and then 48, refining u and w through a
     fixed schedule of primes dividing 10^24 - 1 and 10^48 - 1;
  3. reduce mod 2^9 * 5^6 to decide which exponents are known outright,
     and filter the resulting records by the ordering requirement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

import numpy as np

from .constants import (LEARN_SCHEDULE, M12, M_FINAL, ORD_FINAL_3,
                        ORD_FINAL_7, U_RANGE, W_RANGE, LearnParams)
from .equations import Equation, generate_odd_equations, lc_eval, \
    reconstruct_value
from .genealogy import builtin_graph
from .rhs_index import RhsIndex, main_index

ACCEPTED = "accepted"
DISMISSED = "dismissed"
UNRESOLVED = "unresolved"
DNV_ORDER = "DNV_ORDER"
ANAD = "ANAD"


@dataclass(frozen=True)
class SolutionRecord:
    """One output row: exponent residues mod 12, per-position certainty,
    the matching right-side exponent residues, and the filter verdict."""

    a: tuple[int, ...]
    known: tuple[bool, ...]
    u: int
    w: int
    status: str
    reason: str | None = None

    def sort_key(self):
        return (self.a, self.u, self.w, self.known)


@dataclass(frozen=True)
class SolutionSet:
    equation: Equation
    records: tuple[SolutionRecord, ...]

    @property
    def accepted(self) -> tuple[SolutionRecord, ...]:
        return tuple(r for r in self.records if r.status == ACCEPTED)

    @property
    def unresolved(self) -> tuple[SolutionRecord, ...]:
        return tuple(r for r in self.records if r.status == UNRESOLVED)

    def accepted_values(self) -> set[int]:
        return {reconstruct_value(self.equation, r.u, r.w)
                for r in self.accepted}

    def to_json(self) -> str:
        rows = []
        for r in self.records:
            value = (reconstruct_value(self.equation, r.u, r.w)
                     if r.status == ACCEPTED else None)
            rows.append({"a": list(r.a), "known": [int(k) for k in r.known],
                         "u": r.u, "w": r.w, "status": r.status,
                         "reason": r.reason, "value": value})
        return json.dumps({"equation_id": self.equation.id, "records": rows},
                          sort_keys=True)

    def to_text(self) -> str:
        lines = [f"solutions of {self.equation.id}:"]
        if not self.records:
            lines.append("  (empty)")
        for r in self.records:
            if r.status == ACCEPTED:
                note = f"f(x)={reconstruct_value(self.equation, r.u, r.w)}"
            else:
                note = f"{r.status}" + (f" {r.reason}" if r.reason else "")
            flags = "".join("." if k else "?" for k in r.known)
            lines.append(f"  ({', '.join(map(str, r.a))}), {r.u}, {r.w}"
                         f"  [{flags}]  {note}")
        return "\n".join(lines) + "\n"


def _coeff_groups(eq: Equation) -> list[tuple[int, list[int]]]:
    """Runs of equal coefficients among positions 1..k: (coeff, positions)."""
    groups: list[tuple[int, list[int]]] = []
    for i, c in enumerate(eq.coeffs, start=1):
        if groups and groups[-1][0] == c:
            groups[-1][1].append(i)
        else:
            groups.append((c, [i]))
    return groups


def phase1_exhaust(eq: Equation, index: RhsIndex | None = None):
    """All canonical exponent-residue tuples mod 12 whose left side hits a
    3^u 7^w residue mod m_12, paired with the unique (u mod 9900,
    w mod 900).

    Canonical means non-increasing within every equal-coefficient run,
    which picks one representative per permutation-equivalent family.
    """
    if index is None:
        index = main_index()
    if index.m != M12 or index.u_range != U_RANGE or index.w_range != W_RANGE:
        raise ValueError("phase 1 requires the full index mod m_12")

    pow10 = np.array([pow(10, e, M12) for e in range(12)], dtype=np.int64)
    groups = _coeff_groups(eq)

    # Per-group partial sums (canonical tuples, descending residues).
    group_tuples: list[list[tuple[int, ...]]] = []
    group_sums: list[np.ndarray] = []
    for c, positions in groups:
        tuples = [t[::-1] for t in
                  combinations_with_replacement(range(12), len(positions))]
        sums = np.array([sum(int(pow10[a]) for a in t) * c % M12
                         for t in tuples], dtype=np.int64)
        group_tuples.append(tuples)
        group_sums.append(sums)

    shape = [len(t) for t in group_tuples]
    total = np.zeros((1,) * len(shape) or (1,), dtype=np.int64)
    for axis, sums in enumerate(group_sums):
        view = sums.reshape(tuple(len(sums) if i == axis else 1
                                  for i in range(len(shape))))
        total = (total + view) % M12

    out = []
    for a0 in range(12):
        g = (2 ** eq.h * (int(pow10[a0]) + 18 * total) + eq.tau) % M12
        flat = g.ravel()
        for pos, pairs in index.lookup_many(flat):
            rest: tuple[int, ...] = ()
            if shape:
                multi = np.unravel_index(pos, shape)
                rest = tuple(x for gi, ti in zip(multi, group_tuples)
                             for x in ti[gi])
            (u, w), = pairs
            out.append(((a0,) + rest, u, w))
    return out


def _canonical_lifts(a: tuple[int, ...], t: int,
                     groups: list[tuple[int, list[int]]]):
    """All vectors a + t*b, b in {0,1}^(k+1), keeping one representative
    when swapping equal-coefficient positions with equal residues."""
    runs: list[list[int]] = [[0]]
    for _, positions in groups:
        run: list[int] = []
        for i in positions:
            if run and a[run[-1]] == a[i]:
                run.append(i)
            else:
                if run:
                    runs.append(run)
                run = [i]
        runs.append(run)

    lifted = [list(a)]
    for run in runs:
        nxt = []
        for base in lifted:
            for m in range(len(run) + 1):
                v = base[:]
                for i in run[:m]:
                    v[i] += t
                nxt.append(v)
        lifted = nxt
    return [tuple(v) for v in lifted]


def _lc_mod(eq: Equation, a: tuple[int, ...], pow10: list[int],
            m: int) -> int:
    s = pow10[a[0]]
    for c, ai in zip(eq.coeffs, a[1:]):
        s += 18 * c * pow10[ai]
    return (2 ** eq.h * s + eq.tau) % m


def learn_step(params: LearnParams, g: int, u: int, w: int,
               m_u: int, m_w: int) -> list[tuple[int, int]]:
    """Refine (u mod m_u, w mod m_w) to the step's output moduli using the
    residue g of the left side mod the step prime."""
    if params.learn_u_mod != m_u * params.lam or \
            params.learn_w_mod != m_w * params.mu:
        raise AssertionError("learn step applied at the wrong moduli")
    p, q = params.p, params.q
    target = pow(g, q, p)
    ord_grp = p - 1
    su = pow(3, q * m_u % ord_grp, p)
    sw = pow(7, q * m_w % ord_grp, p)
    us = []
    x = pow(3, q * u % ord_grp, p)
    for i in range(params.lam):
        us.append((u + i * m_u, x))
        x = x * su % p
    ws = []
    x = pow(7, q * w % ord_grp, p)
    for j in range(params.mu):
        ws.append((w + j * m_w, x))
        x = x * sw % p
    return [(uu, ww) for uu, xu in us for ww, xw in ws
            if xu * xw % p == target]


def _valuation_consistent(eq: Equation, a48: tuple[int, ...], u: int,
                          w: int) -> bool:
    """Necessary condition from the 3^3 * 7 part of 10^48 - 1, which the
    working moduli deliberately exclude: ord(10) mod 189 is 6, so the left
    side mod 189 is determined by a mod 48 and must match the 3- and 7-adic
    shape of 3^u * 7^w.

    u is only known mod its final modulus, so u = 2 is possible exactly
    when the residue is 2 (u >= 2 always holds); likewise w = 0 requires
    residue 0.  Larger exponents force 27 | right side resp. 7 | right side.
    """
    pow10 = [pow(10, e, 189) for e in range(48)]
    left = _lc_mod(eq, a48, pow10, 189)
    for u_is_2 in ((True, False) if u == 2 else (False,)):
        for w_is_0 in ((True, False) if w == 0 else (False,)):
            want27 = 9 * pow(7, w % 3, 27) % 27 if u_is_2 else 0
            want7 = pow(3, u % 6, 7) if w_is_0 else 0
            if left % 27 == want27 and left % 7 == want7:
                return True
    return False


def learning_path(eq: Equation, phase1=None, index: RhsIndex | None = None):
    """Run the full refinement schedule; returns (a mod 48, u, w) states
    with u mod 2^7 3^2 5^5 11 and w mod 2^8 3^2 5^4 that also pass the
    valuation consistency check."""
    if phase1 is None:
        phase1 = phase1_exhaust(eq, index)
    groups = _coeff_groups(eq)
    pow10 = {lp.p: [pow(10, e, lp.p) for e in range(lp.t)]
             for lp in LEARN_SCHEDULE}

    final = []
    for a12, u0, w0 in phase1:
        for a24 in _canonical_lifts(a12, 12, groups):
            states = [(u0, w0)]
            m_u, m_w = U_RANGE, W_RANGE
            for lp in LEARN_SCHEDULE[:3]:
                g = _lc_mod(eq, a24, pow10[lp.p], lp.p)
                states = [s for uw in states
                          for s in learn_step(lp, g, *uw, m_u, m_w)]
                m_u, m_w = lp.learn_u_mod, lp.learn_w_mod
                if not states:
                    break
            if not states:
                continue
            for a48 in _canonical_lifts(a24, 24, groups):
                st48 = states
                m_u2, m_w2 = m_u, m_w
                for lp in LEARN_SCHEDULE[3:]:
                    g = _lc_mod(eq, a48, pow10[lp.p], lp.p)
                    st48 = [s for uw in st48
                            for s in learn_step(lp, g, *uw, m_u2, m_w2)]
                    m_u2, m_w2 = lp.learn_u_mod, lp.learn_w_mod
                    if not st48:
                        break
                final.extend((a48, u, w) for u, w in st48
                             if _valuation_consistent(eq, a48, u, w))
    return final


def to_integers(eq: Equation, a48: tuple[int, ...], u: int, w: int):
    """Decide mod 2^9 * 5^6 which exponents are forced below 12; one record
    per consistent certainty pattern."""
    a12 = tuple(x % 12 for x in a48)
    u0, w0 = u % ORD_FINAL_3, w % ORD_FINAL_7
    rhs = pow(3, u0, M_FINAL) * pow(7, w0, M_FINAL) % M_FINAL
    pow10 = [pow(10, e, M_FINAL) for e in range(24)]
    groups = _coeff_groups(eq)

    records = []
    for lifted in _canonical_lifts(a12, 12, groups):
        if _lc_mod(eq, lifted, pow10, M_FINAL) == rhs:
            known = tuple(x < 12 for x in lifted)
            records.append(SolutionRecord(a=a12, known=known, u=u0, w=w0,
                                          status=UNRESOLVED))
    return records


def apply_requirement_r(record: SolutionRecord) -> SolutionRecord:
    """Classify a record: the leading exponent must strictly dominate and
    the trailing exponents must be pairwise distinct."""
    known_trail = [a for a, k in zip(record.a[1:], record.known[1:]) if k]
    if len(set(known_trail)) != len(known_trail):
        return SolutionRecord(record.a, record.known, record.u, record.w,
                              DISMISSED, ANAD)
    if record.known[0] and any(a >= record.a[0] for a in known_trail):
        return SolutionRecord(record.a, record.known, record.u, record.w,
                              DISMISSED, DNV_ORDER)
    if all(record.known):
        return SolutionRecord(record.a, record.known, record.u, record.w,
                              ACCEPTED, None)
    return record    # stays UNRESOLVED: partially known, nothing violated


def solve_equation(eq: Equation, index: RhsIndex | None = None) -> SolutionSet:
    """Full pipeline.  Congruence families sharing a residue vector are
    reported as one record: the dismissal argument reads residues and the
    certainty mask, not the auxiliary (u, w), so once every family of a
    vector is dismissed a single representative line tells the story.
    Unresolved families are never collapsed."""
    families: dict[tuple, set[tuple[int, int]]] = {}
    for a48, u, w in learning_path(eq, index=index):
        for rec in to_integers(eq, a48, u, w):
            families.setdefault((rec.a, rec.known), set()).add((rec.u, rec.w))

    classified = []
    for (a, known), uws in sorted(families.items()):
        u, w = min(uws)
        rec = apply_requirement_r(
            SolutionRecord(a=a, known=known, u=u, w=w, status=UNRESOLVED))
        if rec.status == ACCEPTED:
            # all exponents known: exactly one (u, w) candidate may solve
            # the equation in the integers
            exact = [(u2, w2) for u2, w2 in sorted(uws)
                     if lc_eval(eq, a) == 3 ** u2 * 7 ** w2]
            if len(exact) != 1:
                raise AssertionError(
                    f"family {a} of {eq.id} fully known but has"
                    f" {len(exact)} exact (u, w) candidates")
            rec = SolutionRecord(a=a, known=known, u=exact[0][0],
                                 w=exact[0][1], status=ACCEPTED)
        classified.append(rec)

    by_vector: dict[tuple[int, ...], list[SolutionRecord]] = {}
    for rec in classified:
        by_vector.setdefault(rec.a, []).append(rec)
    records = []
    for a in sorted(by_vector):
        group = by_vector[a]
        unresolved = [r for r in group if r.status == UNRESOLVED]
        accepted = [r for r in group if r.status == ACCEPTED]
        if unresolved:
            records.extend(group)       # expose everything, nothing hidden
        elif accepted:
            if len(accepted) != 1:
                raise AssertionError(
                    f"residue vector {a} of {eq.id} accepted twice")
            records.extend(accepted)
        else:
            records.append(min(group, key=SolutionRecord.sort_key))
    records.sort(key=SolutionRecord.sort_key)
    sset = SolutionSet(equation=eq, records=tuple(records))
    _verify_accepted(sset)
    return sset


def _verify_accepted(sset: SolutionSet) -> None:
    """Accepted records must solve the equation exactly in the integers."""
    for r in sset.accepted:
        value = lc_eval(sset.equation, r.a)
        if value != 3 ** r.u * 7 ** r.w:
            raise AssertionError(
                f"accepted record {r} of {sset.equation.id} is not an exact"
                f" solution")


@dataclass(frozen=True)
class VertexCheck:
    vertex: int
    expected_children: tuple[int, ...]
    found_children: tuple[int, ...]
    unresolved: int

    @property
    def ok(self) -> bool:
        return (self.expected_children == self.found_children
                and self.unresolved == 0)


@dataclass(frozen=True)
class ProofReport:
    target: int
    checks: tuple[VertexCheck, ...]
    height_bound: int

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> str:
        return json.dumps({
            "target": self.target,
            "height_bound": self.height_bound,
            "ok": self.ok,
            "vertices": [{"vertex": c.vertex,
                          "expected": list(c.expected_children),
                          "found": list(c.found_children),
                          "unresolved": c.unresolved,
                          "ok": c.ok} for c in self.checks],
        }, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"target {self.target}: "
                 f"{'closure verified' if self.ok else 'MISMATCH'}, "
                 f"height bound {self.height_bound}"]
        for c in self.checks:
            mark = "ok" if c.ok else "FAIL"
            lines.append(f"  vertex {c.vertex}: children "
                         f"{sorted(c.found_children)} "
                         f"(expected {sorted(c.expected_children)}) [{mark}]")
        return "\n".join(lines) + "\n"


def prove_odd_target(d: int, index: RhsIndex | None = None) -> ProofReport:
    """Check that solving every equation of the graph of d recovers exactly
    the stored child sets, which bounds the height of every n with
    target d by depth + 1."""
    graph = builtin_graph(d)
    by_vertex: dict[int, set[int]] = {v: set() for v in graph.vertices}
    unresolved: dict[int, int] = {v: 0 for v in graph.vertices}
    for eq in generate_odd_equations(d):
        sset = solve_equation(eq, index=index)
        by_vertex[eq.vertex_s] |= sset.accepted_values()
        unresolved[eq.vertex_s] += len(sset.unresolved)

    checks = []
    for v in graph.vertices:
        expected = set(graph.children(v))
        if v == d:
            expected.add(d)       # the root's implicit self-loop
        checks.append(VertexCheck(vertex=v,
                                  expected_children=tuple(sorted(expected)),
                                  found_children=tuple(sorted(by_vertex[v])),
                                  unresolved=unresolved[v]))
    return ProofReport(target=d, checks=tuple(checks),
                       height_bound=graph.depth() + 1)
