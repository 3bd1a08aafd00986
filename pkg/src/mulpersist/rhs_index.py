"""Sorted index of right-side residues 3^u * 7^w over bounded exponents."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .constants import M12, U_RANGE, W_RANGE


def _mulmod_vec_scalar(vec: np.ndarray, scalar: int, m: int) -> np.ndarray:
    """(vec * scalar) % m for int64 vec without 128-bit overflow.

    Splits the scalar into 16-bit halves; valid while m < 2^47.
    """
    hi, lo = divmod(scalar, 1 << 16)
    part = (vec * hi) % m
    return ((part << 16) % m + (vec * lo) % m) % m


class RhsIndex:
    """All residues 3^u * 7^w mod m for (u, w) in a rectangle of exponents,
    sorted for binary-search membership with (u, w) payload."""

    def __init__(self, m: int, u_range: int, w_range: int):
        if m < 2 or u_range < 1 or w_range < 1:
            raise ValueError("need m >= 2 and positive ranges")
        if m >= 1 << 47:
            raise ValueError("modulus too large for the packed arithmetic")
        self.m = m
        self.u_range = u_range
        self.w_range = w_range

        pow3 = np.empty(u_range, dtype=np.int64)
        x = 1
        for i in range(u_range):
            pow3[i] = x
            x = x * 3 % m
        pow7 = [1] * w_range
        x = 1
        for i in range(w_range):
            pow7[i] = x
            x = x * 7 % m

        res = np.empty(u_range * w_range, dtype=np.int64)
        for w, pw in enumerate(pow7):
            res[w::w_range] = _mulmod_vec_scalar(pow3, pw, m)
        self._order = np.argsort(res, kind="stable").astype(np.int64)
        self._sorted = res[self._order]

    def __len__(self) -> int:
        return self.u_range * self.w_range

    def _pairs(self, lo: int, hi: int) -> list[tuple[int, int]]:
        return [divmod(int(i), self.w_range) for i in self._order[lo:hi]]

    def lookup(self, residue: int) -> list[tuple[int, int]]:
        """All (u, w) with 3^u * 7^w congruent to residue."""
        lo = int(np.searchsorted(self._sorted, residue, side="left"))
        hi = int(np.searchsorted(self._sorted, residue, side="right"))
        return self._pairs(lo, hi)

    def lookup_many(self, residues: np.ndarray):
        """Yield (position, [(u, w), ...]) for every residue that matches."""
        lo = np.searchsorted(self._sorted, residues, side="left")
        hi = np.searchsorted(self._sorted, residues, side="right")
        for pos in np.nonzero(hi > lo)[0]:
            yield int(pos), self._pairs(int(lo[pos]), int(hi[pos]))

    def multiplicity(self, residue: int) -> int:
        return len(self.lookup(residue))


@lru_cache(maxsize=1)
def main_index() -> RhsIndex:
    """The phase-1 index mod m_12 over the full injective rectangle."""
    return RhsIndex(M12, U_RANGE, W_RANGE)
