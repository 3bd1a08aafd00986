"""7-smooth integers: factorization over {2,3,5,7}, enumeration, and
expressing a 7-smooth number as a product of decimal digits."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class NotSevenSmooth(ValueError):
    """Raised when an integer has a prime factor larger than 7."""

    def __init__(self, n: int, cofactor: int):
        self.n = n
        self.cofactor = cofactor
        super().__init__(f"{n} is not 7-smooth (cofactor {cofactor})")


@dataclass(frozen=True, order=True)
class Factorization:
    """Exponent vector (e2, e3, e5, e7) of a 7-smooth positive integer."""

    e2: int
    e3: int
    e5: int
    e7: int

    def value(self) -> int:
        return 2 ** self.e2 * 3 ** self.e3 * 5 ** self.e5 * 7 ** self.e7

    @property
    def is_odd(self) -> bool:
        return self.e2 == 0


def factorize_7smooth(n: int) -> Factorization:
    """Factor n over {2,3,5,7}; raises NotSevenSmooth on any other prime."""
    if n < 1:
        raise ValueError("n must be positive")
    exps = []
    for p in (2, 3, 5, 7):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exps.append(e)
    if n != 1:
        raise NotSevenSmooth(n, n)
    return Factorization(*exps)


def is_7smooth(n: int) -> bool:
    if n < 1:
        return False
    for p in (2, 3, 5, 7):
        while n % p == 0:
            n //= p
    return n == 1


def seven_smooth_up_to(limit: int) -> list[int]:
    """All 7-smooth integers in [1, limit], sorted ascending."""
    out = []
    a = 1
    while a <= limit:
        b = a
        while b <= limit:
            c = b
            while c <= limit:
                d = c
                while d <= limit:
                    out.append(d)
                    d *= 7
                c *= 5
            b *= 3
        a *= 2
    out.sort()
    return out


# Digits 2..9 as exponent vectors over (2,3,5,7).
_DIGIT_EXPONENTS = {
    2: (1, 0, 0, 0),
    3: (0, 1, 0, 0),
    4: (2, 0, 0, 0),
    5: (0, 0, 1, 0),
    6: (1, 1, 0, 0),
    7: (0, 0, 0, 1),
    8: (3, 0, 0, 0),
    9: (0, 2, 0, 0),
}


@lru_cache(maxsize=None)
def _digit_factorizations(exps: tuple[int, int, int, int],
                          max_digit: int) -> tuple[tuple[int, ...], ...]:
    if exps == (0, 0, 0, 0):
        return ((),)
    out = []
    for d in range(max_digit, 1, -1):
        de = _DIGIT_EXPONENTS[d]
        if all(e >= g for e, g in zip(exps, de)):
            rest = tuple(e - g for e, g in zip(exps, de))
            for tail in _digit_factorizations(rest, d):
                out.append((d,) + tail)
    return tuple(out)


def digit_factorizations(n: int) -> list[tuple[int, ...]]:
    """All multisets of digits 2..9 whose product is n.

    Each multiset is returned as a non-increasing tuple; digit 1 never
    appears (it is free in the associated decimal sets).
    """
    f = factorize_7smooth(n)
    return [tuple(m) for m in
            _digit_factorizations((f.e2, f.e3, f.e5, f.e7), 9)]
