"""Digit-product dynamics: the map f, trajectories, targets and heights.

The map f sends an integer to the product of its decimal digits.  Iterating
f from any n reaches a single digit (the target of n); the number of steps
needed is the height of n.
"""

from __future__ import annotations

from dataclasses import dataclass


def digit_product(n: int) -> int:
    """Product of the base-10 digits of n (n itself when n < 10)."""
    if n < 0:
        raise ValueError("digit_product is defined for non-negative integers")
    if n < 10:
        return n
    p = 1
    while n:
        n, d = divmod(n, 10)
        p *= d
        if p == 0:
            return 0
    return p


def digit_product_str(n: int) -> int:
    """Same as digit_product, via decimal-string traversal (cross-check route)."""
    if n < 0:
        raise ValueError("digit_product is defined for non-negative integers")
    if n < 10:
        return n
    p = 1
    for ch in str(n):
        p *= ord(ch) - 48
    return p


@dataclass(frozen=True)
class Trajectory:
    """The full f-iterate sequence of a starting integer.

    steps[0] is the start, steps[-1] is the single-digit target; height is
    the number of f applications taken (0 for single-digit starts).
    """

    start: int
    steps: tuple[int, ...]
    target: int
    height: int


def trajectory(n: int) -> Trajectory:
    """Iterate digit_product from n down to the first single-digit value."""
    steps = [n]
    while steps[-1] >= 10:
        steps.append(digit_product(steps[-1]))
    return Trajectory(start=n, steps=tuple(steps), target=steps[-1],
                      height=len(steps) - 1)


def target(n: int) -> int:
    """The single digit reached by iterating digit_product from n."""
    while n >= 10:
        n = digit_product(n)
    return n


def height(n: int) -> int:
    """Number of digit_product applications needed to reach a single digit."""
    h = 0
    while n >= 10:
        n = digit_product(n)
        h += 1
    return h
