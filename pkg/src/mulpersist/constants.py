"""Working moduli and the exponent-learning schedule of the modular solver.

Every value here is re-derivable; verify_constants() recomputes all of them
from scratch and raises on any mismatch, so a transcription error cannot
survive a test run.
"""

from __future__ import annotations

from dataclasses import dataclass

# m_t = (10^t - 1) / (3^3 * 7): the odd part of 10^t - 1 coprime to 21.
M12 = (10 ** 12 - 1) // (27 * 7)
M24 = (10 ** 24 - 1) // (27 * 7)
M48 = (10 ** 48 - 1) // (27 * 7)

# Prime factors of m_24 / m_12 and m_48 / m_24 exploited by the schedule.
P1 = 73
P2 = 137
P3 = 99990001
P4 = 17
P5 = 9999999900000001
P48_SPARE = 5882353          # completes m_48 / m_24; not used for learning

# Exponent ranges indexed in the first phase: 3^u * 7^w mod m_12 is
# injective on [0, 9900) x [0, 900).
U_RANGE = 9900
W_RANGE = 900

# Final lift modulus 2^9 * 5^6 and the orders of 3 and 7 there.
M_FINAL = 2 ** 9 * 5 ** 6
ORD_FINAL_3 = 2 ** 7 * 5 ** 5    # 400000
ORD_FINAL_7 = 2 ** 6 * 5 ** 4    # 40000


@dataclass(frozen=True)
class LearnParams:
    """One refinement step: improve u mod m_u -> mod lam*m_u and
    w mod m_w -> mod mu*m_w using the residue of the left side mod p."""

    p: int
    q: int
    lam: int
    mu: int
    t: int                 # the a-residue modulus needed (ord_p(10) | t)
    learn_u_mod: int
    learn_w_mod: int


# Schedule rows: start from u mod 9900, w mod 900 and end at
# u mod 2^7 3^2 5^5 11, w mod 2^8 3^2 5^4.
LEARN_SCHEDULE = (
    LearnParams(P1, 1, 1, 2, 24, 9900, 1800),
    LearnParams(P2, 17, 2, 1, 24, 19800, 1800),
    LearnParams(P3, 11 * 101, 5 ** 2, 2, 24, 495000, 3600),
    LearnParams(P4, 1, 2, 1, 48, 990000, 3600),
    LearnParams(P5, (P5 - 1) // 1440000, 2 ** 3 * 5, 2 ** 4 * 5 ** 2, 48,
                39600000, 1440000),
)

U_FINAL_MOD = LEARN_SCHEDULE[-1].learn_u_mod    # 39600000
W_FINAL_MOD = LEARN_SCHEDULE[-1].learn_w_mod    # 1440000

# Orders of 3 and 7 modulo each schedule prime (recomputed in
# verify_constants).
ORDERS = {
    P1: (2 ** 2 * 3, 2 ** 3 * 3),
    P2: (2 ** 3 * 17, 2 ** 2 * 17),
    P3: (2 ** 3 * 3 * 5 ** 4 * 11 * 101, 2 ** 4 * 3 ** 2 * 5 ** 2 * 11),
    P4: (2 ** 4, 2 ** 4),
    P5: (2 ** 7 * 3 * 5 ** 8 * 11 * 73 * 101 * 137,
         2 ** 8 * 3 ** 2 * 5 ** 8 * 11 * 73 * 101 * 137),
}

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 37, 73, 101, 137, 9901)


def _factor_smooth(n: int) -> dict[int, int]:
    """Factor n over the small prime set relevant here; n must split fully."""
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n != 1:
        raise ValueError(f"unexpected rough cofactor {n}")
    return out


def multiplicative_order(a: int, n: int, group_order: int) -> int:
    """Order of a mod n given a multiple group_order of it (smooth here)."""
    if pow(a, group_order, n) != 1:
        raise ValueError(f"{a}^{group_order} != 1 mod {n}")
    order = group_order
    for p in _factor_smooth(group_order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


class ConstantError(AssertionError):
    pass


def verify_constants() -> list[str]:
    """Recompute every embedded constant; returns the list of checks that
    passed, raises ConstantError on the first mismatch."""
    ok: list[str] = []

    def check(name: str, cond: bool) -> None:
        if not cond:
            raise ConstantError(name)
        ok.append(name)

    check("m12 = 11*13*37*101*9901", M12 == 11 * 13 * 37 * 101 * 9901)
    check("m24 = m12 * 73 * 137 * 99990001", M24 == M12 * P1 * P2 * P3)
    check("m48 = m24 * 17 * p5 * 5882353", M48 == M24 * P4 * P5 * P48_SPARE)
    check("10^12-1 = 3^3 * 7 * m12", 10 ** 12 - 1 == 27 * 7 * M12)

    check("ord(10) mod m12 = 12",
          multiplicative_order(10, M12, 12) == 12)
    for p, t in ((P1, 24), (P2, 24), (P3, 24), (P4, 48), (P5, 48)):
        check(f"ord(10) mod {p} divides {t}", pow(10, t, p) == 1)

    for p, (o3, o7) in ORDERS.items():
        check(f"ord(3) mod {p}", multiplicative_order(3, p, p - 1) == o3)
        check(f"ord(7) mod {p}", multiplicative_order(7, p, p - 1) == o7)

    check("ord(3) mod 2^9 5^6",
          multiplicative_order(3, M_FINAL, 4 * M_FINAL // 10) == ORD_FINAL_3)
    check("ord(7) mod 2^9 5^6",
          multiplicative_order(7, M_FINAL, 4 * M_FINAL // 10) == ORD_FINAL_7)

    check("q5 = (p5-1)/1440000 exactly",
          LEARN_SCHEDULE[4].q * 1440000 == P5 - 1)

    mu_u, mu_w = U_RANGE, W_RANGE
    for i, lp in enumerate(LEARN_SCHEDULE, start=1):
        check(f"step {i} u modulus chains", lp.learn_u_mod == mu_u * lp.lam)
        check(f"step {i} w modulus chains", lp.learn_w_mod == mu_w * lp.mu)
        o3, o7 = ORDERS[lp.p]
        check(f"step {i}: ord_p(3) | q * n_u", lp.q * lp.learn_u_mod % o3 == 0)
        check(f"step {i}: ord_p(7) | q * n_w", lp.q * lp.learn_w_mod % o7 == 0)
        mu_u, mu_w = lp.learn_u_mod, lp.learn_w_mod

    check("final u modulus covers ord(3) mod 2^9 5^6",
          U_FINAL_MOD % ORD_FINAL_3 == 0)
    check("final w modulus covers ord(7) mod 2^9 5^6",
          W_FINAL_MOD % ORD_FINAL_7 == 0)

    check("indexed u range is ord(3) kernel period",
          multiplicative_order(3, M12, 4500 * 9900) == U_RANGE)
    check("indexed w range is ord(7) kernel period",
          multiplicative_order(7, M12, 4500 * 9900) == W_RANGE)
    return ok
