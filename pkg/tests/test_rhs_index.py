import random

import numpy as np
import pytest

from mulpersist.constants import M12, U_RANGE, W_RANGE
from mulpersist.rhs_index import RhsIndex, _mulmod_vec_scalar


def test_mulmod_matches_bigint():
    rng = random.Random(1)
    m = M12
    vec = np.array([rng.randrange(m) for _ in range(1000)], dtype=np.int64)
    for _ in range(20):
        s = rng.randrange(m)
        got = _mulmod_vec_scalar(vec, s, m)
        assert all(int(g) == int(v) * s % m for g, v in zip(got, vec))


def test_small_index_lookup():
    idx = RhsIndex(73, 12, 24)          # full period rectangle mod 73
    for u in range(12):
        for w in range(24):
            assert (u, w) in idx.lookup(pow(3, u, 73) * pow(7, w, 73) % 73)
    assert len(idx) == 12 * 24


def test_main_index_injective_rectangle(index):
    # 3^u 7^w mod m_12 is injective on [0,9900) x [0,900): the identity
    # appears exactly once and random residues resolve uniquely
    assert index.lookup(1) == [(0, 0)]
    assert index.multiplicity(1) == 1
    rng = random.Random(7)
    for _ in range(200):
        u = rng.randrange(U_RANGE)
        w = rng.randrange(W_RANGE)
        residue = pow(3, u, M12) * pow(7, w, M12) % M12
        assert index.lookup(residue) == [(u, w)]


def test_lookup_many(index):
    residues = np.array(
        [pow(3, 5, M12) * pow(7, 3, M12) % M12, 0, 1], dtype=np.int64)
    hits = dict(index.lookup_many(residues))
    assert hits[0] == [(5, 3)]
    assert hits[2] == [(0, 0)]
    assert 1 not in hits                # 3^u 7^w is invertible, never 0


def test_guards():
    with pytest.raises(ValueError):
        RhsIndex(1, 10, 10)
    with pytest.raises(ValueError):
        RhsIndex(1 << 47, 10, 10)
