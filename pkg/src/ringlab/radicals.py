"""Radicals and unit groups.

For a finite ring the Jacobson radical equals the largest nilpotent ideal,
which is how the primary routine computes it (join of the nilpotent members
of the ideal lattice).  Two independent characterizations, via quasi-regular
elements and via units, are provided as cross-checks and are used heavily by
the test suite.
"""

import numpy as np

from .errors import NotApplicable, InternalInconsistency
from .ideals import (IdealSet, enumerate_ideals, ideal_sum, zero_ideal,
                     unit_ideal, is_nilpotent_ideal)

_CROSSCHECK_LIMIT = 4096


def units_mask(ring):
    """Elements with a two-sided inverse; empty when there is no identity."""
    if ring.one is None:
        return np.zeros(ring.size, dtype=bool)
    one = ring.one
    idx = ring.elements
    out = np.zeros(ring.size, dtype=bool)
    for u in range(ring.size):
        u64 = np.int64(u)
        both = (ring.mul_vec(u64, idx) == one) & (ring.mul_vec(idx, u64) == one)
        out[u] = bool(both.any())
    return out


def quasi_regular_mask(ring):
    """x such that some y solves y + x + yx = 0."""
    if ring.size > _CROSSCHECK_LIMIT:
        raise NotApplicable("quasi-regular scan capped",
                            limit=_CROSSCHECK_LIMIT, size=ring.size)
    idx = ring.elements
    out = np.zeros(ring.size, dtype=bool)
    for x in range(ring.size):
        x64 = np.int64(x)
        val = ring.add_vec(ring.add_vec(idx, x64), ring.mul_vec(idx, x64))
        out[x] = bool((val == ring.zero).any())
    return out


def jacobson_radical(ring, lattice=None):
    """Largest nilpotent ideal, as an IdealSet."""
    if lattice is None:
        lattice = enumerate_ideals(ring)
    acc = zero_ideal(ring)
    for i in range(len(lattice.ideals)):
        if lattice.is_nilpotent_idx(i):
            acc = ideal_sum(acc, lattice.ideals[i])
    if not is_nilpotent_ideal(acc):
        raise InternalInconsistency("join of nilpotent ideals not nilpotent",
                                    ring=ring.label)
    acc.label = "J(%s)" % ring.label
    return acc


def jacobson_via_quasiregular(ring, lattice=None):
    """Largest ideal inside the quasi-regular set.  Cross-check method."""
    q = quasi_regular_mask(ring)
    if lattice is None:
        lattice = enumerate_ideals(ring)
    best = zero_ideal(ring)
    for ideal in lattice.ideals:
        if ideal.size > best.size and not (ideal.mask & ~q).any():
            best = ideal
    return best


def jacobson_via_units(ring, lattice=None):
    """{x : 1 + r x is a unit for every r}.  Cross-check; identity needed."""
    if ring.one is None:
        raise NotApplicable("unit characterization needs an identity",
                            ring=ring.label)
    if ring.size > _CROSSCHECK_LIMIT:
        raise NotApplicable("unit scan capped",
                            limit=_CROSSCHECK_LIMIT, size=ring.size)
    units = units_mask(ring)
    one = np.int64(ring.one)
    idx = ring.elements
    mask = np.zeros(ring.size, dtype=bool)
    for x in range(ring.size):
        vals = ring.add_vec(one, ring.mul_vec(idx, np.int64(x)))
        mask[x] = bool(units[vals].all())
    if lattice is None:
        lattice = enumerate_ideals(ring)
    if mask.tobytes() not in lattice.key_to_idx:
        raise InternalInconsistency("unit characterization is not an ideal",
                                    ring=ring.label)
    return IdealSet(ring, mask)


def prime_radical(ring, lattice=None):
    """Intersection of the proper prime ideals.

    Returns (ideal, degenerate); degenerate is True when no proper prime
    exists, in which case the intersection defaults to the whole ring.
    """
    if lattice is None:
        lattice = enumerate_ideals(ring)
    primes = lattice.prime_indices()
    if not primes:
        return unit_ideal(ring), True
    mask = np.ones(ring.size, dtype=bool)
    for i in primes:
        mask &= lattice.ideals[i].mask
    return IdealSet(ring, mask, label="beta(%s)" % ring.label), False


def j_star(ring, ideal, lattice=None):
    """Intersection of the maximal ideals containing the given ideal.

    Defined here only for rings with identity (maximal ideals then exist
    for every proper ideal); the whole ring comes back when nothing lies
    above, i.e. for the unit ideal.
    """
    if ring.one is None:
        raise NotApplicable("maximal-ideal intersection needs an identity",
                            ring=ring.label)
    if lattice is None:
        lattice = enumerate_ideals(ring)
    i = lattice.idx_of(ideal)
    mask = np.ones(ring.size, dtype=bool)
    hit = False
    for m in lattice.maximal_indices():
        if lattice.leq[i, m]:
            mask &= lattice.ideals[m].mask
            hit = True
    if not hit:
        return unit_ideal(ring)
    return IdealSet(ring, mask)
