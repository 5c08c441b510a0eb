"""CheckResult semantics, error contracts, and differential spot checks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import naive
from ringlab.errors import (
    CapacityExceeded,
    InvalidIdeal,
    InvalidParameter,
    NotApplicable,
    NotDisjoint,
)
from ringlab.exprs import build_ring, parse_ring_expr
from ringlab.ideals import IdealSet, enumerate_ideals, principal_ideal
from ringlab.radicals import jacobson_radical
from ringlab.subsets import SubsetS, enumerate_subsets, generated_subset
from ringlab.predicates import (
    is_J_ideal,
    is_S_J_ideal,
    is_S_n_ideal,
    is_S_prime,
    is_n_ideal,
    is_right_S_J_ideal,
    is_right_S_prime,
    related_checks,
)


@pytest.fixture(scope="module")
def z36():
    ring = build_ring(parse_ring_expr("Z36"))
    lattice = enumerate_ideals(ring)
    return ring, lattice, jacobson_radical(ring, lattice)


def test_plain_j_ideal_counterexample(z36):
    ring, lattice, jac = z36
    ideal = IdealSet(ring, principal_ideal(ring, 4).mask)
    r = is_J_ideal(ring, ideal, jacobson=jac, lattice=lattice)
    assert not r.verdict
    assert r.counterexample == (2, 2)


def test_witness_is_smallest_working_s(z36):
    ring, lattice, jac = z36
    ideal = IdealSet(ring, principal_ideal(ring, 4).mask)
    subset = SubsetS(ring, [1, 3, 9, 27], kind="mulclosed")
    r = is_S_J_ideal(ring, ideal, subset, jacobson=jac, lattice=lattice)
    assert r.verdict and r.witness_s == 3
    # replay: 3 clears every pair, and nothing smaller in S does
    nr = naive.NaiveRing(ring)
    iset = frozenset(map(int, ideal.members))
    njac = naive.jacobson(nr)
    assert naive._sj_violation(nr, iset, njac, 3) is None
    assert naive._sj_violation(nr, iset, njac, 1) is not None


def test_false_table_covers_every_s():
    ring = build_ring(parse_ring_expr("Z12"))
    lattice = enumerate_ideals(ring)
    jac = jacobson_radical(ring, lattice)
    ideal = IdealSet(ring, principal_ideal(ring, 4).mask)
    subset = generated_subset(ring, [5])          # {1, 5}
    r = is_S_J_ideal(ring, ideal, subset, jacobson=jac, lattice=lattice)
    assert not r.verdict
    assert r.witness_s is None
    assert r.counterexample == ((1, (2, 2)), (5, (2, 2)))
    covered = [s for s, _ in r.counterexample]
    assert covered == sorted(map(int, subset.members))

    per_pair = is_S_J_ideal(ring, ideal, subset, jacobson=jac,
                            lattice=lattice, mode="per-pair-s")
    assert not per_pair.verdict
    assert per_pair.counterexample == (2, 2)
    # the reported pair really has no rescuing s at all
    nr = naive.NaiveRing(ring)
    a, b = per_pair.counterexample
    for s in map(int, subset.members):
        assert not (nr.mul[s][a] in naive.jacobson(nr)
                    or nr.mul[s][b] in frozenset(map(int, ideal.members)))


def test_fixed_true_implies_per_pair_true(corpus):
    done = 0
    for ctx in corpus.contexts:
        if not ctx.comm_ident or done >= 25:
            continue
        for I in ctx.ideals[:2]:
            for S in ctx.subsets[:2]:
                if I.mask[S.members].any():
                    continue
                f = is_S_J_ideal(ctx.ring, I, S, jacobson=ctx.jac,
                                 lattice=ctx.lattice)
                if not f.verdict:
                    continue
                p = is_S_J_ideal(ctx.ring, I, S, jacobson=ctx.jac,
                                 lattice=ctx.lattice, mode="per-pair-s")
                assert p.verdict
                done += 1
    assert done >= 10


def test_not_disjoint_is_an_error_not_a_verdict(z36):
    ring, lattice, jac = z36
    ideal = IdealSet(ring, principal_ideal(ring, 3).mask)
    subset = SubsetS(ring, [1, 3, 9, 27], kind="mulclosed")
    with pytest.raises(NotDisjoint):
        is_S_J_ideal(ring, ideal, subset, jacobson=jac, lattice=lattice)
    with pytest.raises(NotDisjoint):
        is_S_prime(ring, ideal, subset)


def test_improper_ideal_rejected(z36):
    ring, lattice, jac = z36
    full = IdealSet(ring, np.ones(36, dtype=bool))
    with pytest.raises(InvalidIdeal):
        is_J_ideal(ring, full, jacobson=jac, lattice=lattice)


def test_commutativity_and_identity_guards():
    mat = build_ring(parse_ring_expr("M(2, Z2)"))
    lattice = enumerate_ideals(mat)
    jac = jacobson_radical(mat, lattice)
    ideal = IdealSet(mat, lattice.ideals[0].mask)
    subset = SubsetS(mat, [mat.one], kind="mulclosed")
    with pytest.raises(NotApplicable):
        is_S_J_ideal(mat, ideal, subset, jacobson=jac, lattice=lattice)
    with pytest.raises(NotApplicable):
        is_n_ideal(mat, ideal, lattice=lattice)

    sub = build_ring(parse_ring_expr("idealring(Z36, gen(2))"))
    assert sub.one is None
    nlat = enumerate_ideals(sub)
    zero = IdealSet(sub, nlat.ideals[nlat.zero_idx].mask)
    ms = SubsetS(sub, [int(sub.pos[4])], kind="msystem")
    with pytest.raises(NotApplicable):
        is_right_S_J_ideal(sub, zero, ms, lattice=nlat,
                           method="elementwise")


def test_capacity_guards():
    big = build_ring(parse_ring_expr("Z67 x Z67"))
    zero = IdealSet(big, principal_ideal(big, 0).mask)
    subset = SubsetS(big, [big.one], kind="mulclosed")
    with pytest.raises(CapacityExceeded):
        is_S_J_ideal(big, zero, subset)

    mat = build_ring(parse_ring_expr("M(2, Z6)"))   # 1296 > 300
    lattice = enumerate_ideals(mat)
    jac = jacobson_radical(mat, lattice)
    ideal = IdealSet(mat, lattice.ideals[0].mask)
    subset = SubsetS(mat, [mat.one], kind="mulclosed")
    with pytest.raises(CapacityExceeded):
        is_right_S_J_ideal(mat, ideal, subset, lattice=lattice, jacobson=jac,
                           method="elementwise")


def test_parameter_guards(z36):
    ring, lattice, jac = z36
    ideal = IdealSet(ring, principal_ideal(ring, 4).mask)
    subset = SubsetS(ring, [1], kind="mulclosed")
    with pytest.raises(InvalidParameter):
        is_S_J_ideal(ring, ideal, subset, mode="sometimes")
    with pytest.raises(InvalidParameter):
        is_right_S_J_ideal(ring, ideal, subset, lattice=lattice,
                           jacobson=jac, method="magic")


def test_related_checks_bundle(z36):
    ring, lattice, jac = z36
    ideal = IdealSet(ring, principal_ideal(ring, 4).mask)
    subset = SubsetS(ring, [1, 3, 9, 27], kind="mulclosed")
    out = related_checks(ring, ideal, subset, lattice=lattice, jacobson=jac)
    assert out["check"].verdict
    assert out["witness_s"] == 3
    assert out["inside_jacobson_colon"]
    assert not out["superfluous"]
    assert sorted(map(int, out["colon_by_witness"].members)) \
        == list(range(0, 36, 4))
    assert sorted(map(int, out["colon_by_witness_ideal"].members)) \
        == list(range(0, 36, 4))
    assert sorted(map(int, out["j_star"].members)) == list(range(0, 36, 2))


def test_right_forms_on_matrix_ring():
    mat = build_ring(parse_ring_expr("M(2, Z2)"))
    lattice = enumerate_ideals(mat)
    jac = jacobson_radical(mat, lattice)
    nr = naive.NaiveRing(mat)
    njac = naive.jacobson(nr)
    nideals = naive.all_ideals(nr)
    zero = IdealSet(mat, lattice.ideals[lattice.zero_idx].mask)
    subset = SubsetS(mat, [mat.one], kind="mulclosed")
    iset = frozenset(map(int, zero.members))
    sm = [mat.one]
    r = is_right_S_prime(mat, zero, subset, lattice=lattice)
    nv, nw, _ = naive.right_s_prime(nr, iset, sm, ideals=nideals)
    assert r.verdict == nv and r.witness_s == nw
    r = is_right_S_J_ideal(mat, zero, subset, lattice=lattice, jacobson=jac)
    nv, nw, _ = naive.right_s_j(nr, iset, sm, njac, ideals=nideals)
    assert r.verdict == nv and r.witness_s == nw


@settings(max_examples=40, deadline=None)
@given(n=st.integers(min_value=2, max_value=30),
       ideal_seed=st.integers(min_value=0, max_value=29),
       subset_seed=st.integers(min_value=1, max_value=29))
def test_sj_matches_naive_on_random_zn(n, ideal_seed, subset_seed):
    ring = build_ring(parse_ring_expr("Z%d" % n))
    lattice = enumerate_ideals(ring)
    jac = jacobson_radical(ring, lattice)
    ideal = IdealSet(ring, principal_ideal(ring, ideal_seed % n).mask)
    if not ideal.is_proper:
        return
    try:
        subset = generated_subset(ring, [subset_seed % n])
    except Exception:
        return
    if ideal.mask[subset.members].any():
        return
    nr = naive.NaiveRing(ring)
    iset = frozenset(map(int, ideal.members))
    sm = sorted(map(int, subset.members))
    njac = naive.jacobson(nr)

    r = is_S_J_ideal(ring, ideal, subset, jacobson=jac, lattice=lattice)
    nv, nw, ntab = naive.s_j_check(nr, iset, sm, njac)
    assert r.verdict == nv and r.witness_s == nw
    if not nv:
        assert r.counterexample == tuple(ntab)

    rp = is_S_J_ideal(ring, ideal, subset, jacobson=jac, lattice=lattice,
                      mode="per-pair-s")
    nvp, ncxp = naive.s_j_per_pair(nr, iset, sm, njac)
    assert rp.verdict == nvp and rp.counterexample == ncxp

    rn = is_S_n_ideal(ring, ideal, subset, lattice=lattice)
    nv, nw, _ = naive.s_n_check(nr, iset, sm)
    assert rn.verdict == nv and rn.witness_s == nw

    rs = is_S_prime(ring, ideal, subset)
    nv, nw, _ = naive.s_prime_check(nr, iset, sm)
    assert rs.verdict == nv and rs.witness_s == nw
