"""Differential sweep: every predicate next to its table-walking twin.

The naive module recomputes everything from scratch out of n-by-n Python
multiplication tables, so agreement here is evidence the vectorized
implementations compute the advertised relations and not something that
merely resembles them.  Witness and counterexample ordering is pinned on
both sides (smallest s, lexicographically least pair), so those are
compared too wherever the shapes match.
"""

from ringlab import naive
from ringlab import predicates as P


def _tab(pairs):
    if pairs is None:
        return None
    return tuple((int(s), (int(a), int(b))) for s, (a, b) in pairs)


def oracle_sweep(corpus, size_cap=200):
    """Compare fast and naive verdicts on every instance whose ring has at
    most size_cap elements.  Returns (comparison count, mismatch list)."""
    checked = 0
    bad = []

    def expect(cond, *key):
        nonlocal checked
        checked += 1
        if not cond:
            bad.append(key)

    for ctx in corpus.contexts:
        ring = ctx.ring
        if ring.size > size_cap:
            continue
        nr = naive.NaiveRing(ring)
        njac = naive.jacobson(nr)
        expect(frozenset(map(int, ctx.jac.members)) == njac,
               ring.label, "jacobson")
        nideals = naive.all_ideals(nr)
        expect({frozenset(map(int, i.members)) for i in ctx.lattice.ideals}
               == set(nideals), ring.label, "ideal lattice")
        comm = ring.commutative and ring.one is not None
        nbeta = naive.nilpotent_elements(nr) if comm else None

        for I in ctx.ideals:
            iset = frozenset(map(int, I.members))
            r = P.is_J_ideal(ring, I, jacobson=ctx.jac, lattice=ctx.lattice)
            nv, ncx = naive.is_j_ideal(nr, iset, njac)
            expect(r.verdict == nv and r.counterexample == ncx,
                   ring.label, "j", I.label)
            if comm:
                r = P.is_n_ideal(ring, I, beta=ctx.beta[0],
                                 lattice=ctx.lattice)
                nv, ncx = naive.is_n_ideal(nr, iset, nbeta)
                expect(r.verdict == nv and r.counterexample == ncx,
                       ring.label, "n", I.label)
            for S in ctx.subsets:
                if I.mask[S.members].any():
                    continue
                sm = sorted(int(x) for x in S.members)
                if comm:
                    r = P.is_S_J_ideal(ring, I, S, jacobson=ctx.jac,
                                       lattice=ctx.lattice)
                    nv, nw, ntab = naive.s_j_check(nr, iset, sm, njac)
                    ok = r.verdict == nv and r.witness_s == nw
                    if not nv:
                        ok = ok and _tab(r.counterexample) == _tab(ntab)
                    expect(ok, ring.label, "s-j", I.label, S.label)

                    rp = P.is_S_J_ideal(ring, I, S, jacobson=ctx.jac,
                                        lattice=ctx.lattice,
                                        mode="per-pair-s")
                    nv, ncx = naive.s_j_per_pair(nr, iset, sm, njac)
                    expect(rp.verdict == nv and rp.counterexample == ncx,
                           ring.label, "s-j/per-pair", I.label, S.label)

                    r = P.is_S_n_ideal(ring, I, S, beta=ctx.beta[0],
                                       lattice=ctx.lattice)
                    nv, nw, ntab = naive.s_n_check(nr, iset, sm, nbeta)
                    ok = r.verdict == nv and r.witness_s == nw
                    if not nv:
                        ok = ok and _tab(r.counterexample) == _tab(ntab)
                    expect(ok, ring.label, "s-n", I.label, S.label)

                    r = P.is_S_prime(ring, I, S)
                    nv, nw, ntab = naive.s_prime_check(nr, iset, sm)
                    ok = r.verdict == nv and r.witness_s == nw
                    if not nv:
                        ok = ok and _tab(r.counterexample) == _tab(ntab)
                    expect(ok, ring.label, "s-prime", I.label, S.label)

                r = P.is_right_S_prime(ring, I, S, lattice=ctx.lattice)
                nv, nw, _ = naive.right_s_prime(nr, iset, sm, ideals=nideals)
                expect(r.verdict == nv and r.witness_s == nw,
                       ring.label, "right-s-prime", I.label, S.label)

                r = P.is_right_S_J_ideal(ring, I, S, lattice=ctx.lattice,
                                         jacobson=ctx.jac)
                nv, nw, _ = naive.right_s_j(nr, iset, sm, njac,
                                            ideals=nideals)
                expect(r.verdict == nv and r.witness_s == nw,
                       ring.label, "right-s-j", I.label, S.label)

                if ring.one is not None:
                    r = P.is_right_S_J_ideal(ring, I, S, lattice=ctx.lattice,
                                             jacobson=ctx.jac,
                                             method="elementwise")
                    nv, nw, ntab = naive.right_s_j_elementwise(
                        nr, iset, sm, njac)
                    ok = r.verdict == nv and r.witness_s == nw
                    if not nv:
                        ok = ok and _tab(r.counterexample) == _tab(ntab)
                    expect(ok, ring.label, "right-s-j/elementwise",
                           I.label, S.label)
    return checked, bad
