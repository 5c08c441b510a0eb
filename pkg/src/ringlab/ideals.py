"""Two-sided ideals: generation, full lattice enumeration, and operations.

Ideals are stored as boolean membership masks over the ring's element
indices.  Generation works without an identity: the ideal generated by a
set G is the additive closure of the orbit of G under left and right
multiplication by the ring's additive generators, which equals
ZG + RG + GR + RGR.

The lattice is enumerated by condensing the multiplication-reachability
graph: elements in the same strongly connected component generate the same
principal ideal, principal ideals are built children first along the
condensation DAG, and the full lattice is the closure of the distinct
principals under pairwise sums.
"""

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import CapacityExceeded, InvalidIdeal
from .rings import additive_closure, is_ideal_mask

DEFAULT_IDEAL_BUDGET = 100_000


class IdealSet:
    """A two-sided ideal as an immutable membership mask."""

    def __init__(self, ring, mask, label=None, check=False):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (ring.size,):
            raise InvalidIdeal("mask length does not match the ring",
                               ring=ring.label)
        if check and not is_ideal_mask(ring, mask):
            raise InvalidIdeal("set is not a two-sided ideal", ring=ring.label)
        self.ring = ring
        self.mask = mask.copy()
        self.mask.setflags(write=False)
        self.label = label
        self._members = None
        self._addgens = None

    @property
    def members(self):
        if self._members is None:
            self._members = np.flatnonzero(self.mask)
        return self._members

    @property
    def size(self):
        return int(self.mask.sum())

    @property
    def key(self):
        return self.mask.tobytes()

    @property
    def is_zero(self):
        return self.size == 1

    @property
    def is_proper(self):
        return self.size < self.ring.size

    def contains(self, x):
        return bool(self.mask[int(x)])

    @property
    def addgens(self):
        """Additive generators of the ideal's underlying group."""
        if self._addgens is None:
            ring = self.ring
            cur = np.zeros(ring.size, dtype=bool)
            cur[ring.zero] = True
            gens = []
            for x in self.members:
                if not cur[x]:
                    gens.append(int(x))
                    cur = additive_closure(ring, [int(x)], cur)
            self._addgens = gens
        return self._addgens

    def __eq__(self, other):
        return (isinstance(other, IdealSet) and self.ring is other.ring
                and self.key == other.key)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        name = self.label or "ideal"
        return "<IdealSet %s (%d of %d)>" % (name, self.size, self.ring.size)


def zero_ideal(ring):
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.zero] = True
    return IdealSet(ring, mask, label="0")


def unit_ideal(ring):
    return IdealSet(ring, np.ones(ring.size, dtype=bool), label="R")


def _orbit(ring, seeds):
    """All elements reachable from seeds by one-sided multiplications."""
    gens = [np.int64(g) for g in ring.addgens]
    reached = np.zeros(ring.size, dtype=bool)
    frontier = np.unique(np.asarray(seeds, dtype=np.int64))
    reached[frontier] = True
    while frontier.size:
        nxt = []
        for g in gens:
            nxt.append(ring.mul_vec(g, frontier))
            nxt.append(ring.mul_vec(frontier, g))
        if not nxt:
            break
        cand = np.unique(np.concatenate(nxt))
        new = cand[~reached[cand]]
        reached[new] = True
        frontier = new
    return reached


def ideal_generate(ring, gens):
    """Membership mask of the two-sided ideal generated by ``gens``."""
    gens = np.asarray(gens, dtype=np.int64).ravel()
    if gens.size == 0:
        return zero_ideal(ring).mask.copy()
    orbit = _orbit(ring, gens)
    return additive_closure(ring, np.flatnonzero(orbit))


def principal_ideal(ring, x, label=None):
    return IdealSet(ring, ideal_generate(ring, [x]),
                    label=label or "gen(%s)" % ring.element_label(x))


# ---------------------------------------------------------------------------
# operations


def ideal_sum(a, b):
    ring = a.ring
    extra = b.members[~a.mask[b.members]]
    mask = additive_closure(ring, extra, a.mask)
    return IdealSet(ring, mask)


def ideal_intersect(a, b):
    return IdealSet(a.ring, a.mask & b.mask)


def ideal_product(a, b):
    """AB = additive closure of pairwise products of additive generators."""
    ring = a.ring
    ga = np.asarray(a.addgens, dtype=np.int64)
    gb = np.asarray(b.addgens, dtype=np.int64)
    if ga.size == 0 or gb.size == 0:
        return zero_ideal(ring)
    prods = ring.mul_vec(ga[:, None], gb[None, :]).ravel()
    return IdealSet(ring, additive_closure(ring, np.unique(prods)))


def product_subset_of(a, b, pmask):
    """AB is inside P (P additively closed) iff all generator products are."""
    ring = a.ring
    for x in a.addgens:
        hit = ring.mul_vec(np.int64(x), np.asarray(b.addgens, dtype=np.int64))
        if not pmask[hit].all():
            return False
    return True


def colon_elem_mask(ring, imask, a, side="right"):
    """(I : a) as a mask; right means {x : x a in I}, left {x : a x in I}."""
    idx = ring.elements
    a = np.int64(a)
    if side == "right":
        return imask[ring.mul_vec(idx, a)]
    return imask[ring.mul_vec(a, idx)]


def colon_subset_mask(ring, imask, xs, side="right"):
    out = np.ones(ring.size, dtype=bool)
    for x in np.asarray(xs, dtype=np.int64).ravel():
        out &= colon_elem_mask(ring, imask, x, side=side)
    return out


def colon_ideal_mask(ring, pmask, t_ideal, side="right"):
    """(P : T) for an ideal T; membership needs only T's additive generators."""
    return colon_subset_mask(ring, pmask, t_ideal.addgens, side=side)


def is_nilpotent_ideal(ideal):
    """I is nilpotent iff its power chain reaches the zero ideal."""
    cur = ideal
    while True:
        if cur.is_zero:
            return True
        nxt = ideal_product(cur, ideal)
        if nxt.size >= cur.size:
            return False
        cur = nxt


def is_modular_ideal(ring, imask):
    """Some e acts as identity mod I on both sides.

    r -> er - r is additive in r, so e works iff it works on the ring's
    additive generators; that makes the scan over candidates linear.
    """
    ok = np.ones(ring.size, dtype=bool)
    idx = ring.elements
    for g in ring.addgens:
        g64 = np.int64(g)
        ok &= imask[ring.sub_vec(ring.mul_vec(idx, g64), g64)]
        ok &= imask[ring.sub_vec(ring.mul_vec(g64, idx), g64)]
        if not ok.any():
            return False
    return bool(ok.any())


def minimal_generating_set(ideal):
    """Small generating set: greedy cover, then drop redundant members."""
    ring = ideal.ring
    gens = []
    cur = zero_ideal(ring).mask
    for x in ideal.members:
        if not cur[x]:
            gens.append(int(x))
            cur = ideal_generate(ring, gens)
    # prune: a generator already produced by the others is dropped
    changed = True
    while changed and len(gens) > 1:
        changed = False
        for g in list(gens):
            rest = [h for h in gens if h != g]
            if ideal_generate(ring, rest)[g]:
                gens = rest
                changed = True
                break
    return gens


def s_finite_witness(ideal, subset):
    """Finite witness (s, F) with s*I inside the ideal generated by F.

    In a finite ring every ideal is finitely generated, so F can be a
    minimal generating set of I itself and any s works; we return the
    smallest member of S.
    """
    s = int(min(subset.members))
    return s, minimal_generating_set(ideal)


# ---------------------------------------------------------------------------
# lattice enumeration


class IdealLattice:
    """All two-sided ideals of a ring, canonically ordered by (size, mask)."""

    def __init__(self, ring, ideals, principal_of):
        self.ring = ring
        self.ideals = ideals
        self.principal_of = principal_of
        self.key_to_idx = {ideal.key: i for i, ideal in enumerate(ideals)}
        self._leq = None
        self._prod = {}
        self._sum = {}
        self._nilpotent = None
        self._prime = None

    def __len__(self):
        return len(self.ideals)

    def idx_of(self, ideal):
        try:
            return self.key_to_idx[ideal.key]
        except KeyError:
            raise InvalidIdeal("ideal is not in the lattice",
                               ring=self.ring.label)

    @property
    def zero_idx(self):
        return self.key_to_idx[zero_ideal(self.ring).key]

    @property
    def top_idx(self):
        return len(self.ideals) - 1

    @property
    def leq(self):
        """leq[i, j] is True when ideal i is contained in ideal j."""
        if self._leq is None:
            masks = np.array([ideal.mask for ideal in self.ideals])
            m = len(self.ideals)
            leq = np.zeros((m, m), dtype=bool)
            for i in range(m):
                leq[i] = ~(masks[i][None, :] & ~masks).any(axis=1)
            self._leq = leq
        return self._leq

    def product_idx(self, i, j):
        key = (i, j)
        if key not in self._prod:
            p = ideal_product(self.ideals[i], self.ideals[j])
            self._prod[key] = self.idx_of(p)
        return self._prod[key]

    def sum_idx(self, i, j):
        key = (min(i, j), max(i, j))
        if key not in self._sum:
            s = ideal_sum(self.ideals[key[0]], self.ideals[key[1]])
            self._sum[key] = self.idx_of(s)
        return self._sum[key]

    def is_maximal_idx(self, i):
        if i == self.top_idx:
            return False
        above = self.leq[i] & ~np.eye(len(self.ideals), dtype=bool)[i]
        strict = np.flatnonzero(above)
        return all(j == self.top_idx for j in strict)

    def is_prime_idx(self, i):
        if self._prime is None:
            self._prime = {}
        if i not in self._prime:
            self._prime[i] = self._compute_prime(i)
        return self._prime[i]

    def _compute_prime(self, i):
        if i == self.top_idx:
            return False
        m = len(self.ideals)
        inside = self.leq[:, i]
        for a in range(m):
            if inside[a]:
                continue
            for b in range(m):
                if inside[b]:
                    continue
                if self.leq[self.product_idx(a, b), i]:
                    return False
        return True

    def is_nilpotent_idx(self, i):
        if self._nilpotent is None:
            self._nilpotent = {}
        if i not in self._nilpotent:
            self._nilpotent[i] = is_nilpotent_ideal(self.ideals[i])
        return self._nilpotent[i]

    def is_superfluous_idx(self, i):
        """I + B = R forces B = R, checked against the whole lattice."""
        top = self.top_idx
        for b in range(len(self.ideals)):
            if b != top and self.sum_idx(i, b) == top:
                return False
        return True

    def maximal_indices(self):
        return [i for i in range(len(self.ideals)) if self.is_maximal_idx(i)]

    def prime_indices(self):
        return [i for i in range(len(self.ideals)) if self.is_prime_idx(i)]


def _condensation_order(labels, n_comp, edges_src, edges_dst):
    """Children-first order of the condensation DAG and child lists."""
    cs = labels[edges_src]
    cd = labels[edges_dst]
    keep = cs != cd
    pairs = np.unique(np.stack([cs[keep], cd[keep]], axis=1), axis=0) \
        if keep.any() else np.zeros((0, 2), dtype=np.int64)
    children = [[] for _ in range(n_comp)]
    parents = [[] for _ in range(n_comp)]
    for s, d in pairs:
        children[s].append(int(d))
        parents[d].append(int(s))
    # Kahn on reversed edges so components with no children come first
    pending = [len(c) for c in children]
    order = [c for c in range(n_comp) if pending[c] == 0]
    head = 0
    while head < len(order):
        d = order[head]
        head += 1
        for p in parents[d]:
            pending[p] -= 1
            if pending[p] == 0:
                order.append(p)
    return order, children


def enumerate_ideals(ring, budget=DEFAULT_IDEAL_BUDGET):
    """Every two-sided ideal of the ring as an IdealLattice.

    Raises CapacityExceeded (with the ideals found so far attached as
    ``partial``) if more than ``budget`` ideals show up.
    """
    n = ring.size
    idx = ring.elements
    gens = ring.addgens

    # multiplication-reachability graph
    srcs, dsts = [], []
    for g in gens:
        g64 = np.int64(g)
        srcs.append(idx)
        dsts.append(ring.mul_vec(g64, idx))
        srcs.append(idx)
        dsts.append(ring.mul_vec(idx, g64))
    if srcs:
        src = np.concatenate(srcs)
        dst = np.concatenate(dsts)
    else:
        src = np.zeros(0, dtype=np.int64)
        dst = np.zeros(0, dtype=np.int64)
    graph = csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)),
                       shape=(n, n))
    n_comp, labels = connected_components(graph, directed=True,
                                          connection="strong")
    order, children = _condensation_order(labels, n_comp, src, dst)

    comp_members = [[] for _ in range(n_comp)]
    for x in range(n):
        comp_members[labels[x]].append(x)

    # principal ideal of each component, children first
    trivial = np.zeros(n, dtype=bool)
    trivial[ring.zero] = True
    comp_ideal = [None] * n_comp
    comp_count = np.zeros(n_comp, dtype=np.int64)
    for c in order:
        base = trivial
        base_count = 1
        for d in children[c]:
            if comp_count[d] > base_count:
                base = comp_ideal[d]
                base_count = comp_count[d]
        if base_count == n:
            comp_ideal[c] = base
            comp_count[c] = n
            continue
        merged = np.zeros(n, dtype=bool)
        merged[comp_members[c]] = True
        for d in children[c]:
            merged |= comp_ideal[d]
        extra = np.flatnonzero(merged & ~base)
        if extra.size == 0:
            comp_ideal[c] = base
            comp_count[c] = base_count
        else:
            comp_ideal[c] = additive_closure(ring, extra, base)
            comp_count[c] = int(comp_ideal[c].sum())

    by_key = {}
    principal_key = [None] * n_comp
    for c in range(n_comp):
        k = comp_ideal[c].tobytes()
        principal_key[c] = k
        if k not in by_key:
            by_key[k] = comp_ideal[c]

    # close under sums
    work = list(by_key.values())
    while work:
        a = work.pop()
        for b in list(by_key.values()):
            extra = np.flatnonzero(b & ~a)
            if extra.size == 0:
                continue
            u = additive_closure(ring, extra, a)
            k = u.tobytes()
            if k not in by_key:
                if len(by_key) >= budget:
                    partial = sorted(by_key.values(),
                                     key=lambda m: (int(m.sum()), m.tobytes()))
                    raise CapacityExceeded(
                        "ideal lattice larger than budget",
                        partial=[IdealSet(ring, m) for m in partial],
                        budget=budget, ring=ring.label)
                by_key[k] = u
                work.append(u)

    full = np.ones(n, dtype=bool)
    by_key.setdefault(full.tobytes(), full)
    if len(by_key) > budget:
        partial = sorted(by_key.values(),
                         key=lambda m: (int(m.sum()), m.tobytes()))
        raise CapacityExceeded("ideal lattice larger than budget",
                               partial=[IdealSet(ring, m) for m in partial],
                               budget=budget, ring=ring.label)

    masks = sorted(by_key.values(), key=lambda m: (int(m.sum()), m.tobytes()))
    ideals = [IdealSet(ring, m) for m in masks]
    key_to_idx = {ideal.key: i for i, ideal in enumerate(ideals)}
    principal_of = np.array(
        [key_to_idx[principal_key[labels[x]]] for x in range(n)],
        dtype=np.int64)
    return IdealLattice(ring, ideals, principal_of)
