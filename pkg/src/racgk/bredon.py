"""Cohomology of the clique poset with representation-ring coefficients.

The order complex of the clique poset carries the coefficient system
that assigns to a chain the representation ring of its smallest clique;
the first face map restricts along the inclusion of the two smallest
cliques, the others just drop a clique.  Cohomology is read off from
Smith normal forms of the differentials.

An independent route to the same vanishing statement goes through the
two-term interval complex and its tensor powers, also built here.
"""

from .graphs import enumerate_spherical, poset_chains, subset_key
from .intlinalg import (invariant_factors, is_zero, kernel_basis, mat_mul,
                        ColumnSolver)
from .kring import STAR, restrict_to_clique


class CochainComplex:
    """Finite complex of free Z-modules given by its differentials.

    diffs[k] maps degree k to degree k+1; composability and d o d = 0
    are checked at construction.
    """

    def __init__(self, ranks, diffs, labels=None):
        self.ranks = list(ranks)
        self.diffs = [[list(r) for r in d] for d in diffs]
        self.labels = labels
        if len(self.diffs) != max(len(self.ranks) - 1, 0):
            raise ValueError("expected %d differentials, got %d"
                             % (max(len(self.ranks) - 1, 0), len(self.diffs)))
        for k, d in enumerate(self.diffs):
            rows = len(d)
            cols = len(d[0]) if d else 0
            if d and cols != self.ranks[k]:
                raise ValueError("d^%d has %d columns, expected %d"
                                 % (k, cols, self.ranks[k]))
            if rows != self.ranks[k + 1]:
                raise ValueError("d^%d has %d rows, expected %d"
                                 % (k, rows, self.ranks[k + 1]))
        for k in range(len(self.diffs) - 1):
            if self.ranks[k] and not is_zero(mat_mul(self.diffs[k + 1],
                                                     self.diffs[k])):
                raise ValueError("d^%d o d^%d != 0" % (k + 1, k))

    @property
    def top_degree(self):
        return len(self.ranks) - 1

    def differential(self, k):
        """d^k as a matrix; the top differential is the zero map."""
        if k < len(self.diffs):
            return self.diffs[k]
        return []


def cohomology(complex_):
    """Free rank and torsion coefficients of H^k for every degree.

    H^k = ker d^k / im d^{k-1}; the image sits inside the kernel, which
    is a direct summand, so the torsion of H^k is the set of invariant
    factors of d^{k-1} exceeding 1.
    """
    results = []
    prev_factors = []
    for k, rank in enumerate(complex_.ranks):
        d = complex_.differential(k)
        rank_dk = len(invariant_factors(d)) if d else 0
        rank_prev = len(prev_factors)
        free = rank - rank_dk - rank_prev
        torsion = [f for f in prev_factors if f > 1]
        results.append({"degree": k, "free_rank": free, "torsion": torsion})
        prev_factors = invariant_factors(d) if d else []
    return results


def build_bredon_complex(graph, cliques=None, chains=None):
    """Cochain complex of the clique poset with coefficients the
    representation rings of the clique subgroups.

    Degree-k basis: (chain, monomial) with the chain a strictly
    increasing (k+1)-tuple of cliques and the monomial a subset of the
    chain's smallest clique.  The first face restricts the coefficient,
    the remaining faces alternate in sign.
    """
    if cliques is None:
        cliques = enumerate_spherical(graph)
    top = max((bin(c).count("1") for c in cliques), default=0)
    if chains is None:
        chains = poset_chains(graph, cliques, top)
    mono_key = lambda m: subset_key(graph, m)

    def chain_key(ch):
        return tuple(subset_key(graph, c) for c in ch)

    bases = []
    index_maps = []
    for per_degree in chains:
        basis = []
        for ch in sorted(per_degree, key=chain_key):
            for mono in sorted(_submask_list(ch[0]), key=mono_key):
                basis.append((ch, mono))
        bases.append(basis)
        index_maps.append({bm: i for i, bm in enumerate(basis)})

    diffs = []
    for k in range(len(bases) - 1):
        rows = len(bases[k + 1])
        cols = len(bases[k])
        d = [[0] * cols for _ in range(rows)]
        for r, (chain, mono) in enumerate(bases[k + 1]):
            # face 0 drops the smallest clique: the coefficient on the
            # remaining chain lives over chain[1] and restricts down;
            # a monomial L of chain[1] hits mono iff L & chain[0] == mono
            face0 = chain[1:]
            j0, j1 = chain[0], chain[1]
            for ell in _submask_list(j1):
                if ell & j0 == mono:
                    d[r][index_maps[k][(face0, ell)]] += 1
            for i in range(1, len(chain)):
                face = chain[:i] + chain[i + 1:]
                sign = -1 if i % 2 else 1
                d[r][index_maps[k][(face, mono)]] += sign
        diffs.append(d)
    labels = [[(tuple(graph.subset_labels(c) for c in ch),
                graph.subset_labels(m)) for ch, m in basis]
              for basis in bases]
    return CochainComplex([len(b) for b in bases], diffs, labels)


def _submask_list(mask):
    out = []
    sub = mask
    while True:
        out.append(sub)
        if sub == 0:
            return out
        sub = (sub - 1) & mask


def degree_zero_basis(graph, cliques):
    """Basis of the degree-0 cochains: (clique, monomial) pairs in the
    order used by build_bredon_complex."""
    basis = []
    for c in sorted(cliques, key=lambda c: subset_key(graph, c)):
        for mono in sorted(_submask_list(c), key=lambda m: subset_key(graph, m)):
            basis.append((c, mono))
    return basis


class LimitLattice:
    """Compatible families of virtual representations, one per clique,
    as the kernel of the degree-0 differential."""

    def __init__(self, graph, cliques, basis_labels, basis_columns):
        self.graph = graph
        self.cliques = cliques
        self.basis_labels = basis_labels
        self.basis_columns = basis_columns

    @property
    def rank(self):
        return len(self.basis_columns)

    def coordinates_solver(self):
        return ColumnSolver(self.basis_columns)


def inverse_limit(graph, cliques=None, complex_=None):
    """Kernel of the degree-0 differential of the Bredon complex."""
    if cliques is None:
        cliques = enumerate_spherical(graph)
    if complex_ is None:
        complex_ = build_bredon_complex(graph, cliques)
    d0 = complex_.differential(0)
    if d0:
        cols = kernel_basis(d0)
    else:
        n = complex_.ranks[0]
        cols = [[int(i == j) for i in range(n)] for j in range(n)]
    basis = [(c, m) for c in sorted(cliques, key=lambda c: subset_key(graph, c))
             for m in sorted(_submask_list(c), key=lambda m: subset_key(graph, m))]
    return LimitLattice(graph, cliques, basis, cols)


def family_vector(graph, limit, element_by_clique):
    """Coordinates in the degree-0 basis of a family of rep-ring
    elements indexed by clique."""
    vec = []
    for clique, mono in limit.basis_labels:
        vec.append(element_by_clique[clique].coeffs.get(mono, 0))
    return vec


def restriction_family(graph, limit, a):
    """The compatible family obtained by restricting a K-ring element to
    every clique; lands in the limit lattice."""
    fam = {}
    for clique in limit.cliques:
        fam[clique] = restrict_to_clique(a, clique)
    return family_vector(graph, limit, fam)


def monomial_family(graph, limit, monomial_mask):
    """Family of restrictions of one character monomial of the ambient
    elementary abelian quotient (support an arbitrary vertex subset)."""
    vec = []
    for clique, mono in limit.basis_labels:
        vec.append(1 if monomial_mask & clique == mono else 0)
    return vec


def rho_surjectivity(graph, cliques=None):
    """Checks that restriction families of the 2^n ambient character
    monomials span the limit lattice with index 1."""
    if cliques is None:
        cliques = enumerate_spherical(graph)
    limit = inverse_limit(graph, cliques)
    solver = limit.coordinates_solver()
    columns = []
    seen = set()
    for mono in range(1 << graph.n):
        vec = tuple(monomial_family(graph, limit, mono))
        if vec in seen:
            continue
        seen.add(vec)
        coords = solver.solve(list(vec))
        if coords is None:
            return {"rank": limit.rank, "image_rank": None, "index_one": False,
                    "surjective": False,
                    "detail": "a monomial family falls outside the limit lattice"}
        columns.append(coords)
    mat = [[col[i] for col in columns] for i in range(limit.rank)]
    factors = invariant_factors(mat)
    surjective = (len(factors) == limit.rank
                  and all(f == 1 for f in factors))
    return {
        "rank": limit.rank,
        "image_rank": len(factors),
        "invariant_factors": factors,
        "index_one": all(f == 1 for f in factors),
        "surjective": surjective,
    }


def clique_basis_isomorphism(graph, cliques=None):
    """SNF of the map sending the clique basis of the K-ring onto the
    limit lattice; an isomorphism shows up as all invariant factors 1."""
    from .kring import KRingElement

    if cliques is None:
        cliques = enumerate_spherical(graph)
    limit = inverse_limit(graph, cliques)
    solver = limit.coordinates_solver()
    columns = []
    for c in cliques:
        a = KRingElement.monomial(graph, c, basis=STAR)
        vec = restriction_family(graph, limit, a)
        coords = solver.solve(vec)
        if coords is None:
            return {"isomorphism": False,
                    "detail": "clique monomial family outside the limit lattice"}
        columns.append(coords)
    mat = [[col[i] for col in columns] for i in range(limit.rank)]
    factors = invariant_factors(mat)
    iso = (len(factors) == limit.rank == len(cliques)
           and all(f == 1 for f in factors))
    return {"rank": limit.rank, "invariant_factors": factors,
            "isomorphism": iso}


def interval_complex():
    """Relative two-term complex of the reflection action on an
    interval: rank two in degree zero (the representation ring of C2 on
    the fixed vertex), rank one in degree one (the free edge orbit),
    differential the restriction (1 1)."""
    return CochainComplex([2, 1], [[[1, 1]]])


def tensor_complex(c1, c2):
    """Tensor product of cochain complexes of free modules, with the
    usual sign on the second factor's differential."""
    top = c1.top_degree + c2.top_degree
    bases = []
    for k in range(top + 1):
        basis = []
        for i in range(len(c1.ranks)):
            j = k - i
            if 0 <= j < len(c2.ranks):
                for a in range(c1.ranks[i]):
                    for b in range(c2.ranks[j]):
                        basis.append((i, a, b))
        bases.append(basis)
    index_maps = [{t: i for i, t in enumerate(b)} for b in bases]
    diffs = []
    for k in range(top):
        rows = len(bases[k + 1])
        cols = len(bases[k])
        d = [[0] * cols for _ in range(rows)]
        for col, (i, a, b) in enumerate(bases[k]):
            j = k - i
            d1 = c1.differential(i)
            if d1:
                for r in range(len(d1)):
                    if d1[r][a]:
                        d[index_maps[k + 1][(i + 1, r, b)]][col] += d1[r][a]
            d2 = c2.differential(j)
            if d2:
                sign = -1 if i % 2 else 1
                for r in range(len(d2)):
                    if d2[r][b]:
                        d[index_maps[k + 1][(i, a, r)]][col] += sign * d2[r][b]
        diffs.append(d)
    return CochainComplex([len(b) for b in bases], diffs)


def interval_tensor_kunneth(n, cap=6):
    """Cohomology of the n-fold tensor power of the interval complex;
    the expected answer is a single Z in degree zero."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise ValueError("n=%d exceeds the configured cap %d (ranks grow as 3^n)"
                         % (n, cap))
    power = interval_complex()
    for _ in range(n - 1):
        power = tensor_complex(power, interval_complex())
    coh = cohomology(power)
    ok = (coh[0]["free_rank"] == 1 and not coh[0]["torsion"]
          and all(c["free_rank"] == 0 and not c["torsion"] for c in coh[1:]))
    return {"n": n, "ranks": power.ranks, "cohomology": coh, "ok": ok}
