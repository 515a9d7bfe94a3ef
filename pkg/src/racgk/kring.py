"""The equivariant K-theory ring of a right-angled Coxeter group and its
augmentation-ideal completion.

Additively the ring is free on the cliques of the defining graph.  Two
bases are carried:

* star basis: monomials in the degree-one generators with each
  generator squaring to 1; products of generators attached to
  non-adjacent vertices reduce via  s*t* = s* + t* - 1.  Products are
  normalized by rewriting until every monomial support is a clique.
* bar basis (each bar generator is the star generator minus 1):
  monomial products follow closed structure constants and need no
  rewriting.  The two multiplications serve as mutual oracles.

The completion at the augmentation ideal keeps the constant term exact
and truncates every other coefficient 2-adically.
"""

from .graphs import GraphError, enumerate_spherical, subset_key, validate_decomposition
from .intlinalg import Lattice

STAR = "star"
BAR = "bar"


class KRingError(ValueError):
    pass


class KRingElement:
    """Sparse integer combination of clique-indexed monomials."""

    __slots__ = ("graph", "basis", "coeffs")

    def __init__(self, graph, basis, coeffs):
        if basis not in (STAR, BAR):
            raise KRingError("unknown basis %r" % basis)
        self.graph = graph
        self.basis = basis
        self.coeffs = {}
        for k, c in coeffs.items():
            if not graph.is_clique(k):
                raise KRingError("support %r is not a clique"
                                 % (graph.subset_labels(k),))
            if c:
                self.coeffs[k] = c

    @classmethod
    def zero(cls, graph, basis=STAR):
        return cls(graph, basis, {})

    @classmethod
    def one(cls, graph, basis=STAR):
        return cls(graph, basis, {0: 1})

    @classmethod
    def generator(cls, graph, label, basis=STAR):
        return cls(graph, basis, {graph.mask_of([label]): 1})

    @classmethod
    def monomial(cls, graph, mask, basis=STAR, coeff=1):
        return cls(graph, basis, {mask: coeff})

    def __eq__(self, other):
        return (isinstance(other, KRingElement)
                and self.graph == other.graph
                and self.basis == other.basis
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.graph, self.basis, frozenset(self.coeffs.items())))

    def __repr__(self):
        return "KRingElement(%s, %r)" % (self.basis, self.coeffs)

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return KRingElement(self.graph, self.basis, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) - c
        return KRingElement(self.graph, self.basis, out)

    def __neg__(self):
        return KRingElement(self.graph, self.basis,
                            {k: -c for k, c in self.coeffs.items()})

    def scale(self, n):
        return KRingElement(self.graph, self.basis,
                            {k: n * c for k, c in self.coeffs.items()})

    def _check(self, other, basis=True):
        if self.graph != other.graph:
            raise KRingError("graph mismatch")
        if basis and self.basis != other.basis:
            raise KRingError("basis mismatch: %s vs %s"
                             % (self.basis, other.basis))


def _normalize_star(graph, terms):
    """Rewrite until every monomial support is a clique.

    Non-clique monomial with lexicographically smallest non-adjacent
    pair {s, t} in its support rewrites as
        m_K -> m_{K-t} + m_{K-s} - m_{K-s-t}.
    """
    out = {}
    pending = dict(terms)
    while pending:
        mask = min(pending)
        coeff = pending.pop(mask)
        if not coeff:
            continue
        pair = _smallest_nonadjacent_pair(graph, mask)
        if pair is None:
            out[mask] = out.get(mask, 0) + coeff
            continue
        s, t = pair
        for sub, sign in ((mask & ~(1 << t), 1),
                          (mask & ~(1 << s), 1),
                          (mask & ~(1 << s) & ~(1 << t), -1)):
            pending[sub] = pending.get(sub, 0) + sign * coeff
    return {k: c for k, c in out.items() if c}


def _smallest_nonadjacent_pair(graph, mask):
    verts = graph.members(mask)
    for i, s in enumerate(verts):
        for t in verts[i + 1:]:
            if not graph.has_edge(s, t):
                return s, t
    return None


def multiply_star(a, b):
    a._check(b)
    if a.basis != STAR or b.basis != STAR:
        raise KRingError("multiply_star needs star-basis operands")
    raw = {}
    for k, ck in a.coeffs.items():
        for l, cl in b.coeffs.items():
            m = k ^ l
            raw[m] = raw.get(m, 0) + ck * cl
    return KRingElement(a.graph, STAR, _normalize_star(a.graph, raw))


def bar_structure_constant(graph, j, k):
    """(mask, coefficient) of the product of two bar monomials, or None
    when the union is not a clique (the product is zero)."""
    union = j | k
    if not graph.is_clique(union):
        return None
    overlap = bin(j & k).count("1")
    return union, (-2) ** overlap


def multiply_bar(a, b):
    a._check(b)
    if a.basis != BAR or b.basis != BAR:
        raise KRingError("multiply_bar needs bar-basis operands")
    out = {}
    for k, ck in a.coeffs.items():
        for l, cl in b.coeffs.items():
            sc = bar_structure_constant(a.graph, k, l)
            if sc is None:
                continue
            m, c = sc
            out[m] = out.get(m, 0) + c * ck * cl
    return KRingElement(a.graph, BAR, out)


def multiply(a, b):
    if a.basis == STAR:
        return multiply_star(a, b)
    return multiply_bar(a, b)


def _submasks(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def convert_basis(a, target):
    """Change between the star and bar bases.

    Star monomial on J = sum of bar monomials over subsets of J; bar
    monomial on J = alternating sum of star monomials over subsets.
    Subsets of a clique are cliques, so no renormalization is needed."""
    if target not in (STAR, BAR):
        raise KRingError("unknown basis %r" % target)
    if a.basis == target:
        return a
    out = {}
    for k, c in a.coeffs.items():
        kbits = bin(k).count("1")
        for sub in _submasks(k):
            if target == BAR:
                sign = 1
            else:
                sign = -1 if (kbits - bin(sub).count("1")) % 2 else 1
            out[sub] = out.get(sub, 0) + sign * c
    return KRingElement(a.graph, target, out)


def restrict_to_clique(a, target):
    """Component of the restriction family at a clique: star monomials
    intersect their support with the target.  Realizes the comparison
    map into the representation ring of the clique subgroup."""
    from .repring import RepRingElement

    if not a.graph.is_clique(target):
        raise KRingError("restriction target %r is not a clique"
                         % (a.graph.subset_labels(target),))
    star = convert_basis(a, STAR)
    out = {}
    for k, c in star.coeffs.items():
        m = k & target
        out[m] = out.get(m, 0) + c
    return RepRingElement(target, out)


def augmentation(a):
    """Dimension homomorphism to Z: sum of star coefficients,
    equivalently the bar constant term."""
    if a.basis == BAR:
        return a.coeffs.get(0, 0)
    return sum(a.coeffs.values())


def presentation_report(graph):
    """Generators, relations, clique basis and rank of the ring."""
    cliques = enumerate_spherical(graph)
    nonedges = [(graph.labels[i], graph.labels[j])
                for i in range(graph.n) for j in range(i + 1, graph.n)
                if not graph.has_edge(i, j)]
    star_relations = (["%s*^2 - 1" % v for v in graph.labels]
                      + ["%s*%s* - %s* - %s* + 1" % (s, t, s, t)
                         for s, t in nonedges])
    bar_relations = (["%s~(%s~ + 2)" % (v, v) for v in graph.labels]
                     + ["%s~%s~" % (s, t) for s, t in nonedges])
    return {
        "generators": list(graph.labels),
        "star_relations": star_relations,
        "bar_relations": bar_relations,
        "clique_basis": [list(graph.subset_labels(c)) for c in cliques],
        "rank": len(cliques),
        "k1_rank": 0,
    }


def ideal_power(graph, k, cliques=None):
    """HNF lattice of the k-th power of the augmentation ideal, in bar
    coordinates on the clique basis."""
    if k < 1:
        raise KRingError("ideal power needs k >= 1")
    if cliques is None:
        cliques = enumerate_spherical(graph)
    index = {c: i for i, c in enumerate(cliques)}
    d = len(cliques)
    gens = [1 << graph.index[v] for v in graph.labels]

    def times_gen(vec_pairs, gen):
        out = {}
        for mask, c in vec_pairs:
            sc = bar_structure_constant(graph, gen, mask)
            if sc is None:
                continue
            m, const = sc
            out[m] = out.get(m, 0) + const * c
        return [(m, c) for m, c in out.items() if c]

    # degree-1 generators: each bar generator times each basis monomial
    current = []
    for g in gens:
        for c in cliques:
            vec = times_gen([(c, 1)], g)
            if vec:
                current.append(vec)
    for _ in range(k - 1):
        nxt = []
        for vec in current:
            for g in gens:
                prod = times_gen(vec, g)
                if prod:
                    nxt.append(prod)
        current = _hnf_pairs(graph, cliques, index, nxt)
    rows = [_dense(index, d, vec) for vec in current]
    return Lattice(d, rows)


def _dense(index, d, pairs):
    row = [0] * d
    for mask, c in pairs:
        row[index[mask]] = c
    return row


def _hnf_pairs(graph, cliques, index, vecs):
    d = len(cliques)
    lat = Lattice(d, [_dense(index, d, v) for v in vecs])
    return [[(cliques[i], x) for i, x in enumerate(row) if x]
            for row in lat.basis]


class CompletedElement:
    """Element of the completed ring: exact constant term plus one
    residue mod 2^precision per non-empty clique."""

    __slots__ = ("graph", "precision", "constant", "coeffs")

    def __init__(self, graph, precision, constant, coeffs):
        if precision < 1:
            raise KRingError("precision must be >= 1")
        self.graph = graph
        self.precision = precision
        self.constant = constant
        mod = 1 << precision
        self.coeffs = {}
        for k, c in coeffs.items():
            if k == 0:
                raise KRingError("constant term must go in `constant`")
            if not graph.is_clique(k):
                raise KRingError("support %r is not a clique"
                                 % (graph.subset_labels(k),))
            r = c % mod
            if r:
                self.coeffs[k] = r

    def __eq__(self, other):
        return (isinstance(other, CompletedElement)
                and self.graph == other.graph
                and self.precision == other.precision
                and self.constant == other.constant
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return ("CompletedElement(p=%d, const=%d, %r)"
                % (self.precision, self.constant, self.coeffs))


def complete(a, precision):
    """Truncate a ring element into the completed ring."""
    bar = convert_basis(a, BAR)
    coeffs = {k: c for k, c in bar.coeffs.items() if k}
    return CompletedElement(a.graph, precision, bar.coeffs.get(0, 0), coeffs)


def completed_multiply(a, b):
    if a.graph != b.graph:
        raise KRingError("graph mismatch")
    if a.precision != b.precision:
        raise KRingError("precision mismatch: %d vs %d"
                         % (a.precision, b.precision))
    out = {}
    for k, ck in list(a.coeffs.items()):
        for l, cl in list(b.coeffs.items()):
            sc = bar_structure_constant(a.graph, k, l)
            if sc is None:
                continue
            m, c = sc
            out[m] = out.get(m, 0) + c * ck * cl
    for k, c in a.coeffs.items():
        out[k] = out.get(k, 0) + b.constant * c
    for k, c in b.coeffs.items():
        out[k] = out.get(k, 0) + a.constant * c
    return CompletedElement(a.graph, a.precision, a.constant * b.constant, out)


def project_to_part(a, subgraph):
    """Coordinate projection onto the ring of a full subgraph: bar
    monomials supported outside the subgraph go to zero."""
    bar = convert_basis(a, BAR)
    keep = a.graph.mask_of(subgraph.labels)
    out = {}
    for k, c in bar.coeffs.items():
        if k & ~keep:
            continue
        out[subgraph.mask_of(a.graph.subset_labels(k))] = c
    res = KRingElement(subgraph, BAR, out)
    return convert_basis(res, a.basis)


def include_from_part(a, graph):
    """Monomial-inclusion section: bar monomials of the subgraph ring
    are bar monomials of the big ring (cliques stay cliques)."""
    bar = convert_basis(a, BAR)
    out = {graph.mask_of(a.graph.subset_labels(k)): c
           for k, c in bar.coeffs.items()}
    res = KRingElement(graph, BAR, out)
    return convert_basis(res, a.basis)


def random_element(graph, cliques, rng, basis=STAR, terms=3, coeff_bound=5):
    """Seeded random sparse element, for property and oracle checks."""
    coeffs = {}
    for _ in range(rng.randint(1, terms)):
        c = rng.choice(cliques)
        coeffs[c] = coeffs.get(c, 0) + rng.randint(-coeff_bound, coeff_bound)
    return KRingElement(graph, basis, coeffs)


def mayer_vietoris_check(graph, part1, part2, rng, samples=20):
    """Rank inclusion-exclusion plus a randomized check that the
    coordinate projections are ring maps split by monomial inclusion."""
    g1, g2, g3 = validate_decomposition(graph, part1, part2)
    d = len(enumerate_spherical(graph))
    d1 = len(enumerate_spherical(g1))
    d2 = len(enumerate_spherical(g2))
    d3 = len(enumerate_spherical(g3))
    rank_ok = (d == d1 + d2 - d3)
    cliques = enumerate_spherical(graph)
    proj_ok = True
    split_ok = True
    for sub in (g1, g2):
        sub_cliques = enumerate_spherical(sub)
        for _ in range(samples):
            a = random_element(graph, cliques, rng, basis=BAR)
            b = random_element(graph, cliques, rng, basis=BAR)
            pa, pb = project_to_part(a, sub), project_to_part(b, sub)
            if project_to_part(multiply_bar(a, b), sub) != multiply_bar(pa, pb):
                proj_ok = False
            x = random_element(sub, sub_cliques, rng, basis=BAR)
            y = random_element(sub, sub_cliques, rng, basis=BAR)
            ix, iy = include_from_part(x, graph), include_from_part(y, graph)
            if include_from_part(multiply_bar(x, y), graph) != multiply_bar(ix, iy):
                split_ok = False
            if project_to_part(ix, sub) != x:
                split_ok = False
    return {
        "ranks": {"whole": d, "part1": d1, "part2": d2, "intersection": d3},
        "rank_inclusion_exclusion": rank_ok,
        "projection_is_ring_map": proj_ok,
        "section_splits": split_ok,
        "ok": rank_ok and proj_ok and split_ok,
    }


def element_to_json_dict(a, graph=None):
    g = a.graph
    return {
        "basis": a.basis,
        "ambient": list(g.labels),
        "terms": [{"monomial": list(g.subset_labels(k)), "coeff": str(c)}
                  for k, c in sorted(a.coeffs.items(),
                                     key=lambda kv: subset_key(g, kv[0]))],
    }
