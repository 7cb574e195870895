"""Order complexes, Coxeter complexes via parabolic cosets, Weyl-group orbit
complexes on projective coordinate posets, the oriflamme construction, and
type-A buildings over F_q."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import BlueprintError
from .fields import gf


class DimensionTooLarge(BlueprintError):
    pass


class RankTooLarge(BlueprintError):
    pass


class SeedNotSimplex(BlueprintError):
    pass


class TooLarge(BlueprintError):
    pass


# ---------------------------------------------------------------------------
# Posets


class FinitePoset:
    """A finite strict-orderable poset on hashable labels."""

    def __init__(self, elements, leq_pairs):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        self._leq = [[False] * n for _ in range(n)]
        for i in range(n):
            self._leq[i][i] = True
        for a, b in leq_pairs:
            self._leq[self.index[a]][self.index[b]] = True
        # transitive closure
        for k in range(n):
            for i in range(n):
                if self._leq[i][k]:
                    row_k = self._leq[k]
                    row_i = self._leq[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            for j in range(n):
                if i != j and self._leq[i][j] and self._leq[j][i]:
                    raise ValueError("not antisymmetric")

    def __len__(self):
        return len(self.elements)

    def leq(self, a, b):
        return self._leq[self.index[a]][self.index[b]]

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def chains(self):
        """All nonempty strictly increasing chains, as tuples."""
        order = sorted(self.elements,
                       key=lambda x: sum(self._leq[self.index[y]][self.index[x]]
                                         for y in self.elements))
        out = []

        def extend(chain):
            out.append(tuple(chain))
            last = chain[-1]
            for x in order:
                if self.lt(last, x):
                    chain.append(x)
                    extend(chain)
                    chain.pop()

        for x in order:
            extend([x])
        return out

    def height(self, x):
        return max(len(c) for c in self.chains() if c[-1] == x) - 1

    def sup(self, xs):
        """Least upper bound, or None."""
        ubs = [u for u in self.elements if all(self.leq(x, u) for x in xs)]
        mins = [u for u in ubs if not any(self.lt(v, u) for v in ubs)]
        return mins[0] if len(mins) == 1 else None

    def restricted(self, keep):
        keep = set(keep)
        pairs = [(a, b) for a in keep for b in keep if self.leq(a, b)]
        return FinitePoset([x for x in self.elements if x in keep], pairs)

    def maximal(self):
        return [x for x in self.elements
                if not any(self.lt(x, y) for y in self.elements)]

    def minimal(self):
        return [x for x in self.elements
                if not any(self.lt(y, x) for y in self.elements)]


def specialization_poset(space):
    """The strict specialization order of a spectrum-like object, with closed
    points minimal (they are the most special)."""
    labels = space.labels()
    pairs = []
    for i in range(len(labels)):
        for j in range(len(labels)):
            if space.leq(i, j):
                pairs.append((labels[j], labels[i]))
    return FinitePoset(labels, pairs)


def poset_of_space(space):
    """The same order as the space itself: generic points at the bottom."""
    labels = space.labels()
    pairs = [(labels[i], labels[j]) for i in range(len(labels))
             for j in range(len(labels)) if space.leq(i, j)]
    return FinitePoset(labels, pairs)


def posets_isomorphic(p1, p2):
    if len(p1) != len(p2):
        return None
    # order by (down-degree, up-degree) invariants to prune
    def profile(p, x):
        down = sum(p.leq(y, x) for y in p.elements)
        up = sum(p.leq(x, y) for y in p.elements)
        return (down, up)

    prof1 = {x: profile(p1, x) for x in p1.elements}
    prof2 = {x: profile(p2, x) for x in p2.elements}
    if sorted(prof1.values()) != sorted(prof2.values()):
        return None

    mapping = {}
    used = set()

    def backtrack(i):
        if i == len(p1.elements):
            return True
        x = p1.elements[i]
        for y in p2.elements:
            if y in used or prof1[x] != prof2[y]:
                continue
            if any((p1.leq(x, z) != p2.leq(y, mapping[z]))
                   or (p1.leq(z, x) != p2.leq(mapping[z], y))
                   for z in mapping):
                continue
            mapping[x] = y
            used.add(y)
            if backtrack(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if backtrack(0) else None


# ---------------------------------------------------------------------------
# Typed simplicial complexes


class TypedComplex:
    """A finite simplicial complex with one type label per vertex; every
    simplex has pairwise distinct vertex types."""

    def __init__(self, vertices, types, facets):
        self.vertices = tuple(vertices)
        self.types = dict(types)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        facs = {frozenset(f) for f in facets}
        # drop faces that are contained in larger facets
        self.facets = tuple(sorted(
            (f for f in facs if not any(f < g for g in facs)),
            key=lambda f: sorted(self.index[v] for v in f)))
        for f in self.facets:
            tps = [self.types[v] for v in f]
            if len(set(tps)) != len(tps):
                raise ValueError("facet with repeated vertex types")

    def simplices(self):
        out = set()
        for f in self.facets:
            for r in range(1, len(f) + 1):
                out.update(frozenset(c) for c in itertools.combinations(f, r))
        return out

    def f_vector(self):
        counts = {}
        for s in self.simplices():
            counts[len(s) - 1] = counts.get(len(s) - 1, 0) + 1
        return tuple(counts.get(d, 0) for d in range(max(counts) + 1)) \
            if counts else ()

    def chambers(self):
        top = max(len(f) for f in self.facets)
        return [f for f in self.facets if len(f) == top]

    def is_pure(self):
        return len({len(f) for f in self.facets}) == 1

    def panel_chamber_counts(self):
        """For each panel (codimension-1 face of a chamber), the number of
        chambers containing it."""
        chambers = self.chambers()
        panels = {}
        for ch in chambers:
            for v in ch:
                panels.setdefault(ch - {v}, 0)
        for panel in panels:
            panels[panel] = sum(1 for ch in chambers if panel <= ch)
        return panels

    def is_thin(self):
        return self.is_pure() and \
            all(c == 2 for c in self.panel_chamber_counts().values())

    def is_thick(self):
        return self.is_pure() and \
            all(c >= 3 for c in self.panel_chamber_counts().values())

    def type_histogram(self):
        hist = {}
        for v in self.vertices:
            hist[self.types[v]] = hist.get(self.types[v], 0) + 1
        return hist

    def __repr__(self):
        return (f"TypedComplex({len(self.vertices)} vertices, "
                f"{len(self.facets)} facets)")

    def facet_lines(self):
        """The text format: one facet per line, 'type:label' tokens sorted."""
        lines = []
        for f in self.facets:
            toks = sorted(f"{self.types[v]}:{v}" for v in f)
            lines.append(" ".join(toks))
        return sorted(lines)


def tilde_complex(poset, rank=None):
    """Chains of the poset as simplices; vertex types are the ranks (heights
    by default)."""
    if rank is None:
        heights = {x: poset.height(x) for x in poset.elements}
        rank = heights.get
    chains = poset.chains()
    facets = [frozenset(c) for c in chains]
    types = {x: rank(x) for x in poset.elements}
    return TypedComplex(poset.elements, types, facets)


# ---------------------------------------------------------------------------
# The extended complex Delta(X): monotone maps from subset posets


def _subset_poset_elements(k):
    base = list(range(k + 1))
    return [frozenset(s) for r in range(1, k + 2)
            for s in itertools.combinations(base, r)]


def full_complex_maps(poset, max_dim):
    """All order-preserving maps from the face poset of a k-simplex into the
    poset, for k <= max_dim, keyed by dimension."""
    if max_dim > 5:
        raise DimensionTooLarge("max_dim > 5")
    out = {}
    for k in range(max_dim + 1):
        cells = _subset_poset_elements(k)
        cells.sort(key=lambda s: (len(s), sorted(s)))
        maps = []

        def assign(i, current):
            if i == len(cells):
                maps.append(dict(current))
                return
            cell = cells[i]
            for x in poset.elements:
                ok = True
                for prev in cells[:i]:
                    if prev < cell and not poset.leq(current[prev], x):
                        ok = False
                        break
                if ok:
                    current[cell] = x
                    assign(i + 1, current)
                    del current[cell]

        assign(0, {})
        out[k] = maps
    return out


def full_complex_counts_bruteforce(poset, max_dim):
    """Independent oracle: filter all assignments of poset elements to the
    subset lattice for monotonicity."""
    out = {}
    for k in range(max_dim + 1):
        cells = _subset_poset_elements(k)
        count = 0
        for combo in itertools.product(poset.elements, repeat=len(cells)):
            val = dict(zip(cells, combo))
            if all(poset.leq(val[a], val[b])
                   for a in cells for b in cells if a < b):
                count += 1
        out[k] = count
    return out


def sup_map_of_chain(poset, chain):
    """The monotone map I -> x_{max I} attached to a chain."""
    k = len(chain) - 1
    return {s: chain[max(s)] for s in _subset_poset_elements(k)}


def sup_simplex(poset, points):
    """The monotone map I -> sup{x_i : i in I} for an arbitrary vertex tuple;
    raises SeedNotSimplex when some sup is missing."""
    k = len(points) - 1
    out = {}
    for s in _subset_poset_elements(k):
        val = poset.sup([points[i] for i in s])
        if val is None:
            raise SeedNotSimplex(f"no supremum for {sorted(s)}")
        out[s] = val
    return out


# ---------------------------------------------------------------------------
# Coxeter groups of classical type


def _compose(p, q):
    """Permutations as tuples over a symbol domain dict-free: p after q."""
    return tuple(p[i] for i in q)


def _signed_compose(p, q, n):
    """Signed permutations stored as tuples s with s[i] in {+-1..+-n} for
    i = 0..n-1: (p*q)(i) = p(q(i))."""
    out = []
    for i in range(n):
        v = q[i]
        w = p[abs(v) - 1]
        out.append(w if v > 0 else -w)
    return tuple(out)


def _group_closure(generators, compose, identity):
    elems = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for g in frontier:
            for s in generators:
                h = compose(s, g)
                if h not in elems:
                    elems.add(h)
                    new.append(h)
        frontier = new
    return sorted(elems)


def coxeter_group(family, n):
    """Elements and generators of W(A_n) as permutations of {0..n}, W(B_n) =
    W(C_n) as signed permutations, W(D_n) as even-signed permutations."""
    if family == "A":
        ident = tuple(range(n + 1))
        gens = []
        for i in range(n):
            g = list(ident)
            g[i], g[i + 1] = g[i + 1], g[i]
            gens.append(tuple(g))
        elems = _group_closure(gens, _compose, ident)
        return elems, gens, _compose
    if family in ("B", "C"):
        ident = tuple(range(1, n + 1))
        gens = []
        for i in range(n - 1):
            g = list(ident)
            g[i], g[i + 1] = g[i + 1], g[i]
            gens.append(tuple(g))
        flip = list(ident)
        flip[n - 1] = -flip[n - 1]
        gens.append(tuple(flip))
        comp = lambda p, q: _signed_compose(p, q, n)
        elems = _group_closure(gens, comp, ident)
        return elems, gens, comp
    if family == "D":
        ident = tuple(range(1, n + 1))
        gens = []
        for i in range(n - 1):
            g = list(ident)
            g[i], g[i + 1] = g[i + 1], g[i]
            gens.append(tuple(g))
        g = list(ident)
        g[n - 2], g[n - 1] = -ident[n - 1], -ident[n - 2]
        gens.append(tuple(g))
        comp = lambda p, q: _signed_compose(p, q, n)
        elems = _group_closure(gens, comp, ident)
        return elems, gens, comp
    raise ValueError("family must be one of A, B, C, D")


@dataclass
class CoxeterGroupAction:
    family: str
    rank: int
    elements: tuple
    generators: tuple
    compose: object
    vertex_action: object    # (group element, vertex) -> vertex

    def act_on_simplex(self, g, simplex):
        return frozenset(self.vertex_action(g, v) for v in simplex)


def coxeter_complex(family, n):
    """The Coxeter complex: simplices are cosets of proper standard parabolic
    subgroups; chambers correspond to group elements."""
    if n > 5:
        raise RankTooLarge("n > 5")
    elems, gens, comp = coxeter_group(family, n)
    ident = elems[0] if elems[0] == tuple(sorted(elems[0], key=abs)) else None
    if family == "A":
        ident = tuple(range(n + 1))
    else:
        ident = tuple(range(1, n + 1))
    # maximal parabolic subgroup W_{S - {t}} for each generator index t
    cosets_by_type = []
    for t in range(len(gens)):
        sub = _group_closure([g for i, g in enumerate(gens) if i != t],
                             comp, ident)
        seen = {}
        for w in elems:
            coset = frozenset(comp(w, h) for h in sub)
            seen.setdefault(coset, min(coset))
        cosets_by_type.append(seen)
    vertices = []
    types = {}
    for t, seen in enumerate(cosets_by_type):
        for coset in seen:
            v = (t, min(coset))
            vertices.append(v)
            types[v] = t
    coset_of = []
    for t, seen in enumerate(cosets_by_type):
        lookup = {}
        for coset in seen:
            for w in coset:
                lookup[w] = (t, min(coset))
        coset_of.append(lookup)
    facets = [frozenset(coset_of[t][w] for t in range(len(gens)))
              for w in elems]
    cx = TypedComplex(sorted(vertices), types, facets)

    def vact(g, v):
        t, w = v
        return coset_of[t][comp(g, w)]

    action = CoxeterGroupAction(family, n, tuple(elems), tuple(gens), comp,
                                vact)
    return cx, action


# ---------------------------------------------------------------------------
# Weyl orbit complexes inside P^{m-1}


def _ambient_size(family, n):
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[family]


def _coordinate_action(family, n, m):
    """Realize W as permutations of the coordinate labels {1..m}, pairing
    i <-> m+1-i (the standard anti-diagonal form)."""
    if family == "A":
        def act(g, label):
            return g[label - 1] + 1
        return act

    def act(g, label):
        if 2 * label == m + 1:
            return label
        if label <= n:
            v = g[label - 1]
            return v if v > 0 else m + 1 + v
        partner = m + 1 - label
        v = g[partner - 1]
        img_partner = v if v > 0 else m + 1 + v
        return m + 1 - img_partner
    return act


def standard_orbit_seed(family, n):
    """The seed simplex: coordinate flags defined over F1.

    A: the full flag {1} < {1,2} < ... < {1..n} in P^n;
    B/C: the maximal isotropic coordinate flag;
    D: the oriflamme pair sharing dimensions 1..n-2 with both maximal
    isotropic subspaces {1..n} and {1..n-1, n+1}.
    """
    if family in ("A", "B", "C"):
        return [frozenset(range(1, k + 1)) for k in range(1, n + 1)]
    if family == "D":
        seed = [frozenset(range(1, k + 1)) for k in range(1, n - 1)]
        seed.append(frozenset(range(1, n + 1)))
        seed.append(frozenset(list(range(1, n)) + [n + 1]))
        return seed
    raise ValueError("family must be one of A, B, C, D")


def _is_isotropic(subset, family, m):
    if family == "A":
        return True
    for i in subset:
        j = m + 1 - i
        if j == i or j in subset:
            return False
    return True


def weyl_orbit_complex(family, n, seed=None):
    """The orbit of a seed simplex (a set of coordinate-subset points of
    P^{m-1}) under the Weyl group acting on coordinate labels, closed under
    faces. Vertex types are the W-orbit classes."""
    m = _ambient_size(family, n)
    elems, gens, comp = coxeter_group(family, n)
    act = _coordinate_action(family, n, m)
    if seed is None:
        seed = standard_orbit_seed(family, n)
    seed = [frozenset(s) for s in seed]
    for s in seed:
        if not s or not s <= set(range(1, m + 1)):
            raise SeedNotSimplex(f"{sorted(s)} is not a point of P^{m-1}")
        if not _is_isotropic(s, family, m):
            raise SeedNotSimplex(f"{sorted(s)} is not isotropic")
    if len({frozenset(s) for s in seed}) != len(seed):
        raise SeedNotSimplex("seed vertices repeat")

    def act_point(g, pt):
        return frozenset(act(g, i) for i in pt)

    facets = set()
    vertices = set()
    for g in elems:
        img = frozenset(act_point(g, s) for s in seed)
        facets.add(img)
        vertices.update(img)
    # types = orbit classes, numbered deterministically
    orbits = []
    seen = set()
    for v in sorted(vertices, key=lambda s: (len(s), sorted(s))):
        if v in seen:
            continue
        orb = {act_point(g, v) for g in elems} & vertices
        orbits.append(sorted(orb, key=lambda s: (len(s), sorted(s))))
        seen.update(orb)
    types = {}
    for t, orb in enumerate(orbits):
        for v in orb:
            types[v] = t
    labels = sorted(vertices, key=lambda s: (len(s), sorted(s)))
    named = {v: "".join(str(i) for i in sorted(v)) for v in labels}
    cx = TypedComplex([named[v] for v in labels],
                      {named[v]: types[v] for v in labels},
                      [frozenset(named[v] for v in f) for f in facets])
    back = {named[v]: v for v in labels}

    def vact(g, vname):
        return named[act_point(g, back[vname])]

    action = CoxeterGroupAction(family, n, tuple(elems), tuple(gens), comp,
                                vact)
    return cx, action


# ---------------------------------------------------------------------------
# Type-A buildings over F_q


def _rref_subspaces(dim, r, q):
    """Canonical bases (tuples of rows) of all r-dim subspaces of F_q^dim."""
    field = gf(q)
    out = []
    for pivots in itertools.combinations(range(dim), r):
        free_positions = []
        for row, p in enumerate(pivots):
            for col in range(p + 1, dim):
                if col not in pivots:
                    free_positions.append((row, col))
        for values in itertools.product(range(q), repeat=len(free_positions)):
            rows = [[0] * dim for _ in range(r)]
            for row, p in enumerate(pivots):
                rows[row][p] = 1
            for (row, col), v in zip(free_positions, values):
                rows[row][col] = v
            out.append(tuple(tuple(r_) for r_ in rows))
    return out


def _in_rowspace(field, rows, vec):
    vec = list(vec)
    for row in rows:
        p = next((i for i, x in enumerate(row) if x), None)
        if p is None:
            continue
        if vec[p]:
            c = field.mul(vec[p], field.inv(row[p]))
            vec = [field.sub(v, field.mul(c, r)) for v, r in zip(vec, row)]
    return not any(vec)


def _subspace_contains(field, big, small):
    return all(_in_rowspace(field, big, v) for v in small)


def building_type_a(n, q):
    """Flags of proper nonzero subspaces of F_q^{n+1}; chambers are complete
    flags. Vertex types are the dimensions."""
    if n > 3 or q not in (2, 3):
        raise TooLarge("building_type_a supports n <= 3, q in {2, 3}")
    dim = n + 1
    field = gf(q)
    spaces = {r: _rref_subspaces(dim, r, q) for r in range(1, dim)}
    vertices = [(r, s) for r in spaces for s in spaces[r]]
    types = {v: v[0] for v in vertices}
    facets = []

    def extend(flag, r):
        if r == dim:
            facets.append(frozenset((k + 1, s) for k, s in enumerate(flag)))
            return
        prev = flag[-1] if flag else None
        for s in spaces[r]:
            if prev is None or _subspace_contains(field, s, prev):
                flag.append(s)
                extend(flag, r + 1)
                flag.pop()

    extend([], 1)
    return TypedComplex(vertices, types, facets)


def coordinate_apartment(building_cx, n, q):
    """The subcomplex on coordinate subspaces (spans of standard basis
    vectors)."""
    def is_coordinate(v):
        _, rows = v
        return all(sum(1 for x in row if x) == 1 for row in rows)

    keep = [v for v in building_cx.vertices if is_coordinate(v)]
    keepset = set(keep)
    facets = []
    for f in building_cx.facets:
        inter = frozenset(v for v in f if v in keepset)
        if len(inter) == len(f):
            facets.append(inter)
    return TypedComplex(keep, {v: building_cx.types[v] for v in keep}, facets)


# ---------------------------------------------------------------------------
# Typed isomorphism testing


def is_isomorphic_typed(c1, c2):
    """A type-preserving simplicial bijection (up to a bijection of the type
    alphabets), or None. Refutes quickly on f-vector / histogram mismatch."""
    if len(c1.vertices) > 200 or len(c2.vertices) > 200:
        raise TooLarge("too many vertices")
    if len(c1.vertices) != len(c2.vertices):
        return None
    if c1.f_vector() != c2.f_vector():
        return None
    h1, h2 = c1.type_histogram(), c2.type_histogram()
    if sorted(h1.values()) != sorted(h2.values()):
        return None
    facets1 = set(c1.facets)
    facets2 = set(c2.facets)
    if len(facets1) != len(facets2):
        return None

    def vertex_profile(cx, v):
        in_fac = [f for f in cx.facets if v in f]
        return (len(in_fac), tuple(sorted(len(f) for f in in_fac)))

    prof1 = {v: vertex_profile(c1, v) for v in c1.vertices}
    prof2 = {v: vertex_profile(c2, v) for v in c2.vertices}

    types1 = sorted(h1)
    for type_map_images in itertools.permutations(sorted(h2), len(types1)):
        tmap = dict(zip(types1, type_map_images))
        if any(h1[t] != h2[tmap[t]] for t in types1):
            continue
        order = sorted(c1.vertices, key=lambda v: (prof1[v], str(v)))
        mapping = {}
        used = set()

        def backtrack(i):
            if i == len(order):
                image = {frozenset(mapping[v] for v in f) for f in facets1}
                return image == facets2
            v = order[i]
            for w in c2.vertices:
                if w in used:
                    continue
                if c2.types[w] != tmap[c1.types[v]]:
                    continue
                if prof2[w] != prof1[v]:
                    continue
                ok = True
                for u, wu in mapping.items():
                    share1 = any(v in f and u in f for f in facets1)
                    share2 = any(w in f and wu in f for f in facets2)
                    if share1 != share2:
                        ok = False
                        break
                if ok:
                    mapping[v] = w
                    used.add(w)
                    if backtrack(i + 1):
                        return True
                    del mapping[v]
                    used.discard(w)
            return False

        if backtrack(0):
            return {"vertex_map": dict(mapping), "type_map": tmap}
    return None
