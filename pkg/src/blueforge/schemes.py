"""Graded blueprints and Proj, chart-glued blue schemes, projective spaces,
closed subschemes from integral relations, and topological fibre products."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .core import (ONE, ZERO, Blueprint, BlueprintError, BlueprintMorphism,
                   MonomialBackend, additive_closure, is_prime_ideal,
                   localize)
from .spectra import SpecPoint, SpecSpace, residue_field, spec
from . import counting


class EmptyIrrelevantComplement(BlueprintError):
    pass


class GradedBlueprint:
    """A monomial blueprint with nonnegative generator degrees; coefficient
    elements sit in degree 0 and every relation must be homogeneous."""

    def __init__(self, blueprint, degrees):
        if blueprint.backend.kind != "monomial":
            raise BlueprintError("graded blueprints use the monomial backend")
        self.blueprint = blueprint
        self.degrees = dict(degrees)
        for name in blueprint.backend.gens:
            if self.degrees.get(name, -1) < 0:
                raise BlueprintError(f"missing or negative degree for {name}")
        for l, r in blueprint.relations:
            degs = {self.term_degree(t) for t in l + r}
            if len(degs) > 1:
                raise BlueprintError(
                    f"inhomogeneous relation {blueprint.render_sum(l)} = "
                    f"{blueprint.render_sum(r)}")

    def term_degree(self, term):
        _, exps = term
        return sum(e * self.degrees[n]
                   for n, e in zip(self.blueprint.backend.gens, exps))

    def positive_generators(self):
        return [n for n in self.blueprint.backend.gens if self.degrees[n] > 0]

    def fq_points(self, q):
        return counting.projective_fq_points(self.blueprint, q)

    def __repr__(self):
        return f"Graded({self.blueprint!r})"


class ProjSpace(SpecSpace):
    """Homogeneous primes not containing the whole irrelevant part, with the
    specialization order.

    Closures V(p) are counted on the ambient model with the point's variables
    forced to vanish; the quotient cone itself is never materialized (it may
    carry non-unit monomial identifications outside the backend's reach)."""

    projective = True

    def __init__(self, graded, points, complete=True):
        super().__init__(graded.blueprint, points, complete)
        self.graded = graded

    def ambient_blueprint(self):
        return self.graded.blueprint

    def closure_vanishing(self, i):
        backend = self.blueprint.backend
        names = set()
        for g in self.points[i].ideal.minimal:
            for name, e in zip(backend.gens, g[1]):
                if e:
                    names.add(name)
        return tuple(sorted(names))

    def closure_blueprint(self, i):
        raise BlueprintError("projective closures are counted on the ambient"
                             " model; no affine closure blueprint")

    def counting_rank(self, i):
        if len(self.blueprint.backend.gens) > 8:
            raise BlueprintError("ambient too large for counting")
        dead = self.closure_vanishing(i)
        qs = counting.SAMPLE_Q
        counts = [(q, counting.projective_fq_points(self.blueprint, q, dead))
                  for q in qs]
        poly = counting.fit_polynomial(counts)
        if poly is None:
            raise BlueprintError("closure counts are not polynomial in q")
        return poly.degree

    def torus_certificate_at(self, i):
        """The projective closure is a point (rank-0 torus) iff one variable
        survives and every relation dies on the closure."""
        backend = self.blueprint.backend
        dead = set(self.closure_vanishing(i))
        live = [n for n in backend.gens if n not in dead]
        if len(live) != 1:
            return None

        def killed(term):
            return any(e and name in dead
                       for name, e in zip(backend.gens, term[1]))

        for l, r in self.blueprint.relations:
            nl = [t for t in l if not killed(t)]
            nr = [t for t in r if not killed(t)]
            if sorted(nl) != sorted(nr):
                return None
        syms = set(backend.coeff.backend.symbols)
        if syms == {ZERO, ONE} and not backend.coeff.relations:
            return (0, "F1")
        if syms == {ZERO, ONE, "-1"}:
            return (0, "F1^2")
        return None


def proj(graded, budget=None):
    """Homogeneous primes not containing all positive-degree elements."""
    budget = budget or graded.blueprint.budget
    positive = graded.positive_generators()
    if not positive:
        raise EmptyIrrelevantComplement("no positive-degree generators")
    blueprint = graded.blueprint
    backend = blueprint.backend
    candidates = [n for n in backend.gens if n not in backend.inverted]
    points = []
    complete = True
    seen = set()
    for r in range(len(candidates) + 1):
        for sub in itertools.combinations(candidates, r):
            elems = [backend.gen_element(n) for n in sub]
            ideal = additive_closure(blueprint, elems, budget)
            if ideal.saturated != "exact":
                complete = False
                continue
            if ideal.minimal in seen:
                continue
            seen.add(ideal.minimal)
            if not ideal.is_proper():
                continue
            if all(ideal.contains(backend.gen_element(n)) for n in positive):
                continue
            if is_prime_ideal(blueprint, ideal) is True:
                points.append(SpecPoint(ideal))
    points.sort(key=lambda p: (len(p.ideal.minimal), p.generator_names()))
    return ProjSpace(graded, points, complete)


def closed_subscheme_from_integer_relations(ambient, relations, budget=None):
    """Strengthen the pre-addition by relations valid in the integral model."""
    if isinstance(ambient, GradedBlueprint):
        base = ambient.blueprint
        new = Blueprint(base.backend, list(base.relations) + list(relations),
                        budget=budget or base.budget,
                        name=f"{base.name or 'B'}+rels")
        return GradedBlueprint(new, ambient.degrees)
    new = Blueprint(ambient.backend,
                    list(ambient.relations) + list(relations),
                    budget=budget or ambient.budget,
                    name=f"{ambient.name or 'B'}+rels")
    return new


# ---------------------------------------------------------------------------
# Chart-glued blue schemes


@dataclass(frozen=True)
class ChartGluing:
    """U_i localized at invert_i is identified with U_j localized at invert_j
    via gen_images: generators of chart j as monomials of localized chart i."""
    i: int
    j: int
    invert_i: str
    invert_j: str
    gen_images: dict


class BlueScheme:
    """Finitely many affine charts glued along principal opens."""

    def __init__(self, charts, gluings, name=None, graded_model=None):
        self.charts = tuple(charts)
        self.gluings = tuple(gluings)
        self.name = name
        self.graded_model = graded_model
        self._points = None

    def fq_points(self, q):
        if self.graded_model is not None:
            return self.graded_model.fq_points(q)
        total = 0
        for i, chart in enumerate(self.charts):
            lower = [g for g in self.gluings if g.i == i and g.j < i]
            for f in counting.fq_morphisms(chart, q):
                vals = [f.apply(chart.backend.gen_element(g.invert_i))
                        for g in lower]
                if all(v == "0" for v in vals):
                    total += 1
        return total

    def point_space(self, budget=None):
        if self._points is None:
            self._points = _glue_points(self, budget)
        return self._points

    def __repr__(self):
        return f"BlueScheme({self.name or len(self.charts)})"


class GluedSpace:
    """The colimit of the chart spectra, with the glued specialization order."""

    def __init__(self, scheme, reps, order):
        self.scheme = scheme
        self.reps = tuple(reps)        # representative (chart, point index)
        self._order = order            # dict (a, b) -> bool on rep indices
        self.chart_spaces = scheme._chart_spaces

    def __len__(self):
        return len(self.reps)

    def leq(self, a, b):
        return self._order[(a, b)]

    def lt(self, a, b):
        return a != b and self._order[(a, b)]

    def labels(self):
        out = []
        for ci, pi in self.reps:
            out.append(f"U{ci}:{self.chart_spaces[ci].points[pi].label()}")
        return out

    def closed_points(self):
        return [a for a in range(len(self.reps))
                if not any(self.lt(a, b) for b in range(len(self.reps)))]

    def covers(self):
        out = []
        n = len(self.reps)
        for a in range(n):
            for b in range(n):
                if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b)
                                             for c in range(n)):
                    out.append((a, b))
        return out


def _gluing_morphism(scheme, g):
    """chart_j -> chart_i localized at invert_i, on generators."""
    src = scheme.charts[g.j]
    loc = localize(scheme.charts[g.i],
                   [scheme.charts[g.i].backend.gen_element(g.invert_i)])
    images = {name: loc.backend.normalize(img)
              for name, img in g.gen_images.items()}
    for c in src.backend.coeff.backend.symbols:
        images.setdefault(c, loc.backend.coeff_element(c))
    return BlueprintMorphism(src, loc, images), loc


def _glue_points(scheme, budget=None):
    spaces = [spec(c, budget) for c in scheme.charts]
    scheme._chart_spaces = spaces
    nodes = [(ci, pi) for ci, sp in enumerate(spaces)
             for pi in range(len(sp.points))]
    index = {node: k for k, node in enumerate(nodes)}
    parent = list(range(len(nodes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for g in scheme.gluings:
        morph, _loc = _gluing_morphism(scheme, g)
        src_backend = scheme.charts[g.j].backend
        for pi, p in enumerate(spaces[g.i].points):
            inv_elem = scheme.charts[g.i].backend.gen_element(g.invert_i)
            if p.ideal.contains(inv_elem):
                continue
            # Variables of chart j whose image lies in the extended prime.
            vars_j = []
            for name in src_backend.gens:
                img = morph.apply(src_backend.gen_element(name))
                coeff, exps = img
                in_p = coeff != ZERO and any(
                    e > 0 and p.ideal.contains(
                        scheme.charts[g.i].backend.gen_element(n2))
                    for n2, e in zip(scheme.charts[g.i].backend.gens, exps))
                if in_p:
                    vars_j.append(name)
            pj = _point_with_vars(spaces[g.j], frozenset(vars_j))
            if pj is not None:
                union(index[(g.i, pi)], index[(g.j, pj)])
    classes = {}
    for node in nodes:
        classes.setdefault(find(index[node]), []).append(node)
    reps = sorted(min(v) for v in classes.values())
    order = {}
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            le = False
            ca = classes[find(index[ra])]
            cb = classes[find(index[rb])]
            for (ci, pi) in ca:
                for (cj, pj) in cb:
                    if ci == cj and spaces[ci].leq(pi, pj):
                        le = True
            order[(a, b)] = le
    return GluedSpace(scheme, reps, order)


def _point_with_vars(space, varnames):
    for i, p in enumerate(space.points):
        names = set()
        backend = space.blueprint.backend
        for g in p.ideal.minimal:
            for n, e in zip(backend.gens, g[1]):
                if e:
                    names.add(n)
        if names == set(varnames):
            return i
    return None


def check_triple_overlaps(scheme, budget=None):
    """Composite gluing maps agree with direct ones on generators, inside the
    doubly localized charts."""
    by_pair = {(g.i, g.j): g for g in scheme.gluings}
    for gij in scheme.gluings:
        for gjk in scheme.gluings:
            if gij.j != gjk.i:
                continue
            direct = by_pair.get((gij.i, gjk.j))
            if direct is None:
                continue
            i, j, k = gij.i, gij.j, gjk.j
            chart_i = scheme.charts[i]
            bi = chart_i.backend
            double = localize(chart_i, [bi.gen_element(gij.invert_i),
                                        _as_element(bi, direct.invert_i)])
            fj, _ = _gluing_morphism(scheme, gij)
            fk_direct, _ = _gluing_morphism(scheme, direct)
            src_k = scheme.charts[k].backend
            for name in src_k.gens:
                via_j_img = gjk.gen_images[name]
                composite = _push_monomial(scheme.charts[j].backend, via_j_img,
                                           fj, double)
                direct_img = double.backend.normalize(
                    fk_direct.apply(src_k.gen_element(name)))
                if composite != direct_img:
                    return False
    return True


def _as_element(backend, name):
    return backend.gen_element(name)


def _push_monomial(src_backend, mono, morph, target):
    coeff, exps = mono  # raw exponents in src generator order
    acc = target.backend.coeff_element(coeff)
    for name, e in zip(src_backend.gens, exps):
        if e:
            img = target.backend.normalize(morph.apply(src_backend.gen_element(name)))
            acc = target.backend.mul(acc, target.backend.power(img, e))
    return acc


def projective_space(coeff_blueprint, n, budget=None, name=None):
    """P^n as a chart-glued blue scheme with the standard affine cover.

    Chart i has generators x_{k|i} (= x_k / x_i) for k != i; U_i and U_j are
    glued along x_{j|i} resp. x_{i|j} with x_{k|j} = x_{k|i} * x_{j|i}^{-1}.
    """
    if n < 0:
        raise BlueprintError("n must be nonnegative")
    name = name or f"P{n}"
    charts = []
    gen_names = []
    for i in range(n + 1):
        gens = tuple(f"x{k}_{i}" for k in range(n + 1) if k != i)
        gen_names.append(gens)
        charts.append(Blueprint(MonomialBackend(coeff_blueprint, gens),
                                budget=budget, name=f"{name}.U{i}"))
    gluings = []
    for i in range(n + 1):
        for j in range(n + 1):
            if i == j:
                continue
            bi = charts[i].backend
            images = {}
            inv_index = bi.gens.index(f"x{j}_{i}")
            for k in range(n + 1):
                if k == j:
                    continue
                exps = [0] * len(bi.gens)
                exps[inv_index] -= 1
                if k != i:
                    exps[bi.gens.index(f"x{k}_{i}")] += 1
                images[f"x{k}_{j}"] = (ONE, tuple(exps))
            gluings.append(ChartGluing(i, j, f"x{j}_{i}", f"x{i}_{j}", images))
    graded = GradedBlueprint(
        Blueprint(MonomialBackend(coeff_blueprint,
                                  tuple(f"T{k}" for k in range(n + 1))),
                  budget=budget, name=f"{name}.cone"),
        {f"T{k}": 1 for k in range(n + 1)})
    return BlueScheme(charts, gluings, name=name, graded_model=graded)


# ---------------------------------------------------------------------------
# Products


@dataclass
class ProductSpace:
    """Admissible pairs of points with the componentwise order."""

    left: object
    right: object
    points: tuple        # (i, j) pairs
    excluded: tuple      # pairs whose admissibility is Unknown

    def __len__(self):
        return len(self.points)

    def leq(self, a, b):
        (i1, j1), (i2, j2) = self.points[a], self.points[b]
        return self.left.leq(i1, i2) and self.right.leq(j1, j2)

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def projections_continuous(self):
        """Preimages of up-sets are up-sets (automatic for the componentwise
        order; verified explicitly)."""
        n = len(self.points)
        for a in range(n):
            for b in range(n):
                if self.lt(a, b):
                    if not self.left.leq(self.points[a][0], self.points[b][0]):
                        return False
                    if not self.right.leq(self.points[a][1], self.points[b][1]):
                        return False
        return True


def _residue_is_monoidal(space, i, budget=None):
    cache = getattr(space, "_residue_monoidal", None)
    if cache is None:
        cache = space._residue_monoidal = {}
    if i not in cache:
        kappa = residue_field(space.blueprint, space.points[i], budget)
        cache[i] = not kappa.relations
    return cache[i]


def product(left, right, compatibility=None, budget=None):
    """Topological fibre product over F1.

    Pairs of monoidal (relation-free) residue fields embed into fields of any
    characteristic and are always admissible; relation-bearing pairs consult
    the `compatibility` hook and are otherwise excluded with a warning.
    """
    pts = []
    excluded = []
    for i in range(len(left.points)):
        for j in range(len(right.points)):
            li = _residue_is_monoidal(left, i, budget)
            rj = _residue_is_monoidal(right, j, budget)
            if li and rj:
                pts.append((i, j))
            elif compatibility is not None:
                if compatibility(left, i, right, j):
                    pts.append((i, j))
                else:
                    excluded.append((i, j))
            else:
                excluded.append((i, j))
    if excluded and compatibility is None:
        warnings.warn(f"{len(excluded)} point pairs have unknown admissibility "
                      "and were excluded", stacklevel=2)
    return ProductSpace(left, right, tuple(pts), tuple(excluded))


def fq_points_of_scheme(scheme, q):
    """F_q points of a scheme-like object, with canonical representatives."""
    if isinstance(scheme, (BlueScheme, GradedBlueprint)):
        return scheme.fq_points(q)
    if isinstance(scheme, ProjSpace):
        return scheme.graded.fq_points(q)
    if isinstance(scheme, SpecSpace):
        return counting.fq_points(scheme.blueprint, q)
    return counting.fq_points(scheme, q)
