"""Blue modules over finite blueprints: kernels and cokernels, normal
morphisms, projectivity, and K0 from the normal-exact-sequence presentation
via Smith normal form."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .budget import Budget
from .core import ONE, ZERO, BlueprintError
from .snf import smith_normal_form

BASE = "*"


class NotMono(BlueprintError):
    pass


class NotEpi(BlueprintError):
    pass


class TooLarge(BlueprintError):
    pass


class BlueModule:
    """A finite pointed set with a blueprint action and a generated
    pre-addition; the relations induced by the blueprint's own pre-addition
    are always included."""

    def __init__(self, blueprint, carrier, action, relations=(), name=None):
        self.blueprint = blueprint
        if BASE not in carrier:
            carrier = (BASE,) + tuple(carrier)
        self.carrier = (BASE,) + tuple(sorted(x for x in carrier if x != BASE))
        self.name = name
        syms = blueprint.backend.symbols
        self.action = {}
        for m in self.carrier:
            self.action[(ZERO, m)] = BASE
            self.action[(ONE, m)] = m
        for (b, m), v in action.items():
            self.action[(b, m)] = v
        for b in syms:
            self.action[(b, BASE)] = BASE
            for m in self.carrier:
                if (b, m) not in self.action:
                    raise BlueprintError(f"action of {b} on {m} missing")
                if self.action[(b, m)] not in self.carrier:
                    raise BlueprintError("action leaves the carrier")
        for a in syms:
            for b in syms:
                for m in self.carrier:
                    if self.action[(blueprint.backend.mul(a, b), m)] != \
                            self.action[(a, self.action[(b, m)])]:
                        raise BlueprintError("action is not associative")
        rels = set()
        for l, r in relations:
            pair = self._norm_rel(l, r)
            if pair:
                rels.add(pair)
        for l, r in blueprint.relations:
            for m in self.carrier:
                if m == BASE:
                    continue
                il = [self.act_elem(t, m) for t in l]
                ir = [self.act_elem(t, m) for t in r]
                pair = self._norm_rel(il, ir)
                if pair:
                    rels.add(pair)
        self.relations = tuple(sorted(rels))

    def act_elem(self, blueprint_elem, m):
        """Action of a blueprint element (symbol, for finite tables)."""
        return self.action[(blueprint_elem, m)]

    def act(self, b, m):
        return self.action[(b, m)]

    def _norm_sum(self, terms):
        return tuple(sorted(t for t in terms if t != BASE))

    def _norm_rel(self, l, r):
        nl, nr = self._norm_sum(l), self._norm_sum(r)
        if nl == nr:
            return None
        return (nl, nr) if nl <= nr else (nr, nl)

    def nonbase(self):
        return self.carrier[1:]

    def __len__(self):
        return len(self.carrier)

    def __repr__(self):
        return f"BlueModule({self.name or ','.join(self.carrier)})"

    def minimal_generators(self):
        """A greedy generating set under the action."""
        reachable = {BASE}
        gens = []
        for m in self.nonbase():
            if m not in reachable:
                gens.append(m)
                for b in self.blueprint.backend.symbols:
                    reachable.add(self.act(b, m))
        return gens

    def invariant(self):
        color = joint_colors([self])[0]
        rel_profile = Counter()
        for l, r in self.relations:
            rel_profile[(tuple(sorted(color[t] for t in l)),
                         tuple(sorted(color[t] for t in r)))] += 1
        return (len(self.carrier),
                tuple(sorted(Counter(color.values()).items())),
                tuple(sorted(rel_profile.items())))


def joint_colors(modules):
    """Refinement colors computed with a palette shared across the modules,
    so equal colors mean equal local action structure across them."""
    syms = modules[0].blueprint.backend.symbols
    colors = [{m: (-1 if m == BASE else 0) for m in mod.carrier}
              for mod in modules]
    rounds = max(len(mod.carrier) for mod in modules) + 1
    for _ in range(rounds):
        sigs = []
        for mod, col in zip(modules, colors):
            sigs.append({m: (col[m],
                             tuple(col[mod.act(b, m)] for b in syms),
                             tuple(tuple(sorted(Counter(
                                 col[x] for x in mod.carrier
                                 if mod.act(b, x) == m).items()))
                                 for b in syms))
                         for m in mod.carrier})
        palette = {sig: i for i, sig in enumerate(
            sorted({s for d in sigs for s in d.values()}, key=repr))}
        nxt = [{m: palette[d[m]] for m in d} for d in sigs]
        if all(len(set(n.values())) == len(set(c.values()))
               for n, c in zip(nxt, colors)):
            colors = nxt
            break
        colors = nxt
    return colors


def free_module(blueprint, k, name=None):
    """The wedge of k copies of the blueprint."""
    syms = blueprint.backend.symbols
    carrier = [BASE]
    action = {}
    for i in range(k):
        for a in syms:
            if a == ZERO:
                continue
            carrier.append(f"{a}@{i}")
    for i in range(k):
        for a in syms:
            if a == ZERO:
                continue
            for b in syms:
                prod = blueprint.backend.mul(b, a)
                action[(b, f"{a}@{i}")] = BASE if prod == ZERO else f"{prod}@{i}"
    relations = []
    for l, r in blueprint.relations:
        for i in range(k):
            relations.append(([f"{t}@{i}" for t in l if t != ZERO],
                              [f"{t}@{i}" for t in r if t != ZERO]))
    return BlueModule(blueprint, tuple(carrier), action, relations,
                      name=name or f"free{k}")


def zero_module(blueprint):
    return free_module(blueprint, 0, name="0")


def wedge(m1: BlueModule, m2: BlueModule):
    """The coproduct: disjoint union glued at the base points."""
    carrier = [BASE] + [f"L.{x}" for x in m1.nonbase()] + \
        [f"R.{x}" for x in m2.nonbase()]
    action = {}
    syms = m1.blueprint.backend.symbols
    for b in syms:
        for x in m1.nonbase():
            v = m1.act(b, x)
            action[(b, f"L.{x}")] = BASE if v == BASE else f"L.{v}"
        for x in m2.nonbase():
            v = m2.act(b, x)
            action[(b, f"R.{x}")] = BASE if v == BASE else f"R.{v}"
    rels = [([f"L.{t}" for t in l], [f"L.{t}" for t in r])
            for l, r in m1.relations]
    rels += [([f"R.{t}" for t in l], [f"R.{t}" for t in r])
             for l, r in m2.relations]
    out = BlueModule(m1.blueprint, tuple(carrier), action, rels,
                     name=f"{m1.name or 'M'}+{m2.name or 'N'}")
    inc1 = ModuleMorphism(m1, out, {x: f"L.{x}" for x in m1.nonbase()})
    inc2 = ModuleMorphism(m2, out, {x: f"R.{x}" for x in m2.nonbase()})
    return out, inc1, inc2


# ---------------------------------------------------------------------------
# Morphisms


class ModuleMorphism:
    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = {BASE: BASE}
        self.mapping.update(mapping)

    def apply(self, m):
        return self.mapping[m]

    def apply_sum(self, terms):
        return tuple(sorted(t for t in (self.mapping[x] for x in terms)
                            if t != BASE))

    def is_injective(self):
        imgs = [self.mapping[m] for m in self.source.carrier]
        return len(set(imgs)) == len(imgs)

    def is_surjective(self):
        return set(self.mapping[m] for m in self.source.carrier) \
            == set(self.target.carrier)

    def __repr__(self):
        bits = ", ".join(f"{k}->{v}" for k, v in sorted(self.mapping.items()))
        return f"ModuleMorphism({bits})"


def _module_rewrites(module, u, budget):
    syms = module.blueprint.backend.symbols
    u_counter = Counter(u)
    rels = []
    for l, r in module.relations:
        rels.append((l, r))
        rels.append((r, l))
    for L, R in rels:
        for b in syms:
            if b == ZERO:
                continue
            bL = Counter(x for x in (module.act(b, t) for t in L)
                         if x != BASE)
            if L and not bL:
                continue
            if not all(u_counter[t] >= k for t, k in bL.items()):
                continue
            if not L and not R:
                continue
            v = u_counter - bL
            for x in (module.act(b, t) for t in R):
                if x != BASE:
                    v[x] += 1
            flat = tuple(sorted(v.elements()))
            if len(flat) <= budget.max_terms:
                yield flat


def module_derive(module, lhs, rhs, budget=None):
    """Bounded search in the module pre-addition."""
    budget = budget or Budget(2, 8, 4000)
    l = module._norm_sum(lhs)
    r = module._norm_sum(rhs)
    if l == r:
        return True
    seen = {l}
    frontier = [l]
    steps = 0
    while frontier:
        nxt = []
        for u in frontier:
            for v in _module_rewrites(module, u, budget):
                steps += 1
                if steps > budget.max_steps:
                    return False
                if v in seen:
                    continue
                if v == r:
                    return True
                seen.add(v)
                nxt.append(v)
        frontier = nxt
    return False


def is_module_morphism(f: ModuleMorphism):
    src, tgt = f.source, f.target
    if f.mapping.get(BASE, BASE) != BASE:
        return False
    for m in src.carrier:
        if m not in f.mapping or f.mapping[m] not in tgt.carrier:
            return False
    for b in src.blueprint.backend.symbols:
        for m in src.carrier:
            if f.apply(src.act(b, m)) != tgt.act(b, f.apply(m)):
                return False
    for l, r in src.relations:
        if not module_derive(tgt, f.apply_sum(l), f.apply_sum(r)):
            return False
    return True


def enumerate_morphisms(src: BlueModule, tgt: BlueModule, limit=None):
    """All module morphisms src -> tgt by backtracking on the carrier."""
    order = list(src.nonbase())
    syms = src.blueprint.backend.symbols
    out = []

    def consistent(mapping):
        for b in syms:
            for prev, pv in mapping.items():
                img = src.act(b, prev)
                if img in mapping and mapping[img] != tgt.act(b, pv):
                    return False
        return True

    def backtrack(i, mapping):
        if limit is not None and len(out) >= limit:
            return
        if i == len(order):
            f = ModuleMorphism(src, tgt, dict(mapping))
            if all(module_derive(tgt, f.apply_sum(l), f.apply_sum(r))
                   for l, r in src.relations):
                out.append(f)
            return
        m = order[i]
        for v in tgt.carrier:
            mapping[m] = v
            if consistent(mapping):
                backtrack(i + 1, mapping)
            del mapping[m]

    backtrack(0, {BASE: BASE})
    return out


def modules_isomorphic(m1: BlueModule, m2: BlueModule):
    """A carrier bijection preserving action and relations, or None."""
    if len(m1) != len(m2) or m1.invariant() != m2.invariant():
        return None
    colors1, colors2 = joint_colors([m1, m2])
    if sorted(colors1.values()) != sorted(colors2.values()):
        return None
    syms = m1.blueprint.backend.symbols
    order = sorted(m1.nonbase(), key=lambda m: (colors1[m], m))
    rels2 = set(m2.relations)
    mapping = {BASE: BASE}
    used = set()

    def consistent():
        for b in syms:
            for prev, py in mapping.items():
                img = m1.act(b, prev)
                if img in mapping and mapping[img] != m2.act(b, py):
                    return False
        return True

    def backtrack(i):
        if i == len(order):
            rels1_img = {m1._norm_rel([mapping[t] for t in l],
                                      [mapping[t] for t in r])
                         for l, r in m1.relations}
            rels1_img.discard(None)
            return rels1_img == rels2
        x = order[i]
        for y in m2.nonbase():
            if y in used or colors1[x] != colors2[y]:
                continue
            mapping[x] = y
            used.add(y)
            if consistent() and backtrack(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if backtrack(0) else None


def modules_equal_class(m1, m2):
    return modules_isomorphic(m1, m2) is not None


class ModuleClassifier:
    """Groups modules into isomorphism classes, deterministically indexed."""

    def __init__(self):
        self.reps = []
        self._by_invariant = {}

    def classify(self, module):
        """Index of the class; registers a new class when unseen."""
        inv = module.invariant()
        for idx in self._by_invariant.get(inv, ()):
            if modules_isomorphic(self.reps[idx], module):
                return idx
        idx = len(self.reps)
        self.reps.append(module)
        self._by_invariant.setdefault(inv, []).append(idx)
        return idx

    def find(self, module):
        """Index of the class, or None when unregistered."""
        inv = module.invariant()
        for idx in self._by_invariant.get(inv, ()):
            if modules_isomorphic(self.reps[idx], module):
                return idx
        return None


# ---------------------------------------------------------------------------
# Kernels, cokernels, normality


def kernel(f: ModuleMorphism):
    """Preimage of the base point, with the induced structure."""
    src = f.source
    sub = [m for m in src.nonbase() if f.apply(m) == BASE]
    subset = set(sub) | {BASE}
    action = {}
    for b in src.blueprint.backend.symbols:
        for m in sub:
            action[(b, m)] = src.act(b, m)
    rels = [(l, r) for l, r in src.relations
            if all(t in subset for t in l + r)]
    k = BlueModule(src.blueprint, tuple([BASE] + sub), action, rels,
                   name=f"ker({src.name or 'M'})")
    inc = ModuleMorphism(k, src, {m: m for m in sub})
    return k, inc


def submodule_closure(module: BlueModule, subset):
    """Closure under the action and the additive rule."""
    members = {BASE} | set(subset)
    changed = True
    while changed:
        changed = False
        for b in module.blueprint.backend.symbols:
            for m in list(members):
                v = module.act(b, m)
                if v not in members:
                    members.add(v)
                    changed = True
        for L, R in [(l, r) for l, r in module.relations] + \
                    [(r, l) for l, r in module.relations]:
            if all(t in members for t in R):
                missing = [t for t in L if t not in members]
                if len(missing) == 1:
                    members.add(missing[0])
                    changed = True
    return members


def cokernel(f: ModuleMorphism):
    """Collapse the saturated image to the base point; derivable element
    identifications are merged until the quotient is proper."""
    tgt = f.target
    collapse = submodule_closure(tgt, {f.apply(m) for m in f.source.carrier})
    merged = {m: (BASE if m in collapse else m) for m in tgt.carrier}
    for _ in range(20):
        carrier = sorted(set(merged.values()))
        action = {}
        for b in tgt.blueprint.backend.symbols:
            for m in tgt.carrier:
                key = (b, merged[m])
                val = merged[tgt.act(b, m)]
                if key in action and action[key] != val:
                    # identification forced by the action
                    a, bb = sorted((action[key], val))
                    for x in merged:
                        if merged[x] == bb:
                            merged[x] = a
                    break
                action[key] = val
            else:
                continue
            break
        else:
            rels = [([merged[t] for t in l], [merged[t] for t in r])
                    for l, r in tgt.relations]
            q = BlueModule(tgt.blueprint, tuple(carrier),
                           {k: v for k, v in action.items()
                            if k[1] != BASE}, rels,
                           name=f"coker({f.source.name or 'M'})")
            pair = _improper_module_pair(q)
            if pair is None:
                proj = ModuleMorphism(tgt, q, {m: merged[m]
                                               for m in tgt.nonbase()})
                q.projection = {m: merged[m] for m in tgt.carrier}
                return q, proj
            a, bb = sorted(pair)
            for x in merged:
                if merged[x] == bb:
                    merged[x] = a
    raise BlueprintError("cokernel merging failed to stabilize")


def _improper_module_pair(module: BlueModule):
    """A derivable identification of two distinct elements (or of an element
    with the base point), if any."""
    for m in module.nonbase():
        if module_derive(module, (m,), ()):
            return (BASE, m)
    for a, b in itertools.combinations(module.nonbase(), 2):
        if module_derive(module, (a,), (b,)):
            return (a, b)
    return None


def is_normal_mono(f: ModuleMorphism):
    """f equals the kernel of its cokernel (up to the image subset)."""
    if not f.is_injective():
        raise NotMono("morphism is not injective")
    _q, proj = cokernel(f)
    k, _inc = kernel(proj)
    image = {f.apply(m) for m in f.source.carrier}
    return image == set(k.carrier)


def is_normal_epi(f: ModuleMorphism):
    """f equals the cokernel of its kernel (the induced map is bijective)."""
    if not f.is_surjective():
        raise NotEpi("morphism is not surjective")
    k, inc = kernel(f)
    q, proj = cokernel(inc)
    induced = {}
    for m in f.source.carrier:
        qm = q.projection[m]
        fm = f.apply(m)
        if qm in induced and induced[qm] != fm:
            return False
        induced[qm] = fm
    values = list(induced.values())
    return len(set(values)) == len(values) and set(values) == set(f.target.carrier)


# ---------------------------------------------------------------------------
# Projectivity (retract of a free module) and freeness


def is_free(module: BlueModule):
    nb = len(module.nonbase())
    unit = len(module.blueprint.backend.symbols) - 1
    if nb == 0:
        return True
    if unit == 0 or nb % unit:
        return False
    k = nb // unit
    return modules_equal_class(module, free_module(module.blueprint, k))


def wedge_components(module: BlueModule):
    """Split into action-connected components (each one a submodule); only
    valid as a wedge decomposition when no relation couples components."""
    nb = list(module.nonbase())
    parent = {m: m for m in nb}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in module.blueprint.backend.symbols:
        for m in nb:
            v = module.act(b, m)
            if v != BASE:
                ra, rb = find(m), find(v)
                if ra != rb:
                    parent[rb] = ra
    groups = {}
    for m in nb:
        groups.setdefault(find(m), []).append(m)
    comps = [sorted(v) for v in sorted(groups.values())]
    for l, r in module.relations:
        roots = {find(t) for t in l + r}
        if len(roots) > 1:
            return None
    return [_submodule(module, comp)[0] for comp in comps]


def _retract_of_free(module: BlueModule):
    """Search an injective section into the free module on the minimal
    generators; a compatible retraction is then built directly on the copy
    units."""
    gens = module.minimal_generators()
    if not gens:
        return True
    k = len(gens)
    free = free_module(module.blueprint, k)
    syms = [a for a in module.blueprint.backend.symbols if a != ZERO]
    for s in enumerate_morphisms(module, free):
        if not s.is_injective():
            continue
        r0 = {s.apply(m): m for m in module.carrier}
        ok = True
        for i in range(k):
            cands = []
            for p in module.carrier:
                if all(module.act(a, p) == r0[f"{a}@{i}"]
                       for a in syms if f"{a}@{i}" in r0):
                    cands.append(p)
                    break
            if not cands:
                ok = False
                break
        if ok:
            return True
    return False


def is_projective(module: BlueModule, rank_bound=None):
    """Retract of a free module; a wedge is projective iff every component
    is (collapsing the other components retracts onto each one).

    The Hom-right-exactness definition agrees with this on every fact the
    catalog checks; lifting against normal epis alone is strictly weaker (it
    cannot refute fixed-point modules over blue fields) and is exercised as a
    necessary condition in the tests.
    """
    if is_free(module):
        return True
    comps = wedge_components(module)
    if comps is not None and len(comps) > 1:
        return all(is_projective(c) for c in comps)
    return _retract_of_free(module)


def lifts_along_normal_epis(p: BlueModule, universe_pairs):
    """Relative lifting condition: for each normal epi g: M -> N and each
    morphism h: P -> N there is a lift P -> M. A sound necessary condition
    for projectivity (strictly weaker than retract-of-free: no normal epi can
    witness against a fixed-point module over a blue field)."""
    for g in universe_pairs:
        for h in enumerate_morphisms(p, g.target):
            lifted = False
            for cand in enumerate_morphisms(p, g.source):
                if all(g.apply(cand.apply(m)) == h.apply(m)
                       for m in p.carrier):
                    lifted = True
                    break
            if not lifted:
                return False
    return True


# ---------------------------------------------------------------------------
# Module enumeration and K0


def _monoid_generators(blueprint):
    """A minimal generating subset of the multiplicative monoid besides 0,1."""
    syms = [s for s in blueprint.backend.symbols if s not in (ZERO, ONE)]
    for r in range(len(syms) + 1):
        for sub in itertools.combinations(syms, r):
            generated = {ZERO, ONE}
            frontier = list(sub)
            generated.update(sub)
            while frontier:
                x = frontier.pop()
                for y in list(generated):
                    z = blueprint.backend.mul(x, y)
                    if z not in generated:
                        generated.add(z)
                        frontier.append(z)
            if generated == set(blueprint.backend.symbols):
                return list(sub)
    return syms


def enumerate_modules(blueprint, size_bound):
    """All blue modules with carrier size <= size_bound and the minimal
    induced pre-addition, up to isomorphism, deterministically ordered."""
    if size_bound > 8:
        raise TooLarge("size bound above 8")
    gens = _monoid_generators(blueprint)
    syms = blueprint.backend.symbols
    classifier = ModuleClassifier()
    out = []
    for size in range(1, size_bound + 1):
        carrier = [BASE] + [f"m{i}" for i in range(size - 1)]
        candidates = itertools.product(
            *[list(carrier) for _ in range(len(gens) * (size - 1))])
        for flat in candidates:
            gen_maps = {}
            idx = 0
            for g in gens:
                gen_maps[g] = {BASE: BASE}
                for m in carrier[1:]:
                    gen_maps[g][m] = flat[idx]
                    idx += 1
            action = _complete_action(blueprint, gens, gen_maps, carrier)
            if action is None:
                continue
            try:
                module = BlueModule(blueprint, tuple(carrier),
                                    action, (), name=f"M{len(out)}")
            except BlueprintError:
                continue
            if classifier.find(module) is None:
                classifier.classify(module)
                out.append(module)
    return out


def _complete_action(blueprint, gens, gen_maps, carrier):
    """Extend generator actions to the whole monoid; None on inconsistency."""
    syms = blueprint.backend.symbols
    known = {ONE: {m: m for m in carrier},
             ZERO: {m: BASE for m in carrier}}
    for g, mp in gen_maps.items():
        known[g] = dict(mp)
    changed = True
    while changed:
        changed = False
        for a in list(known):
            for b in list(known):
                c = blueprint.backend.mul(a, b)
                composed = {m: known[a][known[b][m]] for m in carrier}
                if c in known:
                    if known[c] != composed:
                        return None
                else:
                    known[c] = composed
                    changed = True
    if set(known) != set(syms):
        return None
    return {(b, m): known[b][m] for b in syms for m in carrier}


@dataclass
class K0Result:
    generators: tuple        # names of projective iso classes
    relations: tuple         # integer rows over the generators
    rank: int
    torsion: tuple

    def is_infinite_cyclic(self):
        return self.rank == 1 and not self.torsion

    def __repr__(self):
        t = " x ".join(f"Z/{d}" for d in self.torsion)
        body = f"Z^{self.rank}" + (f" x {t}" if t else "")
        return f"K0({body})"


def _action_closed_subsets(module):
    nb = module.nonbase()
    syms = module.blueprint.backend.symbols
    out = []
    for r in range(len(nb) + 1):
        for sub in itertools.combinations(nb, r):
            s = set(sub) | {BASE}
            if all(module.act(b, m) in s for b in syms for m in sub):
                out.append(sub)
    return out


def _submodule(module, subset):
    subset = set(subset) | {BASE}
    action = {(b, m): module.act(b, m)
              for b in module.blueprint.backend.symbols
              for m in subset if m != BASE}
    rels = [(l, r) for l, r in module.relations
            if all(t in subset for t in l + r)]
    sub = BlueModule(module.blueprint, tuple(sorted(subset)), action, rels)
    inc = ModuleMorphism(sub, module, {m: m for m in subset if m != BASE})
    return sub, inc


def k0(blueprint, size_bound=6):
    """The Grothendieck group of projectives under normal short exact
    sequences, presented by generators (iso classes, carrier <= size_bound)
    and relations [M] = [K] + [M/K]; invariant factors via Smith normal
    form."""
    universe = enumerate_modules(blueprint, size_bound)
    projectives = [m for m in universe if is_projective(m)]
    classifier = ModuleClassifier()
    for p in projectives:
        classifier.classify(p)
    rows = []
    for m in projectives:
        im = classifier.find(m)
        for sub_elems in _action_closed_subsets(m):
            sub, inc = _submodule(m, sub_elems)
            ksub = classifier.find(sub)
            if ksub is None or not is_normal_mono(inc):
                continue
            q, proj = cokernel(inc)
            kq = classifier.find(q)
            if kq is None or not is_normal_epi(proj):
                continue
            row = [0] * len(projectives)
            row[im] += 1
            row[ksub] -= 1
            row[kq] -= 1
            if any(row):
                rows.append(row)
    rows = [list(r) for r in {tuple(r) for r in rows}]
    factors = smith_normal_form(rows) if rows else []
    rank = len(projectives) - len(factors)
    torsion = tuple(d for d in factors if d > 1)
    names = tuple(f"P{i}(size {len(p)})" for i, p in enumerate(projectives))
    return K0Result(names, tuple(tuple(r) for r in rows), rank, torsion)
