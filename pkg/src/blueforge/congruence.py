"""Congruences and prime congruences on finite blueprints, the congruence
spectrum with its basis topology, absorbing ideals, and residue fields."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .core import (ONE, PROVED, REFUTED, UNKNOWN, ZERO, Blueprint,
                   BlueprintError, FiniteTable, IdealDescriptor, _scale,
                   localize)

MULTIPLICITY_CAP = 6


class NotACongruence(BlueprintError):
    pass


class TooLarge(BlueprintError):
    pass


def canonical_partition(blocks):
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def partition_blocks_of(carrier, pairs):
    """Blocks of the equivalence generated by `pairs` on `carrier`."""
    parent = {x: x for x in carrier}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    blocks = {}
    for x in carrier:
        blocks.setdefault(find(x), []).append(x)
    return canonical_partition(blocks.values())


@dataclass
class Congruence:
    blueprint: Blueprint
    partition: tuple
    primality: bool | None = None

    def __post_init__(self):
        self.partition = canonical_partition(self.partition)
        self._block_of = {}
        for block in self.partition:
            for x in block:
                self._block_of[x] = block

    def related(self, a, b):
        return self._block_of[a] is self._block_of[b] or \
            self._block_of[a] == self._block_of[b]

    def block(self, a):
        return self._block_of[a]

    def is_proper(self):
        return len(self.partition) > 1

    def __repr__(self):
        return "/".join("".join(b) for b in self.partition)


def _all_sums(carrier, max_terms):
    """All formal sums (sorted tuples) of bounded length and multiplicity."""
    nonzero = [s for s in carrier]
    out = [()]
    frontier = [()]
    for _ in range(max_terms):
        new = []
        for u in frontier:
            last = u[-1] if u else None
            for s in nonzero:
                if last is not None and s < last:
                    continue
                if u.count(s) >= MULTIPLICITY_CAP:
                    continue
                v = u + (s,)
                new.append(v)
        out.extend(new)
        frontier = new
    return out


def is_congruence(blueprint, partition, budget=None):
    """Proved / Refuted / Unknown for the two congruence axioms.

    Multiplicativity is exhausted; the chain axiom is checked by saturating a
    union-find over bounded formal sums under (i) one-step rewrites through
    the pre-addition and (ii) termwise replacements inside a block, then
    verifying that the restriction to the carrier refines no block.
    """
    if blueprint.backend.kind != "finite":
        raise TooLarge("congruences are implemented for finite tables")
    carrier = blueprint.backend.symbols
    if len(carrier) > 7:
        raise TooLarge("carrier larger than 7")
    budget = budget or blueprint.budget
    cong = Congruence(blueprint, partition)
    covered = set(itertools.chain.from_iterable(cong.partition))
    if covered != set(carrier):
        raise NotACongruence("partition does not cover the carrier")
    backend = blueprint.backend
    for a in carrier:
        for b in carrier:
            if not cong.related(a, b):
                continue
            for c in carrier:
                for d in carrier:
                    if cong.related(c, d) and not cong.related(
                            backend.mul(a, c), backend.mul(b, d)):
                        return REFUTED
    # chain axiom (2)*: saturate sums under rewrites and termwise moves
    max_terms = min(budget.max_terms, 8)
    sums = _all_sums([s for s in carrier if s != ZERO], max_terms)
    index = {u: i for i, u in enumerate(sums)}
    parent = list(range(len(sums)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
            return True
        return False

    def norm(terms):
        return tuple(sorted(t for t in terms if t != ZERO))

    truncated = False
    steps = 0
    for u in sums:
        cu = Counter(u)
        # termwise replacement within a block
        for k, t in enumerate(u):
            for t2 in cong.block(t):
                if t2 == t:
                    continue
                v = norm(u[:k] + (t2,) + u[k + 1:])
                if v in index:
                    union(index[u], index[v])
        # rewrite through relation generators with carrier multipliers
        for L, R in blueprint.oriented_relations():
            for m in backend.multipliers(0):
                steps += 1
                if steps > budget.max_steps:
                    truncated = True
                    break
                mL = Counter(x for x in _scale(blueprint, m, L) if x != ZERO)
                if not all(cu[t] >= k for t, k in mL.items()):
                    continue
                rest = cu - mL
                for x in _scale(blueprint, m, R):
                    if x != ZERO:
                        rest[x] += 1
                v = norm(tuple(rest.elements()))
                if v in index:
                    union(index[u], index[v])
            if truncated:
                break
        if truncated:
            break
    for a in carrier:
        for b in carrier:
            if a < b and not cong.related(a, b):
                ia = index.get(norm((a,)) if a != ZERO else ())
                ib = index.get(norm((b,)) if b != ZERO else ())
                if ia is not None and ib is not None and find(ia) == find(ib):
                    return REFUTED
    return UNKNOWN if truncated else PROVED


def is_prime_congruence(blueprint, cong: Congruence):
    """Proper, and ab ~ ac forces b ~ c or a ~ 0 (the quotient is integral)."""
    if cong.primality is not None:
        return cong.primality
    backend = blueprint.backend
    if not cong.is_proper():
        cong.primality = False
        return False
    ok = True
    for a in backend.symbols:
        if cong.related(a, ZERO):
            continue
        for b in backend.symbols:
            for c in backend.symbols:
                if cong.related(backend.mul(a, b), backend.mul(a, c)) \
                        and not cong.related(b, c):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    cong.primality = ok
    return ok


def _set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        for i, block in enumerate(smaller):
            yield smaller[:i] + [block + [first]] + smaller[i + 1:]
        yield smaller + [[first]]


@dataclass
class CSpecSpace:
    blueprint: Blueprint
    points: tuple            # prime Congruence objects, canonical order
    complete: bool

    def __len__(self):
        return len(self.points)

    def basis_open(self, f, g):
        """U_{f,g} = indices of prime congruences with f not related to g."""
        return frozenset(i for i, c in enumerate(self.points)
                         if not c.related(f, g))

    def basis(self):
        syms = self.blueprint.backend.symbols
        return {(f, g): self.basis_open(f, g) for f in syms for g in syms}


def cspec(blueprint, budget=None):
    """All prime congruences, ordered by canonical partition form."""
    if blueprint.backend.kind != "finite":
        raise TooLarge("congruence spectra are implemented for finite tables")
    carrier = blueprint.backend.symbols
    if len(carrier) > 7:
        raise TooLarge("carrier larger than 7")
    budget = budget or blueprint.budget
    points = []
    complete = True
    for blocks in _set_partitions(sorted(carrier)):
        verdict = is_congruence(blueprint, blocks, budget)
        if verdict == UNKNOWN:
            complete = False
            continue
        if verdict != PROVED:
            continue
        cong = Congruence(blueprint, blocks)
        if is_prime_congruence(blueprint, cong):
            points.append(cong)
    points.sort(key=lambda c: c.partition)
    return CSpecSpace(blueprint, tuple(points), complete)


def absorbing_ideal(cong: Congruence) -> IdealDescriptor:
    """I_~ = the block of zero."""
    block = cong.block(ZERO)
    return IdealDescriptor(cong.blueprint, tuple(sorted(block)),
                           tuple(sorted(block)), "exact")


def congruence_generated_by_ideal(blueprint, ideal, budget=None):
    """The kernel of B -> B/I: identify the ideal members with zero and close
    under the congruence axioms (pairs merged by the quotient's properness
    normalization are detected by the guard)."""
    from .core import quotient_by_ideal
    q = quotient_by_ideal(blueprint, ideal, budget)
    proj = q.projection
    blocks = {}
    for s in blueprint.backend.symbols:
        blocks.setdefault(proj[s], []).append(s)
    return Congruence(blueprint, blocks.values())


def cspec_to_spec(blueprint, budget=None):
    """The map CSpec -> Spec sending a prime congruence to its absorbing
    ideal; returns (cspec, spec, index map)."""
    from .spectra import spec as spec_fn
    C = cspec(blueprint, budget)
    X = spec_fn(blueprint, budget)
    mapping = {}
    for i, cong in enumerate(C.points):
        ideal = absorbing_ideal(cong)
        js = [j for j, p in enumerate(X.points)
              if set(p.ideal.minimal) == set(ideal.minimal)]
        if len(js) != 1:
            raise BlueprintError(
                f"absorbing ideal {ideal!r} is not a prime of the spectrum")
        mapping[i] = js[0]
    return C, X, mapping


def quotient_by_congruence(blueprint, cong: Congruence, budget=None):
    """B/~ : blocks as symbols, with the pushed pre-addition."""
    backend = blueprint.backend
    budget = budget or blueprint.budget
    rep = {}
    for block in cong.partition:
        label = ZERO if ZERO in block else (ONE if ONE in block else min(block))
        for x in block:
            rep[x] = label
    syms = sorted(set(rep.values()), key=lambda s: (s != ZERO, s != ONE, s))
    mul = {}
    for a in backend.symbols:
        for b in backend.symbols:
            mul[(rep[a], rep[b])] = rep[backend.mul(a, b)]
    rels = []
    for l, r in blueprint.relations:
        nl = [rep[t] for t in l if rep[t] != ZERO]
        nr = [rep[t] for t in r if rep[t] != ZERO]
        if sorted(nl) != sorted(nr):
            rels.append((nl, nr))
    out = Blueprint(FiniteTable(syms, mul), rels, budget=budget,
                    name=f"{blueprint.name or 'B'}/~", check_proper=False)
    out.projection = dict(rep)
    return out


def kernel_congruence(morphism):
    """The kernel of a morphism: a ~ b iff the images coincide."""
    src = morphism.source
    if src.backend.kind != "finite":
        raise TooLarge("kernels are computed for finite sources")
    pairs = []
    for a in src.backend.symbols:
        for b in src.backend.symbols:
            if morphism.apply(a) == morphism.apply(b):
                pairs.append((a, b))
    blocks = partition_blocks_of(src.backend.symbols, pairs)
    return Congruence(src, blocks)


def residue_field_of_congruence(blueprint, cong: Congruence, budget=None):
    """Localize at the absorbing prime and quotient by the pushed congruence;
    the result is a blue field."""
    budget = budget or blueprint.budget
    quotient = quotient_by_congruence(blueprint, cong, budget)
    nonzero = [s for s in quotient.backend.symbols if s != ZERO]
    return localize(quotient, nonzero, budget)
