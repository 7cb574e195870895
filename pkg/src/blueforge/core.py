"""Blueprints: commutative monoids with zero carrying a generated pre-addition.

Two monoid backends cover everything in this package: finite multiplication
tables, and monomials over a finite coefficient blueprint with invertibility
flags and an integer identification lattice. Pre-additions are represented by
finite generator sets; membership in the generated congruence is semi-decided
by a budgeted rewrite search (sound, possibly incomplete).
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .budget import Budget, default_budget
from .fields import gf, prime_powers_upto
from .snf import (hnf_with_transform, in_lattice, lattice_rank,
                  quotient_group_invariants)

PROVED = "Proved"
UNKNOWN = "Unknown"
REFUTED = "Refuted"

ZERO = "0"
ONE = "1"

_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


class BlueprintError(Exception):
    pass


class MalformedBackend(BlueprintError):
    pass


class ImproperRelations(BlueprintError):
    pass


class ForeignElement(BlueprintError):
    pass


class NotAnIdeal(BlueprintError):
    pass


class ImproperIdeal(BlueprintError):
    pass


class UnsupportedIdeal(BlueprintError):
    pass


# ---------------------------------------------------------------------------
# Backends


class FiniteTable:
    """A finite commutative monoid with zero, given by its full table.

    An optional addition table marks the blueprint as a semiring; derivability
    of a relation is then decided by evaluating both sides.
    """

    kind = "finite"

    def __init__(self, symbols, mul, add=None):
        self.symbols = tuple(symbols)
        self.mul_table = dict(mul)
        self.add_table = dict(add) if add is not None else None
        self._sym_set = set(self.symbols)
        self._validate()
        self._units = tuple(a for a in self.symbols
                            if any(self.mul_table[(a, b)] == ONE
                                   for b in self.symbols))

    def _validate(self):
        syms = self.symbols
        if ZERO not in self._sym_set:
            raise MalformedBackend("carrier must contain 0")
        if len(syms) > 1 and ONE not in self._sym_set:
            raise MalformedBackend("carrier must contain 1")
        if len(self._sym_set) != len(syms):
            raise MalformedBackend("duplicate carrier symbols")
        for a in syms:
            for b in syms:
                if (a, b) not in self.mul_table:
                    if (b, a) in self.mul_table:
                        self.mul_table[(a, b)] = self.mul_table[(b, a)]
                    else:
                        raise MalformedBackend(f"missing product {a}*{b}")
                if self.mul_table[(a, b)] not in self._sym_set:
                    raise MalformedBackend(f"product {a}*{b} leaves the carrier")
        for a in syms:
            if self.mul_table[(a, ZERO)] != ZERO:
                raise MalformedBackend("0 must be absorbing")
            if len(syms) > 1 and self.mul_table[(a, ONE)] != a:
                raise MalformedBackend("1 must be neutral")
            for b in syms:
                if self.mul_table[(a, b)] != self.mul_table[(b, a)]:
                    raise MalformedBackend("multiplication must be commutative")
                for c in syms:
                    if (self.mul_table[(self.mul_table[(a, b)], c)]
                            != self.mul_table[(a, self.mul_table[(b, c)])]):
                        raise MalformedBackend("multiplication must be associative")
        if self.add_table is not None:
            for a in syms:
                if self.add_table[(a, ZERO)] != a:
                    raise MalformedBackend("0 must be neutral for addition")
                for b in syms:
                    if self.add_table[(a, b)] != self.add_table[(b, a)]:
                        raise MalformedBackend("addition must be commutative")

    def normalize(self, elem):
        if elem not in self._sym_set:
            raise ForeignElement(f"{elem!r} not in carrier")
        return elem

    def mul(self, a, b):
        return self.mul_table[(a, b)]

    def is_zero(self, elem):
        return elem == ZERO

    def one(self):
        return ONE

    def zero(self):
        return ZERO

    def degree(self, elem):
        return 0

    def sort_key(self, elem):
        return (0, elem)

    def divide(self, t, l):
        return [s for s in self.symbols if self.mul_table[(s, l)] == t]

    def multipliers(self, max_degree):
        return [s for s in self.symbols if s != ZERO]

    def units(self):
        return self._units

    def is_unit(self, elem):
        return elem in self._units

    def power(self, a, e):
        if e < 0:
            inv = next((b for b in self.symbols if self.mul_table[(a, b)] == ONE), None)
            if inv is None:
                raise BlueprintError(f"{a} is not invertible")
            return self.power(inv, -e)
        r = ONE
        for _ in range(e):
            r = self.mul_table[(r, a)]
        return r

    def render(self, elem):
        return elem

    def eval_sum(self, terms):
        if self.add_table is None:
            raise BlueprintError("no addition table")
        acc = ZERO
        for t in terms:
            acc = self.add_table[(acc, t)]
        return acc


class MonomialBackend:
    """Monomials c * T^e over a finite coefficient blueprint.

    `lattice` identifies monomials: a vector v with character chi means
    T^v = chi holds in the monoid. Lattice support columns are forced
    invertible, and normal forms are canonical coset representatives.
    """

    kind = "monomial"

    def __init__(self, coeff_bp, gens, inverted=(), lattice=()):
        self.coeff = coeff_bp
        self.gens = tuple(gens)
        if len(set(self.gens)) != len(self.gens):
            raise MalformedBackend("duplicate generator names")
        if coeff_bp.backend.kind != "finite":
            raise MalformedBackend("coefficient blueprint must be a finite table")
        inv = set(inverted)
        for vec, _char in lattice:
            for i, v in enumerate(vec):
                if v:
                    inv.add(self.gens[i])
        unknown = inv - set(self.gens)
        if unknown:
            raise MalformedBackend(f"invertibility flags on unknown generators {unknown}")
        self.inverted = frozenset(inv)
        self.lattice = self._reduce_lattice(lattice)
        self._nzero = (ZERO, (0,) * len(self.gens))

    def _reduce_lattice(self, lattice):
        coeff = self.coeff
        rows, chars = [], []
        for vec, char in lattice:
            if len(vec) != len(self.gens):
                raise MalformedBackend("lattice vector has wrong length")
            if not coeff.is_unit(char):
                raise MalformedBackend("lattice character must be a unit")
            rows.append(list(vec))
            chars.append(char)
        if not rows:
            return ()
        basis, transforms, kernel = hnf_with_transform(rows)

        def combine(trow):
            c = ONE
            for base_char, t in zip(chars, trow):
                if t:
                    c = coeff.mul(c, coeff.backend.power(base_char, t))
            return c

        for trow in kernel:
            c = combine(trow)
            if c != ONE:
                raise ImproperRelations(
                    f"identification lattice forces 1 = {c} among coefficients")
        out = [(tuple(b), combine(t)) for b, t in zip(basis, transforms)]
        out.sort(key=lambda r: r[0])
        return tuple(out)

    def _reduce_vector(self, vec, char=ONE):
        vec = list(vec)
        coeff = self.coeff
        for bvec, bchar in sorted(self.lattice,
                                  key=lambda r: next(i for i, x in enumerate(r[0]) if x)):
            p = next(i for i, x in enumerate(bvec) if x)
            q = vec[p] // bvec[p]
            if q:
                vec = [a - q * b for a, b in zip(vec, bvec)]
                char = coeff.mul(char, coeff.backend.power(bchar, q))
        return vec, char

    # element protocol -----------------------------------------------------
    def normalize(self, elem):
        coeff, exps = elem
        coeff = self.coeff.backend.normalize(coeff)
        if len(exps) != len(self.gens):
            raise ForeignElement("exponent vector has wrong length")
        if coeff == ZERO:
            return self._nzero
        vec, char = self._reduce_vector(exps)
        coeff = self.coeff.mul(coeff, char)
        if coeff == ZERO:
            return self._nzero
        for name, e in zip(self.gens, vec):
            if e < 0 and name not in self.inverted:
                raise ForeignElement(f"negative exponent on non-invertible {name}")
        return (coeff, tuple(vec))

    def mul(self, a, b):
        (c1, e1), (c2, e2) = a, b
        c = self.coeff.mul(c1, c2)
        if c == ZERO:
            return self._nzero
        return self.normalize((c, tuple(x + y for x, y in zip(e1, e2))))

    def is_zero(self, elem):
        return elem[0] == ZERO

    def one(self):
        return (ONE, (0,) * len(self.gens))

    def zero(self):
        return self._nzero

    def degree(self, elem):
        return sum(abs(e) for e in elem[1])

    def sort_key(self, elem):
        return (1, elem[0], elem[1])

    def divide(self, t, l):
        """Multipliers m with m*l == t."""
        if self.is_zero(t) or self.is_zero(l):
            return []
        out = []
        diff = tuple(x - y for x, y in zip(t[1], l[1]))
        for c in self.coeff.backend.symbols:
            if c == ZERO or self.coeff.mul(c, l[0]) != t[0]:
                continue
            try:
                m = self.normalize((c, diff))
            except ForeignElement:
                continue
            if self.mul(m, l) == t:
                out.append(m)
        return out

    def multipliers(self, max_degree):
        coeffs = [c for c in self.coeff.backend.symbols if c != ZERO]
        out = set()
        for c in coeffs:
            for v in self._exp_vectors(max_degree):
                try:
                    out.add(self.normalize((c, v)))
                except ForeignElement:
                    pass
        return sorted(out, key=self.sort_key)

    @lru_cache(maxsize=8)
    def _exp_vectors(self, max_degree):
        ranges = []
        for name in self.gens:
            if name in self.inverted:
                ranges.append(range(-max_degree, max_degree + 1))
            else:
                ranges.append(range(0, max_degree + 1))
        return tuple(v for v in itertools.product(*ranges)
                     if sum(abs(x) for x in v) <= max_degree)

    def is_unit(self, elem):
        if self.is_zero(elem):
            return False
        coeff, exps = self.normalize(elem)
        if not self.coeff.is_unit(coeff):
            return False
        return all(e == 0 or name in self.inverted
                   for name, e in zip(self.gens, exps))

    def power(self, a, e):
        if e == 0:
            return self.one()
        if e < 0:
            coeff, exps = a
            cinv = self.coeff.backend.power(coeff, -1)
            return self.power(self.normalize((cinv, tuple(-x for x in exps))), -e)
        r = self.one()
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def gen_element(self, name):
        i = self.gens.index(name)
        e = [0] * len(self.gens)
        e[i] = 1
        return self.normalize((ONE, tuple(e)))

    def coeff_element(self, sym):
        return self.normalize((sym, (0,) * len(self.gens)))

    def render(self, elem):
        coeff, exps = elem
        if coeff == ZERO:
            return "0"
        parts = []
        if coeff != ONE or not any(exps):
            parts.append(coeff)
        for name, e in zip(self.gens, exps):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# Blueprint


class Blueprint:
    """A monoid backend plus a finite set of pre-addition generators."""

    def __init__(self, backend, relations=(), budget=None, name=None,
                 check_proper=True):
        self.backend = backend
        self.budget = budget or default_budget()
        self.name = name
        rels = []
        for lhs, rhs in relations:
            pair = self._normalize_relation(lhs, rhs)
            if pair is not None:
                rels.append(pair)
        self.relations = tuple(sorted(set(rels)))
        if check_proper:
            pair = improper_pair(self, _guard_budget(self.budget))
            if pair is not None:
                a, b = pair
                raise ImproperRelations(
                    f"relations identify {self.render(a)} and {self.render(b)}")

    # -- basic element handling -------------------------------------------
    def normalize(self, elem):
        return self.backend.normalize(elem)

    def normalize_sum(self, terms):
        out = [self.backend.normalize(t) for t in terms]
        out = [t for t in out if not self.backend.is_zero(t)]
        out.sort(key=self.backend.sort_key)
        return tuple(out)

    def _normalize_relation(self, lhs, rhs):
        l, r = self.normalize_sum(lhs), self.normalize_sum(rhs)
        if l == r:
            return None
        return (l, r) if l <= r else (r, l)

    def mul(self, a, b):
        return self.backend.mul(a, b)

    def one(self):
        return self.backend.one()

    def zero(self):
        return self.backend.zero()

    def is_unit(self, elem):
        return self.backend.is_unit(elem)

    def render(self, elem):
        return self.backend.render(elem)

    def render_sum(self, terms):
        if not terms:
            return "0"
        return " + ".join(self.render(t) for t in terms)

    def __repr__(self):
        n = self.name or f"<{self.backend.kind} blueprint>"
        return f"Blueprint({n}, {len(self.relations)} relations)"

    @property
    def is_semiring(self):
        return (self.backend.kind == "finite"
                and self.backend.add_table is not None)

    def oriented_relations(self):
        out = []
        for l, r in self.relations:
            out.append((l, r))
            out.append((r, l))
        return out

    def carrier(self):
        if self.backend.kind != "finite":
            raise BlueprintError("infinite carrier; use membership predicates")
        return self.backend.symbols

    def element(self, text):
        return parse_element(self, text)

    def sum_of(self, text):
        text = text.strip()
        if not text or text == "0":
            return ()
        return self.normalize_sum([parse_element(self, t.strip())
                                   for t in text.split("+")])


def _guard_budget(budget):
    return Budget(min(budget.max_degree, 3), budget.max_terms,
                  min(budget.max_steps, 4000))


def mk_blueprint(backend, relations=(), budget=None, name=None):
    """Validate and build a blueprint; runs the properness guard."""
    return Blueprint(backend, relations, budget=budget, name=name)


# ---------------------------------------------------------------------------
# The derivation engine


def _scale(bp, m, terms):
    return [bp.mul(m, t) for t in terms]


def _contains(u_counter, part):
    for t, kk in part.items():
        if u_counter[t] < kk:
            return False
    return True


def _rewrites(bp, u, budget):
    """One-step rewrites of the formal sum u under the generated congruence."""
    backend = bp.backend
    u_counter = Counter(u)
    for L, R in bp.oriented_relations():
        if L:
            cands = set()
            for t in set(u):
                for l in L:
                    cands.update(backend.divide(t, l))
            for m in sorted(cands, key=backend.sort_key):
                if backend.degree(m) > budget.max_degree:
                    continue
                mL = Counter(x for x in _scale(bp, m, L) if not backend.is_zero(x))
                if not mL or not _contains(u_counter, mL):
                    continue
                v = u_counter - mL
                for x in _scale(bp, m, R):
                    if not backend.is_zero(x):
                        v[x] += 1
                flat = tuple(sorted(v.elements(), key=backend.sort_key))
                if len(flat) <= budget.max_terms:
                    yield flat
        else:
            for m in backend.multipliers(budget.max_degree):
                add = [x for x in _scale(bp, m, R) if not backend.is_zero(x)]
                if not add:
                    continue
                v = list(u) + add
                if len(v) <= budget.max_terms:
                    yield tuple(sorted(v, key=backend.sort_key))


def _explore(bp, start, budget, targets=frozenset(), collect_singles=False):
    """Bounded BFS through the congruence class of `start`.

    Returns (hit_target, singles_found, truncated).
    """
    seen = {start}
    frontier = [start]
    singles = set()
    steps = 0
    truncated = False
    while frontier:
        nxt = []
        for u in frontier:
            for v in _rewrites(bp, u, budget):
                steps += 1
                if steps > budget.max_steps:
                    return False, singles, True
                if v in seen:
                    continue
                seen.add(v)
                if v in targets:
                    return True, singles, truncated
                if collect_singles and len(v) == 1:
                    singles.add(v[0])
                nxt.append(v)
        frontier = nxt
    return False, singles, truncated


def _derive3(bp, l, r, budget):
    """Three-valued core: Proved / Refuted / Unknown on normalized sums."""
    if l == r:
        return PROVED, None
    if bp.is_semiring:
        vl = bp.backend.eval_sum(l)
        vr = bp.backend.eval_sum(r)
        return (PROVED, None) if vl == vr else (REFUTED, (vl, vr))
    if not bp.relations:
        # The pre-addition generated by nothing relates sums iff their
        # zero-free normal forms coincide.
        return REFUTED, None
    half = Budget(budget.max_degree, budget.max_terms,
                  max(1, budget.max_steps // 2))
    hit, _, _ = _explore(bp, l, half, targets=frozenset([r]))
    if hit:
        return PROVED, None
    hit, _, _ = _explore(bp, r, half, targets=frozenset([l]))
    if hit:
        return PROVED, None
    return UNKNOWN, None


def derive(bp, lhs, rhs, budget=None):
    """Semi-decide whether lhs = rhs lies in the generated pre-addition."""
    budget = budget or bp.budget
    l = bp.normalize_sum(lhs)
    r = bp.normalize_sum(rhs)
    verdict, _ = _derive3(bp, l, r, budget)
    return PROVED if verdict == PROVED else UNKNOWN


def improper_pair(bp, budget):
    """Search for a derivable identification of two distinct elements."""
    if not bp.relations:
        return None
    for p in _probe_elements(bp):
        _, singles, _ = _explore(bp, (p,), budget, collect_singles=True)
        for s in sorted(singles, key=bp.backend.sort_key):
            if s != p:
                return (p, s)
    return None


def _probe_elements(bp):
    backend = bp.backend
    probes = []
    if backend.kind == "finite":
        probes.extend(s for s in backend.symbols if s != ZERO)
    else:
        probes.append(backend.one())
        for g in backend.gens:
            probes.append(backend.gen_element(g))
        for g, h in itertools.combinations_with_replacement(backend.gens, 2):
            probes.append(backend.mul(backend.gen_element(g),
                                      backend.gen_element(h)))
    for l, r in bp.relations:
        probes.extend(l)
        probes.extend(r)
    seen = []
    for p in probes:
        p = backend.normalize(p)
        if not backend.is_zero(p) and p not in seen:
            seen.append(p)
    return seen


# ---------------------------------------------------------------------------
# Element parsing (JSON monomial grammar)


def parse_element(bp, text):
    text = text.strip()
    backend = bp.backend
    if backend.kind == "finite":
        return backend.normalize(text)
    if text == "0":
        return backend.zero()
    coeff = ONE
    exps = [0] * len(backend.gens)
    for part in text.split("*"):
        part = part.strip()
        if not part:
            raise ForeignElement(f"bad monomial {text!r}")
        if "^" in part:
            var, _, pw = part.partition("^")
            var = var.strip()
            if var not in backend.gens:
                raise ForeignElement(f"unknown generator {var!r}")
            exps[backend.gens.index(var)] += int(pw)
        elif part in backend.gens:
            exps[backend.gens.index(part)] += 1
        else:
            coeff = bp.backend.coeff.mul(coeff, bp.backend.coeff.backend.normalize(part))
    return backend.normalize((coeff, tuple(exps)))


# ---------------------------------------------------------------------------
# Ideals


@dataclass(frozen=True)
class IdealDescriptor:
    blueprint: Blueprint
    given: tuple
    minimal: tuple          # minimal generators (monomial) or the full set (finite)
    saturated: str          # "exact" | "truncated"

    def contains(self, elem):
        bp = self.blueprint
        backend = bp.backend
        elem = backend.normalize(elem)
        if backend.is_zero(elem):
            return True
        if backend.kind == "finite":
            return elem in self.minimal
        return any(_monomial_divides(backend, g, elem) for g in self.minimal)

    def is_proper(self):
        return not self.contains(self.blueprint.one())

    def generator_names(self):
        bp = self.blueprint
        if bp.backend.kind == "finite":
            gens = [s for s in self.minimal if s != ZERO]
            return tuple(sorted(gens))
        return tuple(sorted(bp.render(g) for g in self.minimal))

    def __repr__(self):
        inner = ", ".join(self.generator_names())
        return f"({inner})" if inner else "(0)"


def _monomial_divides(backend, g, m):
    if backend.is_zero(g):
        return backend.is_zero(m)
    diff = tuple(x - y for x, y in zip(m[1], g[1]))
    for c in backend.coeff.backend.symbols:
        if c == ZERO or backend.coeff.mul(c, g[0]) != m[0]:
            continue
        try:
            h = backend.normalize((c, diff))
        except ForeignElement:
            continue
        if backend.mul(h, g) == m:
            return True
    return False


def additive_closure(bp, elems, budget=None):
    """Smallest ideal containing `elems`: closed under multiplication by the
    monoid and under the rule (sum a_i + c = sum b_j, a_i and b_j in I) => c in I."""
    budget = budget or bp.budget
    backend = bp.backend
    if backend.kind == "finite":
        return _finite_additive_closure(bp, elems, budget)
    mins: list = []

    def add_gen(m):
        m = backend.normalize(m)
        if backend.is_zero(m):
            return False
        for g in mins:
            if _monomial_divides(backend, g, m):
                return False
        mins[:] = [g for g in mins if not _monomial_divides(backend, m, g)]
        mins.append(m)
        return True

    for e in elems:
        add_gen(e)

    def contains(m):
        return backend.is_zero(m) or any(_monomial_divides(backend, g, m)
                                         for g in mins)

    saturated = "exact"
    steps = 0
    changed = True
    while changed and bp.relations:
        changed = False
        for L, R in bp.oriented_relations():
            cands = {backend.one()}
            for g in list(mins):
                for t in L + R:
                    cands.update(backend.divide(g, t))
            for gname in backend.gens:
                cands.add(backend.gen_element(gname))
            for m in sorted(cands, key=backend.sort_key):
                if backend.degree(m) > budget.max_degree:
                    continue
                steps += 1
                if steps > budget.max_steps:
                    return IdealDescriptor(bp, bp.normalize_sum(elems),
                                           tuple(sorted(mins, key=backend.sort_key)),
                                           "truncated")
                mR = [x for x in _scale(bp, m, R) if not backend.is_zero(x)]
                if not all(contains(x) for x in mR):
                    continue
                mL = [x for x in _scale(bp, m, L) if not backend.is_zero(x)]
                missing = [x for x in mL if not contains(x)]
                if len(missing) == 1 and add_gen(missing[0]):
                    changed = True
    return IdealDescriptor(bp, bp.normalize_sum(elems),
                           tuple(sorted(mins, key=backend.sort_key)), saturated)


def _finite_additive_closure(bp, elems, budget):
    backend = bp.backend
    members = {ZERO}
    members.update(backend.normalize(e) for e in elems)
    steps = 0
    truncated = False
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for s in backend.symbols:
                p = backend.mul(a, s)
                if p not in members:
                    members.add(p)
                    changed = True
        if bp.is_semiring:
            # sum a_i + c = sum b_j with members a_i, b_j forces c, with sums
            # evaluated in the semiring (up to two members per side).
            pool = [()] + [(a,) for a in members] + \
                   [(a, b) for a in members for b in members]
            targets = {backend.eval_sum(list(b)) for b in pool}
            for c in list(backend.symbols):
                if c in members:
                    continue
                for aa in pool:
                    if backend.eval_sum(list(aa) + [c]) in targets:
                        members.add(c)
                        changed = True
                        break
        for L, R in bp.oriented_relations():
            for m in backend.multipliers(0):
                steps += 1
                if steps > budget.max_steps:
                    truncated = True
                    changed = False
                    break
                mR = [x for x in _scale(bp, m, R) if not backend.is_zero(x)]
                if not all(x in members for x in mR):
                    continue
                mL = [x for x in _scale(bp, m, L) if not backend.is_zero(x)]
                missing = [x for x in mL if x not in members]
                if len(missing) == 1:
                    members.add(missing[0])
                    changed = True
            if truncated:
                break
        if truncated:
            break
    return IdealDescriptor(bp, bp.normalize_sum(elems), tuple(sorted(members)),
                           "truncated" if truncated else "exact")


def is_prime_ideal(bp, ideal):
    """True / False / Unknown: is the complement a multiplicative set?"""
    if ideal.saturated != "exact":
        return UNKNOWN
    if not ideal.is_proper():
        raise NotAnIdeal("ideal is not proper")
    backend = bp.backend
    if backend.kind == "finite":
        comp = [s for s in backend.symbols if s not in ideal.minimal]
        if ONE not in comp:
            return False
        return all(backend.mul(a, b) in comp for a in comp for b in comp)
    for g in ideal.minimal:
        coeff, exps = g
        if not backend.coeff.is_unit(coeff):
            return False
        nz = [e for e in exps if e]
        if len(nz) != 1 or nz[0] != 1:
            return False
    varset = {backend.gens[i] for g in ideal.minimal
              for i, e in enumerate(g[1]) if e}
    outside = [backend.gen_element(n) for n in backend.gens if n not in varset]
    for a in outside:
        for b in outside:
            if ideal.contains(backend.mul(a, b)):
                return False
    return True


# ---------------------------------------------------------------------------
# Quotients


def quotient_by_ideal(bp, ideal, budget=None):
    """B/I with I collapsed to zero and relations pushed forward.

    Pushed relations that identify two distinct surviving elements migrate
    into the monoid structure (identification lattice / symbol merge) so the
    quotient stays proper. Satisfies the universal property: morphisms killing
    I factor uniquely through the result.
    """
    budget = budget or bp.budget
    if not ideal.is_proper():
        raise ImproperIdeal("cannot quotient by an improper ideal")
    backend = bp.backend
    if backend.kind == "finite":
        return _finite_quotient(bp, ideal, budget)

    kill = set()
    for g in ideal.minimal:
        coeff, exps = g
        nz = [(i, e) for i, e in enumerate(exps) if e]
        if len(nz) != 1 or nz[0][1] != 1 or not backend.coeff.is_unit(coeff):
            raise UnsupportedIdeal("monomial quotients need variable-generated ideals")
        kill.add(nz[0][0])
    keep = [i for i in range(len(backend.gens)) if i not in kill]
    gens = tuple(backend.gens[i] for i in keep)
    inverted = tuple(n for n in backend.inverted if n in gens)
    lattice = []
    for vec, char in backend.lattice:
        if any(vec[i] for i in kill):
            raise UnsupportedIdeal("ideal meets the identification lattice")
        lattice.append((tuple(vec[i] for i in keep), char))

    def push(elem):
        coeff, exps = elem
        if coeff == ZERO or any(exps[i] for i in kill):
            return None
        return (coeff, tuple(exps[i] for i in keep))

    rels = []
    for l, r in bp.relations:
        pl = [push(t) for t in l]
        pr = [push(t) for t in r]
        rels.append(([t for t in pl if t is not None],
                     [t for t in pr if t is not None]))
    out = build_proper_monomial(backend.coeff, gens, inverted, lattice, rels,
                                budget, name=f"{bp.name or 'B'}/{ideal!r}")
    out.killed_generators = tuple(backend.gens[i] for i in sorted(kill))
    return out


def build_proper_monomial(coeff_bp, gens, inverted, lattice, relations, budget,
                          name=None):
    """Build a monomial blueprint, migrating derivable single=single
    identifications into the lattice until the properness guard is clean."""
    lattice = list(lattice)
    for _ in range(20):
        backend = MonomialBackend(coeff_bp, gens, inverted, lattice)
        rels = []
        improper = None
        for l, r in relations:
            nl = [backend.normalize(t) for t in l]
            nr = [backend.normalize(t) for t in r]
            nl = [t for t in nl if not backend.is_zero(t)]
            nr = [t for t in nr if not backend.is_zero(t)]
            if sorted(nl) == sorted(nr):
                continue
            if (not nl and len(nr) == 1) or (not nr and len(nl) == 1):
                raise ImproperIdeal("a pushed relation kills a surviving element")
            if len(nl) == 1 and len(nr) == 1:
                improper = (nl[0], nr[0])
                break
            rels.append((nl, nr))
        if improper is None:
            candidate = Blueprint(backend, rels, budget=budget, name=name,
                                  check_proper=False)
            improper = improper_pair(candidate, _guard_budget(budget))
            if improper is None:
                return candidate
        (c1, e1), (c2, e2) = improper
        vec = tuple(x - y for x, y in zip(e1, e2))
        if not any(vec):
            raise ImproperRelations("quotient identifies distinct coefficients")
        if all(any(e) for e in (e1, e2)):
            # m1 = m2 with neither side a unit monomial is a genuine monoid
            # identification (a non-free semigroup), outside this backend
            raise UnsupportedIdeal(
                "quotient needs a non-unit monomial identification")
        char = next((c for c in coeff_bp.backend.symbols
                     if coeff_bp.mul(c, c1) == c2), None)
        if char is None or not coeff_bp.is_unit(char):
            raise ImproperRelations("identification needs a unit character")
        lattice.append((vec, char))
    raise ImproperRelations("identification lattice failed to stabilize")


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # deterministic: keep ZERO, then ONE, then lexicographic minimum
        order = {ZERO: 0, ONE: 1}
        ka = (order.get(ra, 2), ra)
        kb = (order.get(rb, 2), rb)
        keep, drop = (ra, rb) if ka <= kb else (rb, ra)
        self.parent[drop] = keep
        return True


def _finite_quotient(bp, ideal, budget):
    backend = bp.backend
    uf = _UnionFind(backend.symbols)
    for s in ideal.minimal:
        uf.union(ZERO, s)
    for _ in range(40):
        # close the identification under multiplicativity
        changed = True
        while changed:
            changed = False
            reps = {}
            for a in backend.symbols:
                for b in backend.symbols:
                    key = (uf.find(a), uf.find(b))
                    val = uf.find(backend.mul(a, b))
                    if key in reps:
                        if reps[key] != val:
                            uf.union(reps[key], val)
                            changed = True
                    else:
                        reps[key] = val
        proj = {s: uf.find(s) for s in backend.symbols}
        syms = sorted(set(proj.values()), key=lambda s: (s != ZERO, s != ONE, s))
        mul = {}
        for a in backend.symbols:
            for b in backend.symbols:
                mul[(proj[a], proj[b])] = proj[backend.mul(a, b)]
        rels = []
        for l, r in bp.relations:
            nl = [proj[t] for t in l if proj[t] != ZERO]
            nr = [proj[t] for t in r if proj[t] != ZERO]
            if sorted(nl) != sorted(nr):
                rels.append((nl, nr))
        table = FiniteTable(syms, mul)
        candidate = Blueprint(table, rels, budget=budget,
                              name=f"{bp.name or 'B'}/I", check_proper=False)
        pair = improper_pair(candidate, _guard_budget(budget))
        if pair is None:
            candidate.projection = proj
            return candidate
        uf.union(*pair)
    raise ImproperRelations("quotient symbol merging failed to stabilize")


def quotient_universal_factoring(bp, ideal, quotient, morphism, budget=None):
    """The unique morphism B/I -> C with g(f(x)) = h(x), or None."""
    budget = budget or bp.budget
    if bp.backend.kind != "finite":
        raise BlueprintError("universal-property checks run on finite tables")
    images = {}
    for s in bp.backend.symbols:
        q = quotient.projection[s]
        tgt = morphism.apply(s)
        if q in images and images[q] != tgt:
            return None
        images[q] = tgt
    g = BlueprintMorphism(quotient, morphism.target, images)
    verdict, _ = is_morphism(g, budget)
    return g if verdict == PROVED else None


# ---------------------------------------------------------------------------
# Localization and unit fields


def localize(bp, elems, budget=None):
    """Invert a finitely generated multiplicative set.

    Inverting 0 yields the zero blueprint, flagged via `zero_inverted`.
    """
    budget = budget or bp.budget
    backend = bp.backend
    elems = [backend.normalize(e) for e in elems]
    if any(backend.is_zero(e) for e in elems):
        zero_table = FiniteTable((ZERO,), {(ZERO, ZERO): ZERO})
        out = Blueprint(zero_table, (), budget=budget, name="0",
                        check_proper=False)
        out.zero_inverted = True
        return out
    if backend.kind == "monomial":
        newly = set()
        for e in elems:
            for name, exp in zip(backend.gens, e[1]):
                if exp:
                    newly.add(name)
        nb = MonomialBackend(backend.coeff, backend.gens,
                             backend.inverted | newly, backend.lattice)
        out = Blueprint(nb, [(list(l), list(r)) for l, r in bp.relations],
                        budget=budget, name=f"{bp.name or 'B'}_loc",
                        check_proper=False)
        out.zero_inverted = False
        return out
    return _finite_localize(bp, elems, budget)


def _finite_localize(bp, elems, budget):
    backend = bp.backend
    sset = {ONE}
    frontier = list(elems)
    while frontier:
        s = frontier.pop()
        if s not in sset:
            new = [backend.mul(s, t) for t in sset] + [s]
            sset.add(s)
            frontier.extend(new)
    sset = sorted(sset)
    pairs = [(a, s) for a in backend.symbols for s in sset]

    def eq(p, q):
        a, s = p
        b, t = q
        return any(backend.mul(u, backend.mul(a, t)) == backend.mul(u, backend.mul(b, s))
                   for u in sset)

    classes: list[list] = []
    for p in pairs:
        for cls in classes:
            if eq(p, cls[0]):
                cls.append(p)
                break
        else:
            classes.append([p])

    def label(cls):
        if any(a == ZERO for a, _s in cls):
            return ZERO
        if (ONE, ONE) in cls:
            return ONE
        plain = [a for (a, s) in cls if s == ONE]
        if plain:
            return min(plain)
        a, s = min(cls)
        return f"{a}/{s}"

    rep = {}
    for cls in classes:
        nm = label(cls)
        for p in cls:
            rep[p] = nm
    symbols = sorted(set(rep.values()), key=lambda s: (s != ZERO, s != ONE, s))
    mul = {}
    for p in pairs:
        for q in pairs:
            prod = (backend.mul(p[0], q[0]), backend.mul(p[1], q[1]))
            mul[(rep[p], rep[q])] = rep[prod]
    add = None
    if bp.is_semiring:
        add = {}
        for p in pairs:
            for q in pairs:
                num = backend.add_table[(backend.mul(p[0], q[1]),
                                         backend.mul(q[0], p[1]))]
                s = (num, backend.mul(p[1], q[1]))
                key = (rep[p], rep[q])
                if key in add and add[key] != rep[s]:
                    raise BlueprintError("localized addition is inconsistent")
                add[key] = rep[s]
    table = FiniteTable(symbols, mul, add)
    rels = [([rep[(t, ONE)] for t in l], [rep[(t, ONE)] for t in r])
            for l, r in bp.relations]
    out = Blueprint(table, rels, budget=budget,
                    name=f"{bp.name or 'B'}_loc", check_proper=False)
    out.zero_inverted = False
    out.localization_map = {s: rep[(s, ONE)] for s in backend.symbols}
    return out


def localization_morphism(bp, localized):
    if bp.backend.kind == "monomial":
        images = {g: localized.backend.gen_element(g) for g in bp.backend.gens}
        for c in bp.backend.coeff.backend.symbols:
            images[c] = localized.backend.coeff_element(c)
        return BlueprintMorphism(bp, localized, images)
    images = {s: localized.localization_map[s] for s in bp.backend.symbols}
    return BlueprintMorphism(bp, localized, images)


def unit_field(bp):
    """The blue field on the units plus zero, with the restricted relations."""
    backend = bp.backend
    if backend.kind == "finite":
        units = set(backend.units())
        syms = sorted(units | {ZERO}, key=lambda s: (s != ZERO, s != ONE, s))
        mul = {(a, b): backend.mul(a, b) for a in syms for b in syms}
        rels = [(l, r) for l, r in bp.relations
                if all(t in syms for t in l + r)]
        add = None
        if bp.is_semiring:
            add0 = {(a, b): backend.add_table[(a, b)] for a in syms for b in syms}
            if all(v in set(syms) for v in add0.values()):
                add = add0
        return Blueprint(FiniteTable(syms, mul, add), rels, budget=bp.budget,
                         name=f"{bp.name or 'B'}^x", check_proper=False)
    coeff = backend.coeff if is_blue_field(backend.coeff) else unit_field(backend.coeff)
    gens = tuple(n for n in backend.gens if n in backend.inverted)
    keep = [i for i, n in enumerate(backend.gens) if n in backend.inverted]
    lattice = [(tuple(v[i] for i in keep), c) for v, c in backend.lattice]
    nb = MonomialBackend(coeff, gens, gens, lattice)

    def restrict(t):
        if not backend.is_unit(t):
            return None
        c, exps = t
        return (c, tuple(exps[i] for i in keep))

    rels = []
    for l, r in bp.relations:
        nl = [restrict(t) for t in l]
        nr = [restrict(t) for t in r]
        if all(t is not None for t in nl + nr):
            rels.append((nl, nr))
    return Blueprint(nb, rels, budget=bp.budget, name=f"{bp.name or 'B'}^x",
                     check_proper=False)


def is_blue_field(bp):
    backend = bp.backend
    if backend.kind == "finite":
        units = set(backend.units())
        return all(s in units for s in backend.symbols if s != ZERO)
    return (all(n in backend.inverted for n in backend.gens)
            and is_blue_field(backend.coeff))


# ---------------------------------------------------------------------------
# Morphisms


class BlueprintMorphism:
    """A multiplicative map given by images of generators / carrier symbols."""

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = dict(images)

    def apply(self, elem):
        src, tgt = self.source.backend, self.target.backend
        elem = src.normalize(elem)
        if src.kind == "finite":
            if src.is_zero(elem):
                return tgt.zero()
            if elem == ONE:
                return tgt.one()
            return tgt.normalize(self.images[elem])
        coeff, exps = elem
        if coeff == ZERO:
            return tgt.zero()
        acc = tgt.one() if coeff == ONE else tgt.normalize(self.images[coeff])
        for name, e in zip(src.gens, exps):
            if e:
                acc = tgt.mul(acc, tgt.power(tgt.normalize(self.images[name]), e))
        return acc

    def apply_sum(self, terms):
        return self.target.normalize_sum([self.apply(t) for t in terms])

    def __repr__(self):
        bits = []
        for k, v in sorted(self.images.items(), key=lambda kv: str(kv[0])):
            key = k if isinstance(k, str) else self.source.render(k)
            bits.append(f"{key}->{self.target.render(v)}")
        return "Morphism(" + ", ".join(bits) + ")"


def is_morphism(f, budget=None):
    """(Proved | Unknown | Refuted | 'RefutedOnGenerator', evidence)."""
    budget = budget or f.source.budget
    src, tgt = f.source.backend, f.target.backend
    try:
        if src.kind == "finite":
            for a in src.symbols:
                for b in src.symbols:
                    if f.apply(src.mul(a, b)) != tgt.mul(f.apply(a), f.apply(b)):
                        return REFUTED, (a, b)
        else:
            cb = src.coeff.backend
            for a in cb.symbols:
                for b in cb.symbols:
                    lhs = f.apply(src.coeff_element(cb.mul(a, b)))
                    rhs = tgt.mul(f.apply(src.coeff_element(a)),
                                  f.apply(src.coeff_element(b)))
                    if lhs != rhs:
                        return REFUTED, (a, b)
            for l, r in src.coeff.relations:
                il = f.apply_sum([src.coeff_element(t) for t in l])
                ir = f.apply_sum([src.coeff_element(t) for t in r])
                verdict, _ = _derive3(f.target, il, ir, budget)
                if verdict == REFUTED:
                    return "RefutedOnGenerator", (l, r)
                if verdict == UNKNOWN:
                    return UNKNOWN, None
            for vec, char in src.lattice:
                acc = tgt.one()
                for name, e in zip(src.gens, vec):
                    if e:
                        acc = tgt.mul(acc, tgt.power(tgt.normalize(f.images[name]), e))
                if acc != f.apply(src.coeff_element(char)):
                    return REFUTED, (vec, char)
    except BlueprintError:
        return REFUTED, "image of an invertible generator is not a unit"
    overall = PROVED
    for l, r in f.source.relations:
        il, ir = f.apply_sum(l), f.apply_sum(r)
        verdict, _ = _derive3(f.target, il, ir, budget)
        if verdict == REFUTED:
            return "RefutedOnGenerator", (l, r)
        if verdict == UNKNOWN:
            overall = UNKNOWN
    return overall, None


# ---------------------------------------------------------------------------
# Presentations over N and Z


@dataclass(frozen=True)
class Presentation:
    """Finitely presented (semi)ring: generators plus polynomial relations.

    Polynomials map exponent tuples to integer coefficients. A semiring
    presentation has (lhs, rhs) pairs with N-coefficients; a ring presentation
    has single polynomials lhs - rhs.
    """
    gens: tuple
    relations: tuple
    ring: bool

    def __str__(self):
        base = "Z" if self.ring else "N"
        gens = ",".join(self.gens)
        if self.ring:
            rels = "; ".join(render_poly(self.gens, r) for r in self.relations)
        else:
            rels = "; ".join(f"{render_poly(self.gens, l)} = {render_poly(self.gens, r)}"
                             for l, r in self.relations)
        return f"{base}[{gens}] / ({rels})" if rels else f"{base}[{gens}]"


def render_poly(gens, poly):
    if not poly:
        return "0"
    bits = []
    for exps, c in sorted(poly.items()):
        mono = "*".join(f"{g}^{e}" if e > 1 else g
                        for g, e in zip(gens, exps) if e)
        if not mono:
            bits.append(str(c))
        elif c == 1:
            bits.append(mono)
        elif c == -1:
            bits.append(f"-{mono}")
        else:
            bits.append(f"{c}*{mono}")
    return " + ".join(bits).replace("+ -", "- ")


def _poly_sub(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) - v
        if not out[k]:
            del out[k]
    return out


def _presentation_gens(bp):
    backend = bp.backend
    gens = []
    if backend.kind == "finite":
        gens.extend(s for s in backend.symbols if s not in (ZERO, ONE))
    else:
        gens.extend(s for s in backend.coeff.backend.symbols
                    if s not in (ZERO, ONE))
        gens.extend(backend.gens)
        gens.extend(n + "__inv" for n in backend.gens if n in backend.inverted)
    return tuple(gens)


def _sum_terms_poly(bp, terms, gi):
    poly: dict = {}
    backend = bp.backend
    n = len(gi)
    for t in terms:
        exps = [0] * n
        if backend.kind == "finite":
            if t == ZERO:
                continue
            if t != ONE:
                exps[gi[t]] = 1
        else:
            coeff, es = t
            if coeff == ZERO:
                continue
            if coeff != ONE:
                exps[gi[coeff]] = 1
            for name, e in zip(backend.gens, es):
                if e > 0:
                    exps[gi[name]] += e
                elif e < 0:
                    exps[gi[name + "__inv"]] += -e
        key = tuple(exps)
        poly[key] = poly.get(key, 0) + 1
    return poly


def _structural_polys(bp, gi):
    backend = bp.backend
    n = len(gi)
    unit = {tuple([0] * n): 1}

    def mono(assignments):
        exps = [0] * n
        for g, e in assignments:
            exps[gi[g]] += e
        return {tuple(exps): 1}

    def table_rels(table, symbols):
        out = []
        for a in symbols:
            for b in symbols:
                if a <= b and ZERO not in (a, b) and ONE not in (a, b):
                    prod = table.mul(a, b)
                    lhs = mono([(a, 1), (b, 1)])
                    if prod == ZERO:
                        rhs = {}
                    elif prod == ONE:
                        rhs = unit
                    else:
                        rhs = mono([(prod, 1)])
                    out.append((lhs, rhs))
        return out

    out = []
    if backend.kind == "finite":
        out.extend(table_rels(backend, backend.symbols))
    else:
        cb = backend.coeff.backend
        out.extend(table_rels(cb, cb.symbols))
        for l, r in backend.coeff.relations:
            out.append((_sum_terms_poly_symbols(l, gi, n),
                        _sum_terms_poly_symbols(r, gi, n)))
        for name in backend.gens:
            if name in backend.inverted:
                out.append((mono([(name, 1), (name + "__inv", 1)]), unit))
        for vec, char in backend.lattice:
            assignments = []
            for name, e in zip(backend.gens, vec):
                if e > 0:
                    assignments.append((name, e))
                elif e < 0:
                    assignments.append((name + "__inv", -e))
            rhs = unit if char == ONE else mono([(char, 1)])
            out.append((mono(assignments), rhs))
    return out


def _sum_terms_poly_symbols(terms, gi, n):
    poly: dict = {}
    for t in terms:
        exps = [0] * n
        if t == ZERO:
            continue
        if t != ONE:
            exps[gi[t]] = 1
        key = tuple(exps)
        poly[key] = poly.get(key, 0) + 1
    return poly


def semiring_presentation(bp):
    """B^+ = N[A]/R as a finitely presented semiring."""
    gens = _presentation_gens(bp)
    gi = {g: i for i, g in enumerate(gens)}
    rels = list(_structural_polys(bp, gi))
    for l, r in bp.relations:
        rels.append((_sum_terms_poly(bp, l, gi), _sum_terms_poly(bp, r, gi)))
    canon = set()
    for l, r in rels:
        pair = (tuple(sorted(l.items())), tuple(sorted(r.items())))
        if pair[0] == pair[1]:
            continue
        canon.add(pair if pair[0] <= pair[1] else (pair[1], pair[0]))
    out = tuple((dict(l), dict(r)) for l, r in sorted(canon))
    return Presentation(gens, out, ring=False)


def ring_presentation(bp):
    """B_Z^+ = Z[A]/I(R) as a finitely presented ring."""
    semi = semiring_presentation(bp)
    seen = set()
    out = []
    for l, r in semi.relations:
        poly = _poly_sub(l, r)
        if not poly:
            continue
        key = tuple(sorted(poly.items()))
        nkey = tuple(sorted((k, -v) for k, v in poly.items()))
        if key in seen or nkey in seen:
            continue
        seen.add(key)
        out.append(poly)
    return Presentation(semi.gens, tuple(out), ring=True)


def _int_in_field(c, field):
    out = 0
    for _ in range(c % field.p):
        out = field.add(out, 1)
    return out


def eval_poly(poly, values, field):
    acc = 0
    for exps, c in poly.items():
        term = _int_in_field(c, field)
        for v, e in zip(values, exps):
            for _ in range(e):
                term = field.mul(term, v)
        acc = field.add(acc, term)
    return acc


def count_presentation_points(pres, q):
    """Number of homomorphisms of the presented (semi)ring into F_q."""
    field = gf(q)
    count = 0
    for values in itertools.product(range(q), repeat=len(pres.gens)):
        ok = True
        for rel in pres.relations:
            if pres.ring:
                if eval_poly(rel, values, field) != 0:
                    ok = False
                    break
            else:
                l, r = rel
                if eval_poly(l, values, field) != eval_poly(r, values, field):
                    ok = False
                    break
        if ok:
            count += 1
    return count


def presentation_normalizes_to_integers(pres):
    """Greedily eliminate generators pinned by linear monic relations; True if
    everything reduces away over Z (the presented ring is the integers)."""
    if not pres.ring:
        raise ValueError("ring presentations only")
    gens = list(pres.gens)
    values: dict = {}
    rels = [dict(r) for r in pres.relations]
    changed = True
    while changed:
        changed = False
        for rel in rels:
            live_terms = []
            const = Fraction(0)
            ok = True
            for exps, c in rel.items():
                unknown = [(i, e) for i, e in enumerate(exps)
                           if e and gens[i] not in values]
                factor = Fraction(c)
                for i, e in enumerate(exps):
                    if e and gens[i] in values:
                        factor *= values[gens[i]] ** e
                if not unknown:
                    const += factor
                else:
                    live_terms.append((unknown, factor))
            if not ok or len(live_terms) != 1:
                continue
            unknown, factor = live_terms[0]
            if len(unknown) != 1 or unknown[0][1] != 1 or factor == 0:
                continue
            values[gens[unknown[0][0]]] = -const / factor
            changed = True
    if len(values) < len(gens):
        return False
    for rel in rels:
        total = Fraction(0)
        for exps, c in rel.items():
            term = Fraction(c)
            for i, e in enumerate(exps):
                if e:
                    term *= values[gens[i]] ** e
            total += term
        if total != 0:
            return False
    return all(v.denominator == 1 for v in values.values())


# ---------------------------------------------------------------------------
# Semiring targets and morphism enumeration


@lru_cache(maxsize=None)
def field_blueprint(q):
    """F_q as a finite-table semiring blueprint (symbols '0'..'q-1')."""
    f = gf(q)
    syms = [str(i) for i in range(q)]
    mul = {(str(a), str(b)): str(f.mul(a, b)) for a in range(q) for b in range(q)}
    add = {(str(a), str(b)): str(f.add(a, b)) for a in range(q) for b in range(q)}
    return Blueprint(FiniteTable(syms, mul, add), (), name=f"F{q}",
                     check_proper=False)


@lru_cache(maxsize=None)
def boolean_semiring_blueprint():
    """B1 with its idempotent addition table attached."""
    mul = {(a, b): (ONE if a == b == ONE else ZERO)
           for a in (ZERO, ONE) for b in (ZERO, ONE)}
    add = {(ZERO, ZERO): ZERO, (ZERO, ONE): ONE, (ONE, ZERO): ONE, (ONE, ONE): ONE}
    return Blueprint(FiniteTable((ZERO, ONE), mul, add), (), name="B1+",
                     check_proper=False)


def enumerate_morphisms(bp, target, budget=None):
    """All blueprint morphisms into a finite semiring-table target."""
    budget = budget or bp.budget
    if not target.is_semiring:
        raise BlueprintError("morphism enumeration needs a semiring target")
    tb = target.backend
    backend = bp.backend
    out = []
    if backend.kind == "finite":
        frees = [s for s in backend.symbols if s not in (ZERO, ONE)]
        for values in itertools.product(tb.symbols, repeat=len(frees)):
            images = dict(zip(frees, values))
            images[ZERO] = ZERO
            images[ONE] = ONE
            f = BlueprintMorphism(bp, target, images)
            ok = all(f.apply(backend.mul(a, b)) == tb.mul(f.apply(a), f.apply(b))
                     for a in backend.symbols for b in backend.symbols)
            if not ok:
                continue
            if all(tb.eval_sum(f.apply_sum(l)) == tb.eval_sum(f.apply_sum(r))
                   for l, r in bp.relations):
                out.append(f)
        return out
    cb = backend.coeff.backend
    cfrees = [s for s in cb.symbols if s not in (ZERO, ONE)]
    coeff_assignments = []
    for values in itertools.product(tb.symbols, repeat=len(cfrees)):
        images = dict(zip(cfrees, values))
        images[ZERO] = ZERO
        images[ONE] = ONE
        if any(tb.mul(images[a], images[b]) != images[cb.mul(a, b)]
               for a in cb.symbols for b in cb.symbols):
            continue
        if any(tb.eval_sum([images[t] for t in l]) != tb.eval_sum([images[t] for t in r])
               for l, r in backend.coeff.relations):
            continue
        coeff_assignments.append(images)
    units = sorted(set(tb.symbols) - {ZERO})
    gen_domains = [units if name in backend.inverted else list(tb.symbols)
                   for name in backend.gens]
    for cimages in coeff_assignments:
        for values in itertools.product(*gen_domains):
            images = dict(cimages)
            images.update(zip(backend.gens, values))
            ok = True
            for vec, char in backend.lattice:
                acc = ONE
                for name, e in zip(backend.gens, vec):
                    if e:
                        acc = tb.mul(acc, tb.power(images[name], e))
                if acc != images.get(char, char):
                    ok = False
                    break
            if not ok:
                continue
            f = BlueprintMorphism(bp, target, images)
            for l, r in bp.relations:
                if tb.eval_sum(f.apply_sum(l)) != tb.eval_sum(f.apply_sum(r)):
                    ok = False
                    break
            if ok:
                out.append(f)
    return out


def refutation_targets():
    return [boolean_semiring_blueprint()] + \
        [field_blueprint(q) for q in prime_powers_upto(5)]


# ---------------------------------------------------------------------------
# Cancellativity and Frobenius predicates


def is_cancellative(bp, budget=None):
    """('yes', certificate) / ('no', witness) / ('unknown', None)."""
    budget = budget or bp.budget
    backend = bp.backend
    for l, r in bp.relations:
        common = Counter(l) & Counter(r)
        if not common:
            continue
        l2 = tuple(sorted((Counter(l) - common).elements(), key=backend.sort_key))
        r2 = tuple(sorted((Counter(r) - common).elements(), key=backend.sort_key))
        verdict, _ = _derive3(bp, l2, r2, budget)
        if verdict == PROVED:
            continue
        for target in refutation_targets():
            for f in enumerate_morphisms(bp, target, budget):
                tl = target.backend.eval_sum(f.apply_sum(l2))
                tr = target.backend.eval_sum(f.apply_sum(r2))
                if tl != tr:
                    return ("no", {"cancelled": tuple(common.elements()),
                                   "lhs": l2, "rhs": r2,
                                   "target": target.name})
    cert = _injectivity_certificate(bp, budget)
    if cert is not None:
        return ("yes", cert)
    return ("unknown", None)


def _injectivity_certificate(bp, budget):
    backend = bp.backend
    if backend.kind == "finite":
        for q in prime_powers_upto(9):
            target = field_blueprint(q)
            for f in enumerate_morphisms(bp, target, budget):
                imgs = [f.apply(s) for s in backend.symbols]
                if len(set(imgs)) == len(imgs):
                    return {"kind": "separating-hom", "target": target.name}
        return None
    return _multiplicative_independence_certificate(bp)


def _small_factor(n):
    n = abs(n)
    out = Counter()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] += 1
            n //= d
        d += 1
    if n > 1:
        out[n] += 1
    return out


def _multiplicative_independence_certificate(bp, tries=500):
    """A rational point of the relations with multiplicatively independent
    coordinates separates all monomials, certifying B -> B_Z^+ injective."""
    backend = bp.backend
    if not set(backend.coeff.backend.symbols) <= {ZERO, ONE, "-1"}:
        return None
    gens = backend.gens
    if len(gens) > 8 or backend.lattice:
        return None
    if not bp.relations:
        values = {g: Fraction(p) for g, p in zip(gens, _PRIMES)}
        return {"kind": "independent-point",
                "values": {g: str(v) for g, v in values.items()}}
    rng = random.Random(11)

    def term_value(values, t, skip=None):
        v = Fraction(-1) if t[0] == "-1" else Fraction(1)
        for j, e in enumerate(t[1]):
            if e and j != skip:
                v *= values[gens[j]] ** e
        return v

    for _ in range(tries):
        values: dict = {}
        ok = True
        for l, r in bp.relations:
            allterms = list(l) + list(r)
            pick = None
            for ti, t in enumerate(allterms):
                for i, e in enumerate(t[1]):
                    if e in (1, -1) and gens[i] not in values:
                        if sum(1 for t2 in allterms if t2[1][i]) == 1:
                            pick = (ti, i, e)
                            break
                if pick:
                    break
            if pick is None:
                ok = False
                break
            ti, iv, ev = pick
            for j, g in enumerate(gens):
                if g not in values and j != iv:
                    values[g] = Fraction(rng.choice(_PRIMES))
            tsolve = allterms[ti]
            in_lhs = ti < len(l)
            skip_l = ti if in_lhs else -1
            skip_r = ti - len(l) if not in_lhs else -1
            side_l = sum((term_value(values, t) for k, t in enumerate(l)
                          if k != skip_l), Fraction(0))
            side_r = sum((term_value(values, t) for k, t in enumerate(r)
                          if k != skip_r), Fraction(0))
            rhsval = (side_r - side_l) if in_lhs else (side_l - side_r)
            cpart = term_value(values, tsolve, skip=iv)
            if cpart == 0 or rhsval == 0:
                ok = False
                break
            sol = rhsval / cpart
            if ev == -1:
                sol = Fraction(1) / sol
            if sol <= 0:
                ok = False
                break
            values[gens[iv]] = sol
        if not ok or len(values) < len(gens):
            continue

        def eval_sum_exact(terms):
            return sum((term_value(values, t) for t in terms), Fraction(0))

        if any(v == 0 for v in values.values()):
            continue
        if not all(eval_sum_exact(l) == eval_sum_exact(r) for l, r in bp.relations):
            continue
        rows = []
        feasible = True
        for g in gens:
            v = values[g]
            if abs(v.numerator) >= 10 ** 12 or v.denominator >= 10 ** 12:
                feasible = False
                break
            fac = _small_factor(v.numerator)
            for p, e in _small_factor(v.denominator).items():
                fac[p] -= e
            rows.append(fac)
        if not feasible:
            continue
        primeset = sorted({p for fac in rows for p in fac})
        matrix = [[fac.get(p, 0) for p in primeset] for fac in rows]
        if matrix and lattice_rank(matrix) == len(gens):
            return {"kind": "independent-point",
                    "values": {g: str(values[g]) for g in gens}}
    return None


def frobenius_power_sum(bp, terms, p):
    return bp.normalize_sum([bp.backend.power(t, p) for t in terms])


def is_frobenius(bp, p, budget=None):
    """('Proved', None) / ('Counterexample', data) / ('Unknown', None)."""
    budget = budget or bp.budget
    any_unknown = False
    for l, r in bp.relations:
        lp = frobenius_power_sum(bp, l, p)
        rp = frobenius_power_sum(bp, r, p)
        verdict, _ = _derive3(bp, lp, rp, budget)
        if verdict == PROVED:
            continue
        for target in refutation_targets():
            for f in enumerate_morphisms(bp, target, budget):
                tl = target.backend.eval_sum(f.apply_sum(lp))
                tr = target.backend.eval_sum(f.apply_sum(rp))
                if tl != tr:
                    return ("Counterexample", {"relation": (l, r),
                                               "target": target.name})
        any_unknown = True
    return (UNKNOWN, None) if any_unknown else (PROVED, None)


# ---------------------------------------------------------------------------
# Torus recognition (Hypothesis (H) certificates)


def torus_certificate(bp):
    """(rank, 'F1' | 'F1^2') when B is G_m^rank over F1 or F1^2, else None.

    All generators must be invertible modulo the lattice; the unit group
    coeff-units x Z^n / L decides the rank, and Z/2 torsion together with the
    sign relation tau + 1 = 0 detects the F1^2 form.
    """
    backend = bp.backend
    if backend.kind == "finite":
        if not is_blue_field(bp):
            return None
        units = sorted(s for s in backend.symbols if s != ZERO)
        if units == [ONE]:
            return (0, "F1") if not bp.relations else None
        if len(units) == 2:
            other = next(u for u in units if u != ONE)
            if backend.mul(other, other) != ONE:
                return None
            expected = bp._normalize_relation([ONE, other], [])
            if bp.relations == (expected,):
                return (0, "F1^2")
        return None
    if not all(n in backend.inverted for n in backend.gens):
        return None
    cb = backend.coeff.backend
    cunits = sorted(s for s in cb.symbols if s != ZERO)
    n = len(backend.gens)
    if len(cunits) == 1:
        order2 = None
    elif len(cunits) == 2:
        order2 = next(u for u in cunits if u != ONE)
        if cb.mul(order2, order2) != ONE:
            return None
    else:
        return None
    extra = 1 if order2 else 0
    rows = []
    for vec, char in backend.lattice:
        row = [0] * (extra + n)
        if char != ONE:
            if order2 is None or char != order2:
                return None
            row[0] = 1
        row[extra:] = list(vec)
        rows.append(row)
    if order2:
        rows.append([2] + [0] * n)
    free, torsion = quotient_group_invariants(extra + n, rows)
    if not torsion:
        if order2 is not None:
            return None
        return (free, "F1") if not bp.relations else None
    if torsion == [2]:
        tau = _order_two_element(bp, order2)
        if tau is None:
            return None
        expected = bp._normalize_relation([tau, bp.one()], [])
        if bp.relations == (expected,):
            return (free, "F1^2")
        return None
    return None


def _order_two_element(bp, order2_coeff):
    """A representative of the unique order-2 class of the unit group."""
    backend = bp.backend
    n = len(backend.gens)
    basis = [list(v) for v, _ in backend.lattice]
    for vec in itertools.product(range(-2, 3), repeat=n):
        if basis and in_lattice(basis, [2 * x for x in vec]) \
                and not in_lattice(basis, list(vec)):
            cand = backend.normalize((ONE, tuple(vec)))
            if backend.mul(cand, cand) == backend.one() and cand != backend.one():
                return cand
    if order2_coeff is not None:
        return backend.coeff_element(order2_coeff)
    return None


# ---------------------------------------------------------------------------
# Isomorphism of finite-table blueprints


def finite_blueprints_isomorphic(b1, b2, budget=None):
    budget = budget or b1.budget
    t1, t2 = b1.backend, b2.backend
    if t1.kind != "finite" or t2.kind != "finite":
        raise BlueprintError("finite tables only")
    if len(t1.symbols) != len(t2.symbols):
        return None
    frees1 = [s for s in t1.symbols if s not in (ZERO, ONE)]
    frees2 = [s for s in t2.symbols if s not in (ZERO, ONE)]
    for perm in itertools.permutations(frees2):
        mapping = dict(zip(frees1, perm))
        mapping[ZERO] = ZERO
        mapping[ONE] = ONE
        if any(mapping[t1.mul(a, b)] != t2.mul(mapping[a], mapping[b])
               for a in t1.symbols for b in t1.symbols):
            continue
        fwd = BlueprintMorphism(b1, b2, mapping)
        back = BlueprintMorphism(b2, b1, {v: k for k, v in mapping.items()})
        if is_morphism(fwd, budget)[0] == PROVED \
                and is_morphism(back, budget)[0] == PROVED:
            return mapping
    return None
