"""Quiver representations with integral bases, F1-representations, naive
F1-rational points, brute-force F_q subrepresentation counts, and the
Euler-characteristic comparison theorems."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import BlueprintError
from .counting import SAMPLE_Q, fit_polynomial
from .fields import gf


class TooLarge(BlueprintError):
    pass


class HypothesisViolated(BlueprintError):
    pass


class NotPolynomial(BlueprintError):
    pass


@dataclass(frozen=True)
class Quiver:
    """A finite directed graph: vertices 0..n-1 and arrows (source, target)."""

    n_vertices: int
    arrows: tuple

    def __post_init__(self):
        for s, t in self.arrows:
            if not (0 <= s < self.n_vertices and 0 <= t < self.n_vertices):
                raise ValueError("arrow endpoint out of range")

    def underlying_is_tree(self):
        """Connected and acyclic as an undirected simple graph."""
        edges = {frozenset((s, t)) for s, t in self.arrows if s != t}
        if any(s == t for s, t in self.arrows):
            return False
        if len(edges) != len(self.arrows):
            return False
        if len(edges) != self.n_vertices - 1:
            return False
        seen = {0}
        frontier = [0]
        adj = {i: set() for i in range(self.n_vertices)}
        for e in edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == self.n_vertices


class IntegralRep:
    """Integer matrices M_alpha of shape d_target x d_source per arrow."""

    def __init__(self, quiver, dims, matrices, basis_labels=None):
        self.quiver = quiver
        self.dims = tuple(dims)
        self.matrices = [np.asarray(m, dtype=int) for m in matrices]
        if len(self.dims) != quiver.n_vertices:
            raise ValueError("one dimension per vertex required")
        if len(self.matrices) != len(quiver.arrows):
            raise ValueError("one matrix per arrow required")
        for (s, t), m in zip(quiver.arrows, self.matrices):
            if m.shape != (self.dims[t], self.dims[s]):
                raise ValueError(
                    f"matrix for arrow {s}->{t} must be {self.dims[t]}x{self.dims[s]}")
        if basis_labels is None:
            basis_labels = tuple(tuple(f"b{i}.{k}" for k in range(d))
                                 for i, d in enumerate(self.dims))
        self.basis_labels = basis_labels

    def __repr__(self):
        return f"IntegralRep(dims={self.dims}, arrows={self.quiver.arrows})"


class F1Rep:
    """Pointed sets with base-point-preserving maps whose fibres over
    non-base elements have at most one element."""

    def __init__(self, quiver, sizes, maps):
        self.quiver = quiver
        self.sizes = tuple(sizes)
        self.maps = [dict(m) for m in maps]
        if len(self.maps) != len(quiver.arrows):
            raise ValueError("one map per arrow required")
        for (s, t), m in zip(quiver.arrows, self.maps):
            hits = {}
            for x in range(self.sizes[s]):
                y = m.get(x)  # None encodes the base point
                if y is None:
                    continue
                if not (0 <= y < self.sizes[t]):
                    raise ValueError("map image out of range")
                if y in hits:
                    raise ValueError(
                        f"fibre over element {y} has more than one element")
                hits[y] = x


def f1_rep_to_integral(rep: F1Rep) -> IntegralRep:
    """The associated integral representation: 0/1 monomial matrices on the
    basis of non-base elements."""
    mats = []
    for (s, t), m in zip(rep.quiver.arrows, rep.maps):
        a = np.zeros((rep.sizes[t], rep.sizes[s]), dtype=int)
        for x, y in m.items():
            if y is not None:
                a[y, x] = 1
        mats.append(a)
    return IntegralRep(rep.quiver, rep.sizes, mats)


# ---------------------------------------------------------------------------
# Naive F1-rational points


def naive_f1_points(rep: IntegralRep, e):
    """Basis-subset families (S_i) of sizes e_i closed under the arrows: each
    chosen basis vector maps to zero or to exactly a basis vector that is
    again chosen."""
    e = tuple(e)
    if len(e) != rep.quiver.n_vertices:
        raise ValueError("one entry per vertex required")
    for ei, di in zip(e, rep.dims):
        if not 0 <= ei <= di:
            raise ValueError("dimension vector out of bounds")
    choices = [list(itertools.combinations(range(d), k))
               for d, k in zip(rep.dims, e)]
    out = []
    for family in itertools.product(*choices):
        ok = True
        for (s, t), m in zip(rep.quiver.arrows, rep.matrices):
            for b in family[s]:
                col = m[:, b]
                nz = np.nonzero(col)[0]
                if len(nz) == 0:
                    continue
                if len(nz) != 1 or col[nz[0]] != 1:
                    ok = False
                    break
                if nz[0] not in family[t]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(frozenset(f) for f in family))
    return out


# ---------------------------------------------------------------------------
# F_q subrepresentation counting


def _rref_bases(dim, r, q):
    field = gf(q)
    out = []
    for pivots in itertools.combinations(range(dim), r):
        frees = [(row, col) for row, p in enumerate(pivots)
                 for col in range(p + 1, dim) if col not in pivots]
        for values in itertools.product(range(q), repeat=len(frees)):
            rows = [[0] * dim for _ in range(r)]
            for row, p in enumerate(pivots):
                rows[row][p] = 1
            for (row, col), v in zip(frees, values):
                rows[row][col] = v
            out.append(tuple(tuple(x) for x in rows))
    return out


def _reduce_vec(field, rows, vec):
    vec = list(vec)
    for row in rows:
        p = next((i for i, x in enumerate(row) if x), None)
        if p is None or not vec[p]:
            continue
        c = field.mul(vec[p], field.inv(row[p]))
        vec = [field.sub(v, field.mul(c, r)) for v, r in zip(vec, row)]
    return vec


def _int_to_field(field, c):
    out = 0
    for _ in range(c % field.p):
        out = field.add(out, 1)
    return out


def _matrix_mod(field, m):
    return [[_int_to_field(field, int(x)) for x in row] for row in m]


def subrep_count_fq(rep: IntegralRep, e, q):
    """Brute-force count of e-dimensional subrepresentations over F_q via
    canonical reduced-row-echelon representatives."""
    if q not in SAMPLE_Q:
        raise TooLarge(f"no field table for q={q}")
    if any(d > 4 for d in rep.dims):
        raise TooLarge("vertex dimension above 4")
    e = tuple(e)
    field = gf(q)
    mats = [_matrix_mod(field, m) for m in rep.matrices]
    grids = [_rref_bases(d, k, q) for d, k in zip(rep.dims, e)]
    count = 0
    for family in itertools.product(*grids):
        ok = True
        for (s, t), m in zip(rep.quiver.arrows, mats):
            target_rows = family[t]
            for v in family[s]:
                img = [0] * rep.dims[t]
                for row in range(rep.dims[t]):
                    acc = 0
                    for col in range(rep.dims[s]):
                        if m[row][col] and v[col]:
                            acc = field.add(acc, field.mul(m[row][col], v[col]))
                    img[row] = acc
                if any(_reduce_vec(field, target_rows, img)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def good_sample_q(rep):
    """Prime powers whose characteristic divides no nonzero matrix entry.

    Fibres at bad primes deviate from the generic count (diag(2,2) over F_2
    degenerates), and the counting polynomial belongs to the generic model.
    """
    bad = set()
    for m in rep.matrices:
        for x in np.asarray(m).flat:
            x = abs(int(x))
            d = 2
            while d * d <= x:
                if x % d == 0:
                    bad.add(d)
                    while x % d == 0:
                        x //= d
                d += 1
            if x > 1:
                bad.add(x)
    return [q for q in SAMPLE_Q if gf(q).p not in bad]


def chi_via_interpolation(rep: IntegralRep, e):
    """Euler characteristic N(1) of the counting polynomial fitted from
    subrepresentation counts at good primes, with held-out verification."""
    e = tuple(e)
    bound = sum(ei * (di - ei) for ei, di in zip(e, rep.dims))
    qs = good_sample_q(rep)
    if bound + 2 > len(qs):
        raise TooLarge(
            f"degree bound {bound} needs {bound + 2} good sample prime powers,"
            f" have {len(qs)}")
    counts = [(q, subrep_count_fq(rep, e, q)) for q in qs[:bound + 2]]
    poly = fit_polynomial(counts)
    if poly is None or poly.degree > bound:
        raise NotPolynomial("subrepresentation counts are not polynomial")
    extra = [(q, subrep_count_fq(rep, e, q)) for q in qs[bound + 2:]]
    if not all(poly(q) == c for q, c in extra):
        raise NotPolynomial("held-out sample mismatch")
    return poly(1)


def weyl_count_diagonal_tree(rep: IntegralRep, e):
    """Torus-fixed-point count for tree quivers with invertible diagonal
    matrices: coordinate-subset families closed under the index-support maps
    of the arrows."""
    if not rep.quiver.underlying_is_tree():
        raise HypothesisViolated("underlying graph is not a tree")
    for (s, t), m in zip(rep.quiver.arrows, rep.matrices):
        if rep.dims[s] != rep.dims[t]:
            raise HypothesisViolated("matrices must be square")
        a = np.asarray(m)
        if not np.array_equal(a, np.diag(np.diagonal(a))):
            raise HypothesisViolated("matrices must be diagonal")
        if any(x == 0 for x in np.diagonal(a)):
            raise HypothesisViolated("diagonal entries must be invertible")
    e = tuple(e)
    choices = [list(itertools.combinations(range(d), k))
               for d, k in zip(rep.dims, e)]
    count = 0
    for family in itertools.product(*choices):
        ok = True
        for (s, t), _m in zip(rep.quiver.arrows, rep.matrices):
            if not set(family[s]) <= set(family[t]):
                ok = False
                break
        if ok:
            count += 1
    return count
