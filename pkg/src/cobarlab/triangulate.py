"""Triangulation of cubical sets.

An m-simplex of the triangulation of a cubical set Y is a class [y, u] with
y an n-cube of Y and u an m-simplex of the simplicial n-cube, modulo three
identifications: u lying in a coordinate face of the cube (replace y by that
face), y degenerate (strip the degeneracy, project u), and y folded (strip
the connection, fold u).  Every class has a unique reduced representative:
y neither degenerate nor folded and u touching every coordinate wall.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chains import Chain, ChainComplex, ChainMap, add_scaled
from .cubes import CubeMorphism, CubicalSet, cubical_chains
from .perms import all_perms, inversions
from .simpcube import (PartitionSimplex, SimplicialCube, combine_simplices,
                       lambda_star, partition_degeneracy, partition_face,
                       project_simplex, u_pi)
from .simplicial import SimplicialSet, simplicial_chains


@dataclass(frozen=True)
class TriSimplex:
    cube: object
    simplex: PartitionSimplex

    def __repr__(self):
        return f"[{self.cube!r}; {self.simplex!r}]"


def full_support_simplices(n: int, m: int):
    """Nondegenerate m-simplices of the simplicial n-cube lying in no
    coordinate face: ordered partitions of {1..n} into m nonempty inner parts
    with empty end parts."""
    if m == 0:
        if n == 0:
            yield PartitionSimplex(0, (frozenset(), frozenset()))
        return
    if not 1 <= m <= n:
        return
    coords = range(1, n + 1)
    for assign in itertools.product(range(1, m + 1), repeat=n):
        if len(set(assign)) == m:
            parts = [frozenset()] + [
                frozenset(c for c, a in zip(coords, assign) if a == k)
                for k in range(1, m + 1)] + [frozenset()]
            yield PartitionSimplex(n, tuple(parts))


class TriangulatedCubicalSet(SimplicialSet):
    """The triangulation of a cubical set, as a simplicial set of reduced
    representatives.  ``max_dim`` bounds the cube dimensions enumerated."""

    def __init__(self, cset: CubicalSet, max_dim: int):
        self.cset = cset
        self.max_dim = max_dim

    # ----- reduction to the canonical representative -----------------------------

    def reduction_step(self, y, u, choice=None):
        """One applicable identification, or None at the fixed point.

        ``choice`` picks among all applicable reductions (for confluence
        tests); by default the first in a fixed scan order is applied.
        """
        options = self.reduction_options(y, u)
        if not options:
            return None
        return options[choice if choice is not None else 0]

    def reduction_options(self, y, u):
        cset = self.cset
        n = cset.dim(y)
        out = []
        for i in sorted(u.parts[0]):
            out.append((cset.face(y, 1, i),
                        lambda_star(CubeMorphism.sigma(n, i), u)))
        for i in sorted(u.parts[-1]):
            out.append((cset.face(y, 0, i),
                        lambda_star(CubeMorphism.sigma(n, i), u)))
        for i in range(1, n + 1):
            fy = cset.face(y, 0, i)
            if cset.degen(fy, i) == y:
                out.append((fy, lambda_star(CubeMorphism.sigma(n, i), u)))
        for i in range(1, n):
            fy = cset.face(y, 1, i)
            if cset.conn(fy, i) == y:
                out.append((fy, lambda_star(CubeMorphism.gamma(n, i), u)))
        return out

    def canon(self, y, u: PartitionSimplex) -> TriSimplex:
        if self.cset.dim(y) != u.n:
            raise ValueError("cube dimension must match the simplex coordinates")
        while True:
            step = self.reduction_step(y, u)
            if step is None:
                return TriSimplex(y, u)
            y, u = step

    # ----- simplicial set interface -----------------------------------------------

    def nondegenerate(self, m: int):
        out = []
        for n in range(m, self.max_dim + 1):
            for y in self.cset.normalized(n):
                for u in full_support_simplices(n, m):
                    out.append(TriSimplex(y, u))
        return out

    def dim(self, x: TriSimplex) -> int:
        return x.simplex.dim

    def face(self, x: TriSimplex, i: int) -> TriSimplex:
        return self.canon(x.cube, partition_face(x.simplex, i))

    def degeneracy(self, x: TriSimplex, i: int) -> TriSimplex:
        return self.canon(x.cube, partition_degeneracy(x.simplex, i))


def triangulation_map(cset: CubicalSet, max_dim: int):
    """The canonical chain map from cubical chains to triangulated chains.

    Sends an n-cube y to the signed sum over permutations of the classes
    [y, u_pi].  Returns (triangulation, cubical chains, simplicial chains,
    chain map).
    """
    tri = TriangulatedCubicalSet(cset, max_dim)
    cy = cubical_chains(cset, max_dim)
    ct = simplicial_chains(tri, max_dim)
    mapping = {}
    for n in cy.degrees:
        for y in cy.basis[n]:
            chain: Chain = {}
            for pi in all_perms(n):
                sign = -1 if inversions(pi) % 2 else 1
                add_scaled(chain, {TriSimplex(y, u_pi(pi)): 1}, sign)
            mapping[y] = chain
    return tri, cy, ct, ChainMap(cy, ct, mapping)


def product_split_forward(tri_prod: TriangulatedCubicalSet, prod, a: TriSimplex,
                          b: TriSimplex) -> TriSimplex:
    """From a pair of triangulated simplices to a simplex of the triangulated
    product: multiply the cubes, juxtapose the coordinate rows."""
    return tri_prod.canon(prod.pair(a.cube, b.cube),
                          combine_simplices(a.simplex, b.simplex))


def product_split_backward(tri_left: TriangulatedCubicalSet,
                           tri_right: TriangulatedCubicalSet, prod,
                           x: TriSimplex):
    """Inverse of :func:`product_split_forward` on canonical classes."""
    y, z = x.cube
    k = prod.left.dim(y)
    n = x.simplex.n
    a = tri_left.canon(y, project_simplex(x.simplex, 1, k))
    b = tri_right.canon(z, project_simplex(x.simplex, k + 1, n))
    return a, b
