"""Simplicial sets presented by generators and face tables.

Simplices are stored in Eilenberg-Zilber normal form: a strictly decreasing
degeneracy word applied to a nondegenerate generator.  Face and degeneracy
operators rewrite words using the simplicial identities, so every element has
a unique representation and equality is structural.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chains import Chain, ChainComplex, ChainMap, add_scaled, tensor_complex
from .verdict import Verdict, first_failure


@dataclass(frozen=True)
class Simplex:
    """``degens`` is a strictly decreasing tuple of degeneracy indices applied
    (outermost first) to the nondegenerate generator ``gen`` of dimension
    ``gen_dim``."""

    degens: tuple
    gen: str
    gen_dim: int

    def __post_init__(self):
        if any(a <= b for a, b in zip(self.degens, self.degens[1:])):
            raise ValueError("degeneracy word must be strictly decreasing")

    @property
    def dim(self) -> int:
        return self.gen_dim + len(self.degens)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degens)

    def __repr__(self):
        if not self.degens:
            return self.gen
        word = " ".join(f"s{j}" for j in self.degens)
        return f"{word} {self.gen}"


def nondeg(gen: str, dim: int) -> Simplex:
    return Simplex((), gen, dim)


def degenerate_point(gen: str, n: int) -> Simplex:
    """The n-fold degeneracy of a vertex."""
    return Simplex(tuple(range(n - 1, -1, -1)), gen, 0)


def insert_degeneracy(degens: tuple, i: int) -> tuple:
    """Normal form of s_i applied outside an already-normal word."""
    out = []
    k = 0
    while k < len(degens) and i <= degens[k]:
        out.append(degens[k] + 1)
        k += 1
    out.append(i)
    out.extend(degens[k:])
    return tuple(out)


def degeneracy_words(m: int, n: int):
    """Increasing index tuples whose ascending application maps dim m to dim n.

    Yields each tuple (j_1 < ... < j_r), r = n - m, with j_t <= m + t - 1;
    these parametrize the degenerate n-simplices over a nondegenerate
    m-simplex, each exactly once.
    """
    r = n - m
    if r < 0:
        return
    for word in itertools.combinations(range(n), r):
        if all(word[t] <= m + t for t in range(r)):
            yield word


class SimplicialSet:
    """Base interface: subclasses provide nondegenerate/face/degeneracy/dim."""

    def nondegenerate(self, n: int):
        raise NotImplementedError

    def face(self, x, i):
        raise NotImplementedError

    def degeneracy(self, x, i):
        raise NotImplementedError

    def dim(self, x) -> int:
        raise NotImplementedError

    # ----- derived operations -------------------------------------------------

    def is_degenerate(self, x) -> bool:
        n = self.dim(x)
        if n == 0:
            return False
        return any(self.degeneracy(self.face(x, i), i) == x for i in range(n))

    def simplices(self, n: int):
        """All n-simplices (degenerate ones included), each exactly once."""
        for m in range(n + 1):
            for g in self.nondegenerate(m):
                for word in degeneracy_words(m, n):
                    x = g
                    for j in word:
                        x = self.degeneracy(x, j)
                    yield x

    def front_face(self, x, i: int):
        """The face spanned by vertices 0..i (drop the last dim(x)-i vertices)."""
        for _ in range(self.dim(x) - i):
            x = self.face(x, self.dim(x))
        return x

    def back_face(self, x, i: int):
        """The face spanned by vertices i..dim(x) (drop the first i vertices)."""
        for _ in range(i):
            x = self.face(x, 0)
        return x

    def validate(self, max_dim: int) -> Verdict:
        """Exhaustive simplicial identities on all simplices up to max_dim."""
        for n in range(max_dim + 1):
            for x in self.simplices(n):
                # d_i d_j x = d_{j-1} d_i x for i < j
                if n >= 2:
                    for i in range(n + 1):
                        for j in range(i + 1, n + 1):
                            lhs = self.face(self.face(x, j), i)
                            rhs = self.face(self.face(x, i), j - 1)
                            if lhs != rhs:
                                return Verdict.failed(
                                    {"identity": "dd", "x": x, "i": i, "j": j,
                                     "lhs": lhs, "rhs": rhs})
                # s_i s_j x = s_{j+1} s_i x for i <= j
                for i in range(n + 1):
                    for j in range(i, n + 1):
                        lhs = self.degeneracy(self.degeneracy(x, j), i)
                        rhs = self.degeneracy(self.degeneracy(x, i), j + 1)
                        if lhs != rhs:
                            return Verdict.failed(
                                {"identity": "ss", "x": x, "i": i, "j": j,
                                 "lhs": lhs, "rhs": rhs})
                # d_i s_j x: mixed identities
                for j in range(n + 1):
                    sx = self.degeneracy(x, j)
                    for i in range(n + 2):
                        got = self.face(sx, i)
                        if i < j:
                            want = self.degeneracy(self.face(x, i), j - 1)
                        elif i in (j, j + 1):
                            want = x
                        else:
                            want = self.degeneracy(self.face(x, i - 1), j)
                        if got != want:
                            return Verdict.failed(
                                {"identity": "ds", "x": x, "i": i, "j": j,
                                 "lhs": got, "rhs": want})
        return Verdict.passed()


class SimplicialPresentation(SimplicialSet):
    """Simplicial set given by generators, dimensions and a face table.

    ``faces[(g, i)]`` is the i-th face of generator g, itself a
    :class:`Simplex` over the same presentation.
    """

    def __init__(self, name, gens, faces, reduced=False, one_reduced=False):
        self.name = name
        self.gens = dict(gens)
        self.faces = dict(faces)
        self.reduced = reduced or one_reduced
        self.one_reduced = one_reduced

    def nondegenerate(self, n: int):
        return [nondeg(g, d) for g, d in self.gens.items() if d == n]

    def dim(self, x: Simplex) -> int:
        return x.dim

    def degeneracy(self, x: Simplex, i: int) -> Simplex:
        if not 0 <= i <= x.dim:
            raise ValueError(f"s_{i} undefined on a {x.dim}-simplex")
        return Simplex(insert_degeneracy(x.degens, i), x.gen, x.gen_dim)

    def face(self, x: Simplex, i: int) -> Simplex:
        if x.dim == 0:
            raise ValueError("a vertex has no faces")
        if not 0 <= i <= x.dim:
            raise ValueError(f"d_{i} undefined on a {x.dim}-simplex")
        if not x.degens:
            return self.faces[(x.gen, i)]
        j = x.degens[0]
        rest = Simplex(x.degens[1:], x.gen, x.gen_dim)
        if i < j:
            return self.degeneracy(self.face(rest, i), j - 1)
        if i in (j, j + 1):
            return rest
        return self.degeneracy(self.face(rest, i - 1), j)

    def is_degenerate(self, x: Simplex) -> bool:
        return x.is_degenerate

    def validate_presentation(self, max_dim: int) -> Verdict:
        """Face-table completeness, reduced flags, simplicial identities."""
        for g, d in self.gens.items():
            for i in range(d + 1):
                if d >= 1 and (g, i) not in self.faces:
                    return Verdict.failed({"error": "missing face", "gen": g, "i": i})
                if d >= 1 and self.faces[(g, i)].dim != d - 1:
                    return Verdict.failed({"error": "face dimension", "gen": g, "i": i})
        if self.reduced and sum(1 for d in self.gens.values() if d == 0) != 1:
            return Verdict.failed({"error": "reduced flag: need exactly one vertex"})
        if self.one_reduced and any(d == 1 for d in self.gens.values()):
            return Verdict.failed({"error": "1-reduced flag: nondegenerate edge present"})
        return self.validate(max_dim)


class ProductSimplicialSet(SimplicialSet):
    """Levelwise product of two simplicial sets; elements are pairs."""

    def __init__(self, left: SimplicialSet, right: SimplicialSet):
        self.left = left
        self.right = right

    def dim(self, xy) -> int:
        return self.left.dim(xy[0])

    def face(self, xy, i):
        return (self.left.face(xy[0], i), self.right.face(xy[1], i))

    def degeneracy(self, xy, i):
        return (self.left.degeneracy(xy[0], i), self.right.degeneracy(xy[1], i))

    def nondegenerate(self, n: int):
        out = []
        for x in self.left.simplices(n):
            for y in self.right.simplices(n):
                if not self.is_degenerate((x, y)):
                    out.append((x, y))
        return out


# ----- chains with the front/back-face diagonal ---------------------------------


def simplicial_chains(sset: SimplicialSet, max_dim: int) -> ChainComplex:
    """Normalized chains: degenerate simplices are identified with zero.

    Carries the front-face/back-face diagonal, making it a dg-coalgebra.
    """
    basis = {n: tuple(sset.nondegenerate(n)) for n in range(max_dim + 1)}
    present = {x for labels in basis.values() for x in labels}
    boundary = {}
    diagonal = {}
    for n in range(max_dim + 1):
        for x in basis[n]:
            d: Chain = {}
            for i in range(n + 1):
                if n == 0:
                    break
                fx = sset.face(x, i)
                if fx in present:
                    add_scaled(d, {fx: 1}, -1 if i % 2 else 1)
            boundary[x] = d
            delta: Chain = {}
            for i in range(n + 1):
                front = sset.front_face(x, i)
                back = sset.back_face(x, i)
                if front in present and back in present:
                    add_scaled(delta, {(front, back): 1}, 1)
            diagonal[x] = delta
    return ChainComplex(basis, boundary, diagonal)


def shuffle_terms(left: SimplicialSet, right: SimplicialSet, x, y) -> Chain:
    """The signed degenerate-pair expansion of the product cell (x, y).

    Returns a chain over pairs of (k+l)-simplices, one term per (k, l)-shuffle,
    including degenerate pairs (callers drop them when landing in normalized
    chains).
    """
    from .perms import all_shuffles

    k, l = left.dim(x), right.dim(y)
    out: Chain = {}
    for sh in all_shuffles(k, l):
        sx = x
        for b in sh.beta:
            sx = left.degeneracy(sx, b - 1)
        sy = y
        for a in sh.alpha:
            sy = right.degeneracy(sy, a - 1)
        add_scaled(out, {(sx, sy): 1}, sh.sign())
    return out


def shuffle_chain_map(left: SimplicialSet, right: SimplicialSet,
                      max_dim: int) -> ChainMap:
    """Chain map C(X) (x) C(Y) -> C(X x Y) given by the shuffle expansion."""
    prod = ProductSimplicialSet(left, right)
    cl = simplicial_chains(left, max_dim)
    cr = simplicial_chains(right, max_dim)
    cp = simplicial_chains(prod, max_dim)
    present = {x for labels in cp.basis.values() for x in labels}
    src = tensor_complex(cl, cr, max_degree=max_dim)
    mapping = {}
    for n in src.degrees:
        for (a, b) in src.basis[n]:
            terms = shuffle_terms(left, right, a, b)
            mapping[(a, b)] = {pair: c for pair, c in terms.items() if pair in present}
    return ChainMap(src, cp, mapping)


# ----- fixtures -----------------------------------------------------------------


def standard_simplex(n: int, name=None) -> SimplicialPresentation:
    """The simplicial n-simplex: generators are nonempty vertex subsets."""

    def gname(verts):
        return ".".join(map(str, verts))

    gens = {}
    faces = {}
    for r in range(1, n + 2):
        for verts in itertools.combinations(range(n + 1), r):
            gens[gname(verts)] = r - 1
            for i in range(r):
                if r >= 2:
                    sub = verts[:i] + verts[i + 1:]
                    faces[(gname(verts), i)] = nondeg(gname(sub), r - 2)
    return SimplicialPresentation(name or f"Delta{n}", gens, faces)


def sphere(n: int) -> SimplicialPresentation:
    """The n-sphere as the n-simplex with its whole boundary collapsed."""
    if n < 2:
        raise ValueError("need n >= 2 for a reduced sphere presentation")
    gens = {"*": 0, "sigma": n}
    faces = {("sigma", i): degenerate_point("*", n - 1) for i in range(n + 1)}
    return SimplicialPresentation(f"S{n}", gens, faces, one_reduced=True)


def delta4_mod_skeleton() -> SimplicialPresentation:
    """The 4-simplex with its 1-skeleton collapsed to the basepoint."""

    def gname(verts):
        return "".join(map(str, verts))

    gens = {"*": 0}
    faces = {}
    for r in (3, 4, 5):
        for verts in itertools.combinations(range(5), r):
            gens[gname(verts)] = r - 1
            for i in range(r):
                sub = verts[:i] + verts[i + 1:]
                if len(sub) >= 3:
                    faces[(gname(verts), i)] = nondeg(gname(sub), len(sub) - 1)
                else:
                    faces[(gname(verts), i)] = degenerate_point("*", r - 2)
    return SimplicialPresentation("D4sk1", gens, faces, one_reduced=True)


def two_loops_cell() -> SimplicialPresentation:
    """One vertex, two loops a and b, and a 2-cell with faces (a, b, b).

    Reduced but not 1-reduced; its loop group has noncommuting generators in
    dimension 0, which makes it sensitive to ordering conventions that
    collapse on 1-reduced inputs.
    """
    pt = degenerate_point("*", 0)
    gens = {"*": 0, "a": 1, "b": 1, "T": 2}
    faces = {("a", 0): pt, ("a", 1): pt, ("b", 0): pt, ("b", 1): pt,
             ("T", 0): nondeg("a", 1), ("T", 1): nondeg("b", 1),
             ("T", 2): nondeg("b", 1)}
    return SimplicialPresentation("TwoLoopsCell", gens, faces, reduced=True)


def fixture(name: str) -> SimplicialPresentation:
    """Named fixtures: Delta<n>, S2, S3, D4sk1, I, TwoLoopsCell."""
    if name == "TwoLoopsCell":
        return two_loops_cell()
    if name == "I":
        return standard_simplex(1, name="I")
    if name == "D4sk1":
        return delta4_mod_skeleton()
    if name.startswith("Delta"):
        return standard_simplex(int(name[5:]))
    if name.startswith("S"):
        return sphere(int(name[1:]))
    raise ValueError(f"unknown fixture {name!r}")
