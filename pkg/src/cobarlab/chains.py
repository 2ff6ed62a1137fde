"""Chain complexes of free Z-modules, with diagonals, products and homology.

A chain is a dict ``{label: coefficient}`` with nonzero int coefficients;
labels are arbitrary hashable objects, globally unique across degrees within
one complex.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .snf import matrix_rank, smith_normal_form
from .verdict import Verdict

Chain = dict


def add_scaled(dst: Chain, src: Chain, coeff: int = 1) -> Chain:
    """In place dst += coeff * src, dropping zeros."""
    for label, c in src.items():
        new = dst.get(label, 0) + coeff * c
        if new:
            dst[label] = new
        else:
            dst.pop(label, None)
    return dst


def scaled(src: Chain, coeff: int) -> Chain:
    return {label: coeff * c for label, c in src.items()} if coeff else {}


def chain_sub(a: Chain, b: Chain) -> Chain:
    out = dict(a)
    return add_scaled(out, b, -1)


def tensor_chains(a: Chain, b: Chain, sign: int = 1) -> Chain:
    out: Chain = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            add_scaled(out, {(la, lb): 1}, sign * ca * cb)
    return out


@dataclass
class Homology:
    betti: int
    torsion: tuple  # invariant factors > 1, each dividing the next

    def __str__(self):
        parts = ["Z"] * self.betti + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


class ChainComplex:
    """Finitely generated chain complex with optional coalgebra structure.

    ``basis`` maps degree to an ordered tuple of labels; ``boundary`` maps
    each label to a chain one degree down; ``diagonal`` (optional) maps each
    label to a chain in the tensor square, keyed by label pairs.
    """

    def __init__(self, basis, boundary, diagonal=None):
        self.basis = {n: tuple(labels) for n, labels in sorted(basis.items())}
        self.boundary = boundary
        self.diagonal = diagonal
        self._degree = {}
        for n, labels in self.basis.items():
            for label in labels:
                if label in self._degree:
                    raise ValueError(f"duplicate basis label {label!r}")
                self._degree[label] = n

    @property
    def degrees(self):
        return sorted(self.basis)

    @property
    def max_degree(self) -> int:
        return max(self.basis) if self.basis else -1

    def degree_of(self, label) -> int:
        return self._degree[label]

    def rank(self, n: int) -> int:
        return len(self.basis.get(n, ()))

    def boundary_chain(self, chain: Chain) -> Chain:
        out: Chain = {}
        for label, c in chain.items():
            add_scaled(out, self.boundary[label], c)
        return out

    def diagonal_chain(self, chain: Chain) -> Chain:
        if self.diagonal is None:
            raise ValueError("complex carries no diagonal")
        out: Chain = {}
        for label, c in chain.items():
            add_scaled(out, self.diagonal[label], c)
        return out

    # ----- structural checks -------------------------------------------------

    def check_d_squared(self) -> Verdict:
        for n in self.degrees:
            if n < 2:
                continue
            for label in self.basis[n]:
                dd = self.boundary_chain(self.boundary[label])
                if dd:
                    return Verdict.failed({"check": "d_squared", "label": label, "dd": dd})
        return Verdict.passed()

    def _tensor_boundary(self, chain: Chain) -> Chain:
        """Boundary on the tensor square with the usual sign rule."""
        out: Chain = {}
        for (a, b), c in chain.items():
            for a2, ca in self.boundary[a].items():
                add_scaled(out, {(a2, b): 1}, c * ca)
            s = -1 if self.degree_of(a) % 2 else 1
            for b2, cb in self.boundary[b].items():
                add_scaled(out, {(a, b2): 1}, c * s * cb)
        return out

    def check_coalgebra(self) -> Verdict:
        """Diagonal is a chain map, coassociative and counital."""
        if self.diagonal is None:
            return Verdict.failed({"check": "coalgebra", "error": "no diagonal"})
        for n in self.degrees:
            for label in self.basis[n]:
                delta = self.diagonal[label]
                if n >= 1:
                    lhs = self.diagonal_chain(self.boundary[label])
                    rhs = self._tensor_boundary(delta)
                    if lhs != rhs:
                        return Verdict.failed(
                            {"check": "diagonal_chain_map", "label": label,
                             "delta_d": lhs, "d_delta": rhs})
                left: Chain = {}
                right: Chain = {}
                for (a, b), c in delta.items():
                    for (a1, a2), ca in self.diagonal[a].items():
                        add_scaled(left, {(a1, a2, b): 1}, c * ca)
                    for (b1, b2), cb in self.diagonal[b].items():
                        add_scaled(right, {(a, b1, b2): 1}, c * cb)
                if left != right:
                    return Verdict.failed({"check": "coassociativity", "label": label})
                # counit: degree-0 labels count with weight 1
                lcounit: Chain = {}
                rcounit: Chain = {}
                for (a, b), c in delta.items():
                    if self.degree_of(a) == 0:
                        add_scaled(lcounit, {b: 1}, c)
                    if self.degree_of(b) == 0:
                        add_scaled(rcounit, {a: 1}, c)
                if lcounit != {label: 1} or rcounit != {label: 1}:
                    return Verdict.failed({"check": "counit", "label": label})
        return Verdict.passed()

    # ----- homology -----------------------------------------------------------

    def boundary_matrix(self, n: int):
        """Matrix of d_n, rows indexed by degree n-1 basis, columns by degree n."""
        rows = self.basis.get(n - 1, ())
        cols = self.basis.get(n, ())
        index = {label: i for i, label in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, label in enumerate(cols):
            for target, c in self.boundary[label].items():
                mat[index[target]][j] = c
        return mat

    def homology(self, n: int) -> Homology:
        if n < 0 or n > self.max_degree:
            raise ValueError(f"degree {n} outside carried range 0..{self.max_degree}")
        b = self.rank(n)
        rank_dn = matrix_rank(self.boundary_matrix(n)) if n >= 1 else 0
        snf_up = smith_normal_form(self.boundary_matrix(n + 1))
        betti = b - rank_dn - snf_up.rank
        torsion = tuple(d for d in snf_up.diag if d > 1)
        return Homology(betti, torsion)


def tensor_complex(c1: ChainComplex, c2: ChainComplex, max_degree=None) -> ChainComplex:
    """Tensor product complex; labels are pairs, signs follow the Koszul rule."""
    if max_degree is None:
        max_degree = c1.max_degree + c2.max_degree
    basis = {}
    boundary = {}
    for n in range(max_degree + 1):
        labels = []
        for p in range(n + 1):
            for a in c1.basis.get(p, ()):
                for b in c2.basis.get(n - p, ()):
                    labels.append((a, b))
                    d: Chain = {}
                    for a2, ca in c1.boundary[a].items():
                        add_scaled(d, {(a2, b): 1}, ca)
                    s = -1 if p % 2 else 1
                    for b2, cb in c2.boundary[b].items():
                        add_scaled(d, {(a, b2): 1}, s * cb)
                    boundary[(a, b)] = d
        basis[n] = tuple(labels)
    return ChainComplex(basis, boundary)


@dataclass
class ChainMap:
    """Degree-zero linear map between complexes, given on basis labels."""

    source: ChainComplex
    target: ChainComplex
    mapping: dict = field(repr=False)

    def apply(self, chain: Chain) -> Chain:
        out: Chain = {}
        for label, c in chain.items():
            add_scaled(out, self.mapping[label], c)
        return out

    def apply_tensor(self, chain: Chain) -> Chain:
        """(f tensor f) on a chain keyed by label pairs; no signs (degree 0)."""
        out: Chain = {}
        for (a, b), c in chain.items():
            add_scaled(out, tensor_chains(self.mapping[a], self.mapping[b]), c)
        return out


def check_chain_map(f: ChainMap) -> Verdict:
    for n in f.source.degrees:
        for label in f.source.basis[n]:
            for t, c in f.mapping[label].items():
                if f.target.degree_of(t) != n:
                    return Verdict.failed({"check": "degree", "label": label, "target": t})
            if n == 0:
                continue
            lhs = f.target.boundary_chain(f.mapping[label])
            rhs = f.apply(f.source.boundary[label])
            if lhs != rhs:
                return Verdict.failed(
                    {"check": "chain_map", "label": label, "d_f": lhs, "f_d": rhs})
    return Verdict.passed()


def check_coalgebra_map(f: ChainMap) -> Verdict:
    """f commutes with diagonals and preserves the counit."""
    for n in f.source.degrees:
        for label in f.source.basis[n]:
            lhs = f.target.diagonal_chain(f.mapping[label])
            rhs = f.apply_tensor(f.source.diagonal[label])
            if lhs != rhs:
                return Verdict.failed(
                    {"check": "coalgebra_map", "label": label,
                     "delta_f": lhs, "ff_delta": rhs})
            if n == 0 and sum(f.mapping[label].values()) != 1:
                return Verdict.failed({"check": "counit_map", "label": label})
    return Verdict.passed()


def check_algebra_map(f: ChainMap, src_mul: Callable, tgt_mul: Callable,
                      src_unit: Chain, tgt_unit: Chain, degree_cap: int) -> Verdict:
    """f(a * b) == f(a) * f(b) on basis pairs of total degree <= degree_cap."""

    def tgt_mul_chains(x: Chain, y: Chain) -> Chain:
        out: Chain = {}
        for a, ca in x.items():
            for b, cb in y.items():
                add_scaled(out, tgt_mul(a, b), ca * cb)
        return out

    if f.apply(src_unit) != tgt_unit:
        return Verdict.failed({"check": "unit", "f_unit": f.apply(src_unit)})
    for p in f.source.degrees:
        for q in f.source.degrees:
            if p + q > degree_cap:
                continue
            for a in f.source.basis[p]:
                for b in f.source.basis[q]:
                    lhs = f.apply(src_mul(a, b))
                    rhs = tgt_mul_chains(f.mapping[a], f.mapping[b])
                    if lhs != rhs:
                        return Verdict.failed(
                            {"check": "algebra_map", "pair": (a, b),
                             "f_mul": lhs, "mul_ff": rhs})
    return Verdict.passed()


def mapping_cone(f: ChainMap) -> ChainComplex:
    """Cone of f; acyclic exactly when f is a quasi-isomorphism."""
    basis = {}
    boundary = {}
    top = max(f.source.max_degree + 1, f.target.max_degree)
    for n in range(top + 1):
        labels = []
        for b in f.target.basis.get(n, ()):
            labels.append(("t", b))
            boundary[("t", b)] = {("t", b2): c for b2, c in f.target.boundary[b].items()}
        for a in f.source.basis.get(n - 1, ()):
            labels.append(("s", a))
            d: Chain = {}
            for a2, c in f.source.boundary[a].items():
                add_scaled(d, {("s", a2): 1}, -c)
            for b2, c in f.mapping[a].items():
                add_scaled(d, {("t", b2): 1}, c)
            boundary[("s", a)] = d
        basis[n] = tuple(labels)
    return ChainComplex(basis, boundary)


def check_quasi_iso(f: ChainMap, degrees=None) -> Verdict:
    """Mapping-cone acyclicity in the requested degrees (all carried if None)."""
    cone = mapping_cone(f)
    if degrees is None:
        degrees = range(cone.max_degree + 1)
    for n in degrees:
        h = cone.homology(n)
        if h.betti or h.torsion:
            return Verdict.failed({"check": "quasi_iso", "degree": n, "cone_homology": str(h)})
    return Verdict.passed()
