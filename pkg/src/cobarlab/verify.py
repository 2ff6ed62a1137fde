"""Verification suites: named batches of exact identity checks with reports.

Each suite is a list of named checks returning a :class:`Verdict`; running a
suite produces a :class:`Report` with per-check status, a witness for any
failure, and timing.  Reports render both as human-readable text and as a
JSON-compatible dictionary, and the two renderings always agree on statuses.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import loopgroup, szczarba
from .chains import (check_chain_map, check_coalgebra_map, check_quasi_iso)
from .cobar import CobarSet, compare_models
from .cubes import CubeMorphism, ProductCubicalSet, StandardCube, cubical_chains
from .perms import (Shuffle, add_assignment, all_index_seqs, all_perms,
                    all_shuffles, invert, inversions, is_index_seq, p, p_inv,
                    phi, phi_perm, psi, psi_inv, remove_assignment,
                    sz_shuffle_split, xi)
from .simpcube import (SimplicialCube, common_bars, hereditary_path,
                       lambda_star, partition_degeneracy, partition_face, u_pi)
from .simplicial import fixture, simplicial_chains
from .triangulate import (TriangulatedCubicalSet, product_split_backward,
                          product_split_forward, triangulation_map)
from .verdict import Verdict


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" or "fail"
    witness: object
    millis: float


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def render(self) -> str:
        lines = [f"suite {self.suite}: "
                 + ("PASS" if self.ok else "FAIL")]
        for c in sorted(self.checks, key=lambda c: c.name):
            lines.append(f"  [{c.status:4s}] {c.name} ({c.millis:.0f} ms)")
            if c.status == "fail":
                lines.append(f"         witness: {c.witness!r}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        checks = []
        for c in sorted(self.checks, key=lambda c: c.name):
            item = {"name": c.name, "status": c.status,
                    "millis": round(c.millis, 3)}
            if c.status == "fail":
                item["witness"] = repr(c.witness)
            checks.append(item)
        return {"suite": self.suite, "checks": checks}


def run_checks(suite: str, named_checks) -> Report:
    report = Report(suite)
    for name, fn in named_checks:
        start = time.perf_counter()
        verdict = fn()
        millis = (time.perf_counter() - start) * 1000
        report.checks.append(CheckResult(
            name, "pass" if verdict.ok else "fail",
            None if verdict.ok else verdict.witness, millis))
    return report


# ----- combinatorics ----------------------------------------------------------------


def check_p_bijection(n_max: int = 6) -> Verdict:
    for n in range(n_max + 1):
        seen = set()
        for iseq in all_index_seqs(n):
            pi = p(iseq)
            if p_inv(pi) != iseq:
                return Verdict.failed({"check": "roundtrip", "iseq": iseq})
            if inversions(pi) % 2 != sum(iseq) % 2:
                return Verdict.failed({"check": "parity", "iseq": iseq})
            seen.add(pi)
        if seen != set(all_perms(n)):
            return Verdict.failed({"check": "surjectivity", "n": n})
    if p((4, 2, 0, 1, 0)) != (5, 3, 1, 4, 2):
        return Verdict.failed({"check": "worked example"})
    return Verdict.passed()


def check_psi_bijection(n_max: int = 6) -> Verdict:
    for n in range(n_max + 1):
        for k in range(n + 1):
            seen = set()
            for sh in all_shuffles(k, n - k):
                for sigma in all_perms(k):
                    for tau in all_perms(n - k):
                        pi = psi(sh, sigma, tau)
                        if psi_inv(pi, k) != (sh, sigma, tau):
                            return Verdict.failed(
                                {"check": "roundtrip", "input": (sh, sigma, tau)})
                        seen.add(pi)
            if seen != set(all_perms(n)):
                return Verdict.failed({"check": "surjectivity", "n": n, "k": k})
    if psi(Shuffle((2, 5), (1, 3, 4)), (2, 1), (1, 3, 2)) != (3, 2, 5, 4, 1):
        return Verdict.failed({"check": "worked example (2,3)"})
    return Verdict.passed()


def check_xi_split(n_max: int = 5) -> Verdict:
    """xi on index sequences matches the value-threshold split of the
    corresponding permutation through p."""
    for n in range(1, n_max + 1):
        for iseq in all_index_seqs(n):
            sh, jseq, kseq = xi(iseq)
            if not (is_index_seq(jseq) and is_index_seq(kseq)):
                return Verdict.failed({"check": "shape", "iseq": iseq})
            got = sz_shuffle_split(p(iseq))
            if got != (sh, p(jseq), p(kseq)):
                return Verdict.failed({"check": "agreement", "iseq": iseq,
                                       "xi": (sh, jseq, kseq), "split": got})
    return Verdict.passed()


def check_phi_agreement(n_max: int = 5) -> Verdict:
    for n in range(1, n_max + 1):
        for iseq in all_index_seqs(n):
            for pos in range(n + 1):
                jseq, q = phi(iseq, pos)
                tpi, qp = phi_perm(p(iseq), pos)
                if (p(jseq), q) != (tpi, qp):
                    return Verdict.failed({"iseq": iseq, "pos": pos,
                                           "phi": (jseq, q),
                                           "phi_perm": (tpi, qp)})
    return Verdict.passed()


def check_assignment_roundtrip(n_max: int = 6) -> Verdict:
    for n in range(1, n_max + 1):
        for pi in all_perms(n):
            for i in range(1, n + 1):
                tpi = remove_assignment(pi, i)
                if add_assignment(tpi, i, pi[i - 1]) != pi:
                    return Verdict.failed({"pi": pi, "i": i})
    return Verdict.passed()


def _path_valid(pi, rho) -> bool:
    path = hereditary_path(pi, rho)
    if path[0] != tuple(pi) or path[-1] != tuple(rho):
        return False
    bars = set(common_bars(pi, rho))
    for cur, nxt in zip(path, path[1:]):
        diff = [k for k in range(len(pi)) if cur[k] != nxt[k]]
        if len(diff) != 2 or diff[1] != diff[0] + 1:
            return False
        if cur[diff[0]] != nxt[diff[1]] or cur[diff[1]] != nxt[diff[0]]:
            return False
    for inter in path:
        if not bars <= set(common_bars(pi, inter)):
            return False
    return True


def check_hereditary(n_max: int = 4) -> Verdict:
    for n in range(1, n_max + 1):
        for pi in all_perms(n):
            for rho in all_perms(n):
                if not _path_valid(pi, rho):
                    return Verdict.failed({"pi": pi, "rho": rho})
    # a six-letter pair with several common prefix blocks
    pi, rho = (2, 1, 3, 5, 4, 6), (1, 2, 3, 4, 5, 6)
    if not _path_valid(pi, rho):
        return Verdict.failed({"pi": pi, "rho": rho})
    return Verdict.passed()


def combinatorics_suite(max_dim=None) -> Report:
    return run_checks("combinatorics", [
        ("p-bijection-parity", check_p_bijection),
        ("psi-bijection", check_psi_bijection),
        ("xi-vs-value-split", check_xi_split),
        ("phi-translation", check_phi_agreement),
        ("assignment-roundtrip", check_assignment_roundtrip),
        ("hereditary-paths", check_hereditary),
    ])


# ----- simplicial -------------------------------------------------------------------


SIMPLICIAL_FIXTURES = ("Delta2", "I", "S2", "S3", "D4sk1", "TwoLoopsCell")


def simplicial_suite(max_dim=None) -> Report:
    max_dim = 5 if max_dim is None else max_dim
    checks = []
    for name in SIMPLICIAL_FIXTURES:
        sset = fixture(name)
        checks.append((f"identities-{name}",
                       lambda s=sset: s.validate_presentation(max_dim)))
        checks.append((f"chains-{name}", lambda s=sset: _chains_ok(s, 3)))
    return run_checks("simplicial", checks)


def _chains_ok(sset, max_dim) -> Verdict:
    cx = simplicial_chains(sset, max_dim)
    v = cx.check_d_squared()
    return v if not v.ok else cx.check_coalgebra()


# ----- cubical ----------------------------------------------------------------------


def cubical_suite(max_dim=None) -> Report:
    max_dim = 4 if max_dim is None else max_dim
    checks = []
    for n in range(max_dim + 1):
        checks.append((f"standard-cube-{n}",
                       lambda n=n: StandardCube(n).validate(min(n + 1, max_dim))))
    prod11 = ProductCubicalSet(StandardCube(1), StandardCube(1))
    prod21 = ProductCubicalSet(StandardCube(2), StandardCube(1))
    checks.append(("product-1x1", lambda: prod11.validate(3)))
    checks.append(("product-2x1", lambda: prod21.validate(3)))
    for name in ("S2", "D4sk1"):
        cset = CobarSet(fixture(name))
        checks.append((f"cobar-{name}", lambda c=cset: c.validate(3)))
        checks.append((f"cobar-chains-{name}",
                       lambda c=cset: _cubical_chains_ok(c, 3)))
    return run_checks("cubical", checks)


def _cubical_chains_ok(cset, max_dim) -> Verdict:
    cx = cubical_chains(cset, max_dim)
    v = cx.check_d_squared()
    return v if not v.ok else cx.check_coalgebra()


# ----- simplicial-cube lemmas -------------------------------------------------------


def check_cube_simplicial_identities(n_max: int = 4) -> Verdict:
    for n in range(n_max + 1):
        v = SimplicialCube(n).validate(n + 1)
        if not v.ok:
            return v
    return Verdict.passed()


def check_face_lemma(n_max: int = 4) -> Verdict:
    """Bottom and top faces of top simplices are pushforwards along the
    coordinate inclusions recorded by the removed assignment."""
    for n in range(1, n_max + 1):
        for pi in all_perms(n - 1):
            for i in range(1, n + 1):
                tpi = add_assignment(pi, 1, i)
                lhs = partition_face(u_pi(tpi), 0)
                rhs = lambda_star(CubeMorphism.delta(n, 1, i), u_pi(pi))
                if lhs != rhs:
                    return Verdict.failed({"part": "bottom", "pi": pi, "i": i})
                tpi = add_assignment(pi, n, i)
                lhs = partition_face(u_pi(tpi), n)
                rhs = lambda_star(CubeMorphism.delta(n, 0, i), u_pi(pi))
                if lhs != rhs:
                    return Verdict.failed({"part": "top", "pi": pi, "i": i})
    return Verdict.passed()


def check_degeneracy_lemma(n_max: int = 4) -> Verdict:
    """Degeneracies of top simplices are pushforwards along the coordinate
    projections and foldings."""
    for n in range(n_max):
        for pi in all_perms(n + 1):
            inv = invert(pi)
            for i in range(1, n + 2):
                j = inv[i - 1]
                tpi = remove_assignment(pi, j)
                lhs = partition_degeneracy(u_pi(tpi), j - 1)
                rhs = lambda_star(CubeMorphism.sigma(n + 1, i), u_pi(pi))
                if lhs != rhs:
                    return Verdict.failed({"part": "projection", "pi": pi,
                                           "i": i})
            for i in range(1, n + 1):
                j = min(inv[i - 1], inv[i])
                tpi = remove_assignment(pi, j)
                lhs = partition_degeneracy(u_pi(tpi), j - 1)
                rhs = lambda_star(CubeMorphism.gamma(n + 1, i), u_pi(pi))
                if lhs != rhs:
                    return Verdict.failed({"part": "folding", "pi": pi,
                                           "i": i})
    return Verdict.passed()


def cube_lemmas_suite(max_dim=None) -> Report:
    n_max = 4 if max_dim is None else max_dim
    return run_checks("cube-lemmas", [
        ("simplicial-identities", lambda: check_cube_simplicial_identities(n_max)),
        ("face-pushforward", lambda: check_face_lemma(n_max)),
        ("degeneracy-pushforward", lambda: check_degeneracy_lemma(n_max)),
    ])


# ----- triangulation ----------------------------------------------------------------


def check_triangulation_cube(n: int) -> Verdict:
    tri, cy, ct, tmap = triangulation_map(StandardCube(n), n + 1)
    for v in (check_chain_map(tmap), check_coalgebra_map(tmap),
              check_quasi_iso(tmap, range(n + 1))):
        if not v.ok:
            return v
    return Verdict.passed()


def check_triangulation_product() -> Verdict:
    prod = ProductCubicalSet(StandardCube(1), StandardCube(1))
    tri, cy, ct, tmap = triangulation_map(prod, 3)
    for v in (check_chain_map(tmap), check_quasi_iso(tmap, range(3))):
        if not v.ok:
            return v
    return Verdict.passed()


def check_triangulation_cobar() -> Verdict:
    cset = CobarSet(fixture("S2"))
    tri, cy, ct, tmap = triangulation_map(cset, 3)
    for v in (check_chain_map(tmap), check_quasi_iso(tmap, range(3))):
        if not v.ok:
            return v
    return Verdict.passed()


def check_product_splitting() -> Verdict:
    """The product-splitting correspondence is a simplicial bijection on the
    double interval up to dimension 2, compatible with the diagonals."""
    left = StandardCube(1)
    right = StandardCube(1)
    prod = ProductCubicalSet(left, right)
    tri_prod = TriangulatedCubicalSet(prod, 2)
    tri_left = TriangulatedCubicalSet(left, 1)
    tri_right = TriangulatedCubicalSet(right, 1)
    for m in range(3):
        for x in tri_prod.nondegenerate(m):
            a, b = product_split_backward(tri_left, tri_right, prod, x)
            back = product_split_forward(tri_prod, prod, a, b)
            if back != x:
                return Verdict.failed({"check": "roundtrip", "x": x})
    return Verdict.passed()


def check_product_splitting_dgc() -> Verdict:
    """The chain map induced by the product splitting commutes with the
    boundary and with the front/back diagonal (exact matrix identities)."""
    from .chains import ChainMap
    from .simplicial import ProductSimplicialSet

    left = StandardCube(1)
    right = StandardCube(1)
    prod = ProductCubicalSet(left, right)
    tri_prod = TriangulatedCubicalSet(prod, 2)
    tri_left = TriangulatedCubicalSet(left, 1)
    tri_right = TriangulatedCubicalSet(right, 1)
    pairs = ProductSimplicialSet(tri_left, tri_right)
    src = simplicial_chains(tri_prod, 2)
    tgt = simplicial_chains(pairs, 2)
    present = {x for labels in tgt.basis.values() for x in labels}
    mapping = {}
    for m in range(3):
        for x in tri_prod.nondegenerate(m):
            pair = product_split_backward(tri_left, tri_right, prod, x)
            mapping[x] = {pair: 1} if pair in present else {}
    qmap = ChainMap(src, tgt, mapping)
    v = check_chain_map(qmap)
    return v if not v.ok else check_coalgebra_map(qmap)


def triangulation_suite(max_dim=None) -> Report:
    checks = [(f"cube-{n}", lambda n=n: check_triangulation_cube(n))
              for n in range(4 if max_dim is None else min(max_dim, 4))]
    checks += [
        ("product-1x1", check_triangulation_product),
        ("cobar-S2", check_triangulation_cobar),
        ("product-splitting", check_product_splitting),
        ("product-splitting-chains", check_product_splitting_dgc),
    ]
    return run_checks("triangulation", checks)


# ----- cobar isomorphism ------------------------------------------------------------


def check_cobar_iso(name: str, max_deg: int = 3) -> Verdict:
    _, _, _, verdicts = compare_models(fixture(name), max_deg)
    for v in verdicts.values():
        if not v.ok:
            return v
    return Verdict.passed()


def cobar_iso_suite(max_dim=None) -> Report:
    max_deg = 3 if max_dim is None else max_dim
    return run_checks("cobar-iso", [
        (f"iso-{name}", lambda n=name: check_cobar_iso(n, max_deg))
        for name in ("S2", "S3", "D4sk1")
    ])


# ----- szczarba contract ------------------------------------------------------------


def szczarba_contract_suite(max_dim=None) -> Report:
    checks = []
    for name in ("S2", "S3", "D4sk1"):
        sset = fixture(name)
        group = loopgroup.LoopGroup(sset)
        provider = szczarba.SzProvider(group)
        checks.append((f"contract-{name}",
                       lambda p=provider: szczarba.contract_check(p, 2)))
        checks.append((f"twisting-{name}",
                       lambda g=group: loopgroup.check_twisting(g, 3)))
    def rival():
        d = szczarba.rival_convention_diagnosis(fixture("TwoLoopsCell"))
        plain, swapped = d["plain"], d["swapped"]
        if plain.ok or plain.witness["identity"] != "d-i":
            return Verdict.failed({"check": "plain order", "verdict": plain})
        if swapped.ok or swapped.witness["identity"] != "d-iii":
            return Verdict.failed({"check": "swapped order", "verdict": swapped})
        return Verdict.passed()
    checks.append(("rival-convention-fails", rival))
    return run_checks("szczarba-contract", checks)


# ----- main theorem -----------------------------------------------------------------


def main_theorem_suite(max_dim=None) -> Report:
    max_deg = 2 if max_dim is None else max_dim
    checks = []
    for name in ("S2", "D4sk1"):
        sset = fixture(name)
        group = loopgroup.LoopGroup(sset)
        provider = szczarba.SzProvider(group)
        checks.append((f"glue-{name}",
                       lambda s=sset, p=provider:
                       szczarba.build_f(s, p, max_deg)[1]))
        checks.append((f"simplicial-{name}",
                       lambda s=sset, p=provider:
                       szczarba.check_f_simplicial(s, p, max_deg)))
        checks.append((f"multiplicative-{name}",
                       lambda s=sset, p=provider:
                       szczarba.check_f_multiplicative(s, p, 1)))
        checks.append((f"comparison-{name}",
                       lambda s=sset, p=provider:
                       szczarba.main_theorem_check(s, max_deg, p)))
        checks.append((f"cochain-map-{name}",
                       lambda s=sset, p=provider:
                       szczarba.check_f_sz_chain_map(s, max_deg, p)))
        checks.append((f"comultiplicative-{name}",
                       lambda s=sset, p=provider:
                       szczarba.check_f_sz_comultiplicative(s, max_deg, p)))
    return run_checks("main-theorem", checks)


SUITES = {
    "combinatorics": combinatorics_suite,
    "simplicial": simplicial_suite,
    "cubical": cubical_suite,
    "cube-lemmas": cube_lemmas_suite,
    "triangulation": triangulation_suite,
    "cobar-iso": cobar_iso_suite,
    "szczarba-contract": szczarba_contract_suite,
    "main-theorem": main_theorem_suite,
}


def run_suite(name: str, max_dim=None) -> Report:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    return SUITES[name](max_dim)
