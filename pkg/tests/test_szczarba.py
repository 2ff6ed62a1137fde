import pytest

from cobarlab.loopgroup import LoopGroup
from cobarlab.simplicial import (delta4_mod_skeleton, nondeg, sphere,
                                 two_loops_cell)
from cobarlab.szczarba import (SwappedSzProvider, SzProvider, build_f,
                               check_f_multiplicative, check_f_simplicial,
                               check_f_sz_chain_map,
                               check_f_sz_comultiplicative, contract_check,
                               f_sz, group_boundary, main_theorem_check,
                               pontryagin, rival_convention_diagnosis, t_sz)


FIXTURES = {
    "S2": sphere(2),
    "S3": sphere(3),
    "D4sk1": delta4_mod_skeleton(),
    "TwoLoopsCell": two_loops_cell(),
}


@pytest.fixture(scope="module")
def providers():
    return {name: SzProvider(LoopGroup(sset))
            for name, sset in FIXTURES.items()}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_contract(name, providers):
    assert contract_check(providers[name], 2).ok


def test_operator_words_small_cases(providers):
    prov = providers["TwoLoopsCell"]
    g = prov.group
    t2 = nondeg("T", 2)
    a = nondeg("a", 1)
    # n = 0: the generator word itself
    assert prov.sz((), a) == g.tau(a)
    # n = 1: generator times the degenerate bottom face
    sset = prov.sset
    assert prov.sz((1,), t2) == g.mul(
        g.tau(t2), g.degeneracy(g.tau(sset.face(t2, 0)), 0))
    with pytest.raises(ValueError):
        prov.sz((1,), a)  # dimension mismatch
    with pytest.raises(ValueError):
        prov.sz((1, 2, 3), nondeg("T", 2))


def test_no_closed_words_beyond_supported_range(providers):
    prov = providers["D4sk1"]
    x = nondeg("01234", 4)
    with pytest.raises(ValueError):
        prov.sz((1, 2, 3), x)
    assert prov.max_n == 2


def test_swapped_factor_order_fails_contract():
    prov = SwappedSzProvider(LoopGroup(delta4_mod_skeleton()))
    verdict = contract_check(prov, 2)
    assert not verdict.ok
    assert verdict.witness["identity"].startswith("d-")


def test_rival_convention_diagnosis():
    d = rival_convention_diagnosis(two_loops_cell())
    assert not d["plain"].ok
    assert d["plain"].witness["identity"] == "d-i"
    assert not d["swapped"].ok
    assert d["swapped"].witness["identity"] == "d-iii"


def test_t_sz_values(providers):
    prov = providers["S2"]
    g = prov.group
    sigma = nondeg("sigma", 2)
    # the single length-one index sequence contributes the generator word;
    # its companion factor erases over the degenerate bottom face
    assert t_sz(prov, sigma) == {g.tau(sigma): 1}
    # the vertex contributes nothing
    assert t_sz(prov, prov.sset.nondegenerate(0)[0]) == {}


def test_pontryagin_unit_and_boundary(providers):
    prov = providers["TwoLoopsCell"]
    g = prov.group
    a = {g.tau(nondeg("a", 1)): 1}
    unit = {g.one(0): 1}
    assert pontryagin(g, unit, a) == a
    assert pontryagin(g, a, unit) == a
    # boundary of a product of degree-zero chains vanishes termwise
    assert group_boundary(g, a) == {}


@pytest.mark.parametrize("name", ["S2", "D4sk1"])
def test_word_map_is_twisting_cochain_image(name, providers):
    sset = FIXTURES[name]
    prov = providers[name]
    assert check_f_sz_chain_map(sset, 2, prov).ok
    assert check_f_sz_comultiplicative(sset, 2, prov).ok


@pytest.mark.parametrize("name", ["S2", "D4sk1"])
def test_glued_map(name, providers):
    sset = FIXTURES[name]
    prov = providers[name]
    _, verdict = build_f(sset, prov, 2)
    assert verdict.ok
    assert check_f_simplicial(sset, prov, 2).ok
    assert check_f_multiplicative(sset, prov, 1).ok


@pytest.mark.parametrize("name", ["S2", "D4sk1"])
def test_main_comparison(name, providers):
    assert main_theorem_check(FIXTURES[name], 2, providers[name]).ok
