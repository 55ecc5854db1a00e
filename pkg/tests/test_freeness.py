import pytest

from eicat.category import presentation_of
from eicat.families import (
    chain_poset,
    diamond_poset,
    diamond_transporter_category,
    poset_category,
    swap_transporter_category,
)
from eicat.freeness import (
    IsIsomorphism,
    decompose,
    disjoint_union_holds,
    is_free,
    is_free_from,
    is_unfactorizable,
    ufp_direct,
    unfactorizables,
)


@pytest.fixture(scope="module")
def chain():
    return presentation_of(poset_category(chain_poset(3, ["x", "y", "z"])))


@pytest.fixture(scope="module")
def diamond():
    return presentation_of(poset_category(diamond_poset()))


def test_unfactorizables_on_chain(chain):
    c = chain.category
    assert is_unfactorizable(c, "x_to_y")
    assert is_unfactorizable(c, "y_to_z")
    assert not is_unfactorizable(c, "x_to_z")  # factors through y
    assert not is_unfactorizable(c, c.identity_of("x"))


def test_unfactorizable_table_indices(chain):
    table = unfactorizables(chain)
    # ordering is (z, y, x): covers sit at (0,1) and (1,2)
    assert table[(0, 1)] == ["y_to_z"]
    assert table[(1, 2)] == ["x_to_y"]
    assert table[(0, 2)] == []


def test_decompose_chain(chain):
    assert decompose(chain, "x_to_z") == ["x_to_y", "y_to_z"]
    assert decompose(chain, "x_to_y") == ["x_to_y"]
    with pytest.raises(IsIsomorphism):
        decompose(chain, chain.category.identity_of("x"))


def test_decompose_diamond_picks_one_chain(diamond):
    chain1 = decompose(diamond, "x_to_w")
    assert len(chain1) == 2
    assert chain1 in (["x_to_y1", "y1_to_w"], ["x_to_y2", "y2_to_w"])


def test_every_non_isomorphism_decomposes(presentations):
    for name, _, p in presentations:
        c = p.category
        for m in c.morphisms:
            if not c.is_isomorphism(m):
                chain = decompose(p, m)
                composite = chain[0]
                for u in chain[1:]:
                    composite = c.compose(u, composite)
                assert composite == m, (name, m)


def test_chain_is_free(chain):
    rep = is_free(chain)
    assert rep.free and rep.counterexample is None
    assert all(rep.free_from.values())


def test_diamond_is_not_free(diamond):
    ok, witness = is_free_from(diamond, "x")
    assert not ok
    alpha, (a1, _), (b1, _) = witness
    assert alpha == "x_to_w" and {a1, b1} == {"x_to_y1", "x_to_y2"}
    rep = is_free(diamond)
    assert not rep.free
    assert rep.free_from == {"w": True, "y1": True, "y2": True, "x": False}


def test_transporter_freeness_follows_poset():
    assert is_free(presentation_of(swap_transporter_category())).free
    assert not is_free(presentation_of(diamond_transporter_category())).free


def test_ufp_direct_agrees_with_is_free_on_corpus(presentations):
    for name, _, p in presentations:
        assert ufp_direct(p) == is_free(p).free, name


def test_hom0_closed_under_automorphism_actions(presentations):
    for name, c, p in presentations:
        table = unfactorizables(p)
        for (i, j), homs in table.items():
            hs = set(homs)
            for m in homs:
                for g in c.hom(p.ordering[i], p.ordering[i]):
                    assert c.compose(g, m) in hs, (name, i, j)
                for h in c.hom(p.ordering[j], p.ordering[j]):
                    assert c.compose(m, h) in hs, (name, i, j)


def test_disjoint_union_on_chain_and_diamond(chain, diamond):
    assert disjoint_union_holds(chain, 0, 2)
    assert not disjoint_union_holds(diamond, 0, 3)  # the two composite sets collide
    with pytest.raises(ValueError):
        disjoint_union_holds(chain, 2, 2)


def test_free_from_implies_disjoint_union(presentations):
    for name, _, p in presentations:
        rep = is_free(p)
        for j in range(p.n):
            if not rep.free_from[p.ordering[j]]:
                continue
            for i in range(j):
                assert disjoint_union_holds(p, i, j), (name, i, j)


def test_empty_hom_pairs_satisfy_disjoint_union(presentations):
    for name, _, p in presentations:
        for j in range(p.n):
            for i in range(j):
                if not p.hom_set(i, j):
                    assert disjoint_union_holds(p, i, j), (name, i, j)
