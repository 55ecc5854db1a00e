import pytest

from eicat.category import is_ei, presentation_of, validate, category_to_json
from eicat.families import (
    AssociativityFailure,
    FamilyError,
    NotOrderPreserving,
    Poset,
    biset_category,
    chain_poset,
    corpus,
    diamond_poset,
    group_category,
    poset_category,
    poset_is_free,
    regular_orbit_category,
    stabilized_alpha_category,
    swap_transporter_category,
    transporter_category,
)
from eicat.freeness import is_free
from eicat.groups import GroupAction, cyclic_group


def test_poset_closure_is_reflexive_and_transitive():
    p = Poset.from_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert p.le("a", "a") and p.le("a", "c")
    assert not p.le("c", "a")
    assert p.interval("a", "c") == ["a", "b", "c"]


def test_poset_rejects_antisymmetry_violations_and_bad_pairs():
    with pytest.raises(FamilyError):
        Poset.from_pairs(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(FamilyError):
        Poset.from_pairs(["a"], [("a", "z")])


def test_poset_json_roundtrip():
    p = diamond_poset()
    q = Poset.from_json(p.to_json())
    assert q.leq == p.leq
    with pytest.raises(FamilyError):
        Poset.from_json({"elements": [], "relation": [], "oops": 1})


def test_named_morphism_counts():
    assert len(poset_category(chain_poset(3))) == 6
    assert len(poset_category(diamond_poset())) == 9
    assert len(regular_orbit_category()) == 5
    assert len(stabilized_alpha_category()) == 4
    assert len(swap_transporter_category()) == 10
    assert len(group_category(cyclic_group(3))) == 3


def test_poset_is_free_matches_categorical_freeness():
    for p in (chain_poset(2), chain_poset(4), diamond_poset(),
              Poset.from_pairs(["a", "b", "c"], [("a", "b"), ("a", "c")]),
              Poset.from_pairs(["a", "b"], [])):
        cat_free = is_free(presentation_of(poset_category(p))).free
        assert poset_is_free(p) == cat_free, p.elements


def test_transporter_category_structure():
    c = swap_transporter_category()
    assert is_ei(c)[0]
    p = presentation_of(c)
    # top object keeps the full Z/2 as automorphisms
    assert p.aut_group(0).order == 2
    # 2 group elements x 2 sources below the top, plus endos
    assert len(c.hom("a", "t")) == 2


def test_transporter_rejects_non_order_preserving_actions():
    p = Poset.from_pairs(["a", "b"], [("a", "b")])
    z2 = cyclic_group(2)
    act = GroupAction(z2, ["a", "b"],
                      {("e", "a"): "a", ("e", "b"): "b",
                       ("g", "a"): "b", ("g", "b"): "a"})
    with pytest.raises(NotOrderPreserving):
        transporter_category(z2, p, act)


def test_biset_category_detects_broken_composition():
    z2 = cyclic_group(2)
    triv = cyclic_group(1)
    # right action table that is not an action: g moves a to b, but g twice
    # moves a to b again instead of back
    homs = {(0, 1): (["a", "b"], {},
                     {("a", "g"): "b", ("b", "g"): "b",
                      ("a", "e"): "a", ("b", "e"): "b"})}
    with pytest.raises(AssociativityFailure):
        biset_category(["x1", "x2"], {"x1": triv, "x2": z2}, homs)


def test_corpus_is_deterministic_and_named():
    a = corpus(0)
    b = corpus(0)
    assert [n for n, _ in a] == [n for n, _ in b]
    for (_, c1), (_, c2) in zip(a, b):
        assert category_to_json(c1) == category_to_json(c2)
    names = [n for n, _ in a]
    assert names[0] == "chain_a3" and "diamond_transporter" in names


def test_corpus_different_seeds_differ():
    a = corpus(0)
    b = corpus(1)
    assert any(category_to_json(c1) != category_to_json(c2)
               for (_, c1), (_, c2) in zip(a, b))


def test_corpus_size_and_validity(corpus_items):
    assert len(corpus_items) >= 30
    for name, c in corpus_items:
        assert is_ei(c)[0], name
        again = validate(category_to_json(c))
        assert set(again.morphisms) == set(c.morphisms), name


def test_corpus_has_structural_variety(presentations):
    frees = {is_free(p).free for _, _, p in presentations}
    assert frees == {True, False}
    auts = {p.aut_group(i).order for _, _, p in presentations for i in range(p.n)}
    assert len(auts) >= 3  # trivial, order 2, and larger
    sizes = {p.n for _, _, p in presentations}
    assert len(sizes) >= 3
