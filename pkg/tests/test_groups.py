import pytest

from eicat.algebra import group_algebra
from eicat.category import presentation_of
from eicat.groups import (
    GroupAction,
    GroupError,
    GroupTable,
    cyclic_group,
    is_projective_over,
    morphism_stabilizers,
    permutation_module_projective,
    stabilizer_order,
    symmetric_group_3,
)
from eicat.homology import ext_dims, top_module
from eicat.linalg import Field, Matrix
from eicat.algebra import ModuleRep


def test_cyclic_group_axioms():
    for n in (1, 2, 3, 6):
        g = cyclic_group(n)
        assert g.order == n
        assert g.mul(g.identity, g.elements[-1]) == g.elements[-1]
        for e in g.elements:
            assert g.mul(e, g.inverse(e)) == g.identity


def test_s3_is_nonabelian_of_order_6():
    g = symmetric_group_3()
    assert g.order == 6
    assert any(g.mul(a, b) != g.mul(b, a) for a in g.elements for b in g.elements)


def test_group_validation_catches_broken_tables():
    table = {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g", ("g", "g"): "g"}
    with pytest.raises(GroupError):
        GroupTable(["e", "g"], table, "e").validate()  # g has no inverse


def test_group_json_roundtrip_rejects_unknown_keys():
    g = cyclic_group(3)
    obj = g.to_json()
    g2 = GroupTable.from_json(obj)
    assert g2.elements == g.elements and g2.table == g.table
    obj["extra"] = 1
    with pytest.raises(GroupError):
        GroupTable.from_json(obj)


def _coset_action(n, d):
    """Z/n acting on cosets of its subgroup of order d."""
    g = cyclic_group(n)
    size = n // d
    pts = [f"c{i}" for i in range(size)]
    act = {(e, pts[i]): pts[(i + j) % size]
           for j, e in enumerate(g.elements) for i in range(size)}
    return GroupAction(g, pts, act).validate()


def test_orbit_stabilizer_on_coset_actions():
    for n, d in [(2, 1), (4, 2), (6, 2), (6, 3), (6, 6)]:
        a = _coset_action(n, d)
        for x in a.set:
            assert len(a.orbit(x)) * stabilizer_order(a, x) == a.group.order


def test_permutation_module_projectivity_criterion():
    a = _coset_action(4, 2)  # stabilizer order 2
    ok2, bad = permutation_module_projective(a, Field(2))
    assert not ok2 and bad
    ok3, bad = permutation_module_projective(a, Field(3))
    assert ok3 and not bad


def _permutation_module(a, f):
    alg = group_algebra(a.group, f)
    idx = {x: i for i, x in enumerate(a.set)}
    action = []
    for e in a.group.elements:
        m = Matrix.zeros(f, len(a.set), len(a.set))
        for x in a.set:
            m.data[idx[a.apply(e, x)]][idx[x]] = f.one
        action.append(m)
    return alg, ModuleRep(alg, len(a.set), action).validate()


def test_permutation_criterion_matches_ext_vanishing():
    """Invertible stabilizer orders iff Ext^1(kX, top) = 0 over kG."""
    for n, d in [(2, 1), (2, 2), (3, 3), (4, 2), (6, 2), (6, 3)]:
        a = _coset_action(n, d)
        for ch in (0, 2, 3):
            f = Field(ch)
            flag, _ = permutation_module_projective(a, f)
            alg, m = _permutation_module(a, f)
            ext1 = ext_dims(alg, m, top_module(alg), 1)[1]
            assert flag == (ext1 == 0), (n, d, ch, flag, ext1)


def test_morphism_stabilizers_on_stabilized_alpha():
    from eicat.families import stabilized_alpha_category
    p = presentation_of(stabilized_alpha_category())
    assert morphism_stabilizers(p, "alpha") == (1, 2)
    with pytest.raises(GroupError):
        morphism_stabilizers(p, p.category.identity_of(p.ordering[0]))


def test_is_projective_over_depends_only_on_characteristic():
    from eicat.families import stabilized_alpha_category
    p = presentation_of(stabilized_alpha_category())
    ok0, w0 = is_projective_over(p, Field(0))
    ok2, w2 = is_projective_over(p, Field(2))
    ok3, _ = is_projective_over(p, Field(3))
    assert ok0 and ok3 and not ok2
    assert w2 == ["alpha"]


def test_poset_morphisms_have_trivial_stabilizers():
    from eicat.families import diamond_poset, poset_category
    p = presentation_of(poset_category(diamond_poset()))
    for name, m in p.category.morphisms.items():
        if m.src != m.dst:
            assert morphism_stabilizers(p, name) == (1, 1)
