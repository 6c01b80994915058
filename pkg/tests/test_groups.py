"""Groups, homomorphisms, actions, split extensions, semidirect products."""

from itertools import product

import pytest

from ggx.groups import (FiniteGroup, GroupAction, GroupHom, SplitExtension,
                        compose, conjugation_action, conjugation_extension,
                        cyclic, derived_action, dihedral_8, direct_product,
                        image, is_injective, is_isomorphism, is_surjective,
                        iso_search, kernel, klein_four, negation_action,
                        quaternion_8, semidirect_product,
                        split_extension_from_action, subgroup, symmetric_3,
                        validate_action, validate_group,
                        validate_split_extension)
from ggx.report import DomainMismatchError, GgxError


def test_z2_is_valid():
    assert validate_group(FiniteGroup.from_rows("z2", [[0, 1], [1, 0]])).ok


def test_constant_column_fails_latin():
    rep = validate_group(FiniteGroup.from_rows("bad", [[0, 1], [0, 1]]))
    assert not rep.ok
    assert rep.axiom == "latin-square"
    assert rep.witness == ("col", 0)


def test_malformed_table_reported_separately():
    g = FiniteGroup("bad", ("0", "1"), ((0, 5), (1, 0)))
    rep = validate_group(g)
    assert rep.axiom == "malformed"


def test_non_associative_latin_square_reported():
    # the smallest nonassociative loop (order 5)
    rows = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    rep = validate_group(FiniteGroup.from_rows("loop5", rows))
    assert not rep.ok and rep.axiom == "associativity"


def test_semidirect_z3_z2_is_nonabelian_of_order_6():
    z3, z2 = cyclic(3), cyclic(2)
    g = semidirect_product(z3, z2, negation_action(z2, z3))
    assert validate_group(g).ok
    assert g.order == 6
    witness = [(a, b) for a in range(6) for b in range(6)
               if g.add(a, b) != g.add(b, a)]
    assert witness


def test_semidirect_with_trivial_action_is_coordinatewise():
    z3, z4 = cyclic(3), cyclic(4)
    g = direct_product(z3, z4)
    for (a, b), (a1, b1) in product(product(range(3), range(4)), repeat=2):
        left = g.add(a * 4 + b, a1 * 4 + b1)
        assert left == ((a + a1) % 3) * 4 + (b + b1) % 4


def test_semidirect_conjugation_has_square_order():
    for g in (cyclic(4), symmetric_3()):
        k = semidirect_product(g, g, conjugation_action(g))
        assert k.order == g.order ** 2
        assert validate_group(k).ok


def test_derived_action_of_conjugation_extension_is_conjugation():
    for g in (cyclic(4), symmetric_3(), quaternion_8()):
        ext = conjugation_extension(g)
        assert validate_split_extension(ext).ok
        assert derived_action(ext).perms == conjugation_action(g).perms


def test_derived_action_of_direct_product_is_trivial():
    z3, z2 = cyclic(3), cyclic(2)
    ext = split_extension_from_action(z3, z2, GroupAction.trivial(z2, z3))
    assert derived_action(ext).perms == GroupAction.trivial(z2, z3).perms


def test_derived_action_recovers_inversion():
    z3, z2 = cyclic(3), cyclic(2)
    inv = negation_action(z2, z3)
    ext = split_extension_from_action(z3, z2, inv)
    got = derived_action(ext)
    assert got.perms == inv.perms
    assert got.perms[1] == (0, 2, 1)


@pytest.mark.parametrize("maker", [cyclic(2), cyclic(3), cyclic(4),
                                   klein_four(), symmetric_3(), dihedral_8(),
                                   quaternion_8()],
                         ids=lambda g: g.name)
def test_derived_action_satisfies_action_axioms(maker):
    ext = conjugation_extension(maker)
    assert validate_action(derived_action(ext)).ok


def test_conjugation_of_abelian_group_is_trivial():
    for g in (cyclic(5), klein_four()):
        assert conjugation_action(g).perms == \
            GroupAction.trivial(g, g).perms


def test_center_of_s3_acts_trivially_under_conjugation():
    s3 = symmetric_3()
    act = conjugation_action(s3)
    center = [b for b in range(6)
              if all(s3.add(b, a) == s3.add(a, b) for a in range(6))]
    assert center == [s3.zero]
    for b in center:
        assert act.perms[b] == tuple(range(6))


def test_action_validator_catches_non_automorphism():
    z3, z2 = cyclic(3), cyclic(2)
    rep = validate_action(GroupAction(z2, z3, ((0, 1, 2), (1, 0, 2))))
    assert not rep.ok and rep.axiom == "act-auto"


def test_kernel_of_zero_map_is_everything():
    z4, z2 = cyclic(4), cyclic(2)
    k, inc = kernel(GroupHom.zero(z4, z2))
    assert k.order == 4 and inc.map == (0, 1, 2, 3)


def test_kernel_of_mod2_surjection():
    z4, z2 = cyclic(4), cyclic(2)
    k, inc = kernel(GroupHom(z4, z2, (0, 1, 0, 1)))
    assert k.order == 2 and inc.map == (0, 2)


def test_image_and_predicates():
    z4, z2 = cyclic(4), cyclic(2)
    f = GroupHom(z4, z2, (0, 1, 0, 1))
    img, inc = image(f)
    assert img.order == 2
    assert is_surjective(f) and not is_injective(f)
    assert is_isomorphism(GroupHom.identity(z4))


def test_compose_with_identity():
    z4, z2 = cyclic(4), cyclic(2)
    f = GroupHom(z4, z2, (0, 1, 0, 1))
    assert compose(f, GroupHom.identity(z2)).map == f.map
    assert compose(GroupHom.identity(z4), f).map == f.map


def test_compose_mismatch_raises():
    z4, z3 = cyclic(4), cyclic(3)
    with pytest.raises(DomainMismatchError):
        compose(GroupHom.identity(z4), GroupHom.identity(z3))


def test_subgroup_requires_closure():
    with pytest.raises(GgxError):
        subgroup(cyclic(4), [0, 1])


def test_split_extension_validator_catches_broken_section():
    z3, z2 = cyclic(3), cyclic(2)
    ext = split_extension_from_action(z3, z2, negation_action(z2, z3))
    bad = SplitExtension(ext.kernel_group, ext.total_group,
                         ext.quotient_group, ext.inclusion, ext.projection,
                         GroupHom.zero(z2, ext.total_group))
    rep = validate_split_extension(bad)
    assert not rep.ok and rep.axiom == "section" and rep.witness == (1,)


def test_quaternion_group_structure():
    q8 = quaternion_8()
    assert validate_group(q8).ok
    assert not q8.is_abelian()
    # a unique element of order 2
    orders = [next(k for k in range(1, 9)
                   if _power(q8, x, k) == q8.zero) for x in range(8)]
    assert orders.count(2) == 1
    assert iso_search(q8, dihedral_8()) is None


def _power(g, x, k):
    acc = g.zero
    for _ in range(k):
        acc = g.add(acc, x)
    return acc


def test_iso_search_finds_isomorphism():
    z6 = cyclic(6)
    assert iso_search(direct_product(cyclic(3), cyclic(2)), z6) is not None
    assert iso_search(symmetric_3(), z6) is None
    assert iso_search(klein_four(), cyclic(4)) is None
