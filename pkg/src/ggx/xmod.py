"""Crossed modules over groups and over group-groupoids.

A crossed module of groups ``(A, B, bdry, action)`` satisfies

* CM1: ``bdry(b . a) = b + bdry(a) - b``
* CM2: ``bdry(a) . a1 = a + a1 - a``

A crossed module over group-groupoids consists of two group-groupoids
``G`` and ``H``, a group-groupoid morphism ``(bdry1, bdry0)`` and an action
of the arrow group of ``H`` on the arrow group of ``G`` that is compatible
with the groupoid structure:

* the source/target of an acted arrow are the acted source/target,
* identity arrows act as identity arrows,
* groupoid inverses are preserved,
* acting commutes with composition whenever both sides are defined,

and whose arrow level ``(arrows G, arrows H, bdry1, action)`` is a crossed
module of groups.  The object-level action is not stored; it is always
derived as ``y . x = d0(eps(y) . eps(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import (FiniteGroup, GroupAction, GroupHom, compose,
                     conjugation_action, sd_index, subgroup,
                     validate_action, validate_group, validate_hom)
from .groupoids import (GGMorphism, GroupGroupoid, discrete_gg,
                        gg_morphism_compose, groupoid_inverse, pair_gg,
                        trivial_gg, validate_gg_morphism,
                        validate_group_groupoid)
from .report import VALID, GgxError, ValidationReport, fail, nested


# ---------------------------------------------------------------------------
# Crossed modules of groups


@dataclass(frozen=True)
class XModGroups:
    """A crossed module of groups ``bdry : A -> B`` with a B-action on A."""

    a: FiniteGroup
    b: FiniteGroup
    boundary: GroupHom
    action: GroupAction

    def __repr__(self) -> str:
        return f"XModGroups({self.a.name}->{self.b.name})"


def validate_xmod_groups(xm: XModGroups) -> ValidationReport:
    for grp, where in ((xm.a, "a"), (xm.b, "b")):
        rep = validate_group(grp)
        if not rep.ok:
            return nested(where, rep)
    if xm.boundary.domain != xm.a or xm.boundary.codomain != xm.b:
        return fail("malformed", (), "boundary is wired to the wrong groups")
    rep = validate_hom(xm.boundary)
    if not rep.ok:
        return nested("boundary", rep)
    if xm.action.actor != xm.b or xm.action.target != xm.a:
        return fail("malformed", (), "action is wired to the wrong groups")
    rep = validate_action(xm.action)
    if not rep.ok:
        return nested("action", rep)

    P = xm.action.np_perms
    bd = xm.boundary.np_map
    TB, negB = xm.b.np_table, xm.b.np_neg
    TA, negA = xm.a.np_table, xm.a.np_neg
    nb, na = xm.b.order, xm.a.order

    lhs = bd[P]                                            # bdry(b . a)
    b_col = np.arange(nb)[:, None]
    rhs = TB[TB[b_col, bd[None, :]], negB[b_col]]          # b + bdry(a) - b
    if not np.array_equal(lhs, rhs):
        b, a = map(int, np.argwhere(lhs != rhs)[0])
        return fail("CM1", (b, a), f"bdry({b}.{a}) != {b}+bdry({a})-{b}")

    lhs = P[bd, :]                                         # bdry(a) . a1
    a_col = np.arange(na)[:, None]
    rhs = TA[TA[a_col, np.arange(na)[None, :]], negA[a_col]]   # a + a1 - a
    if not np.array_equal(lhs, rhs):
        a, a1 = map(int, np.argwhere(lhs != rhs)[0])
        return fail("CM2", (a, a1), f"bdry({a}).{a1} != {a}+{a1}-{a}")
    return VALID


@dataclass(frozen=True)
class XModGroupsMorphism:
    """A pair ``(f1 : A -> A', f2 : B -> B')`` commuting with the boundaries
    and equivariant for the actions."""

    domain: XModGroups
    codomain: XModGroups
    f1: GroupHom
    f2: GroupHom

    @staticmethod
    def identity(xm: XModGroups) -> "XModGroupsMorphism":
        return XModGroupsMorphism(xm, xm, GroupHom.identity(xm.a),
                                  GroupHom.identity(xm.b))


def validate_xmod_groups_morphism(m: XModGroupsMorphism) -> ValidationReport:
    if (m.f1.domain != m.domain.a or m.f1.codomain != m.codomain.a
            or m.f2.domain != m.domain.b or m.f2.codomain != m.codomain.b):
        return fail("malformed", (), "component maps are wired to the wrong groups")
    for f, where in ((m.f1, "f1"), (m.f2, "f2")):
        rep = validate_hom(f)
        if not rep.ok:
            return nested(where, rep)
    for a in range(m.domain.a.order):
        if m.f2(m.domain.boundary(a)) != m.codomain.boundary(m.f1(a)):
            return fail("square-boundary", (a,),
                        "f2 o bdry != bdry' o f1")
    for b in range(m.domain.b.order):
        for a in range(m.domain.a.order):
            if m.f1(m.domain.action.act(b, a)) != \
                    m.codomain.action.act(m.f2(b), m.f1(a)):
                return fail("equivariance", (b, a),
                            "f1(b.a) != f2(b).f1(a)")
    return VALID


def xmod_groups_morphism_compose(m1, m2) -> XModGroupsMorphism:
    return XModGroupsMorphism(m1.domain, m2.codomain,
                              compose(m1.f1, m2.f1), compose(m1.f2, m2.f2))


# ---------------------------------------------------------------------------
# Crossed modules over group-groupoids


@dataclass(frozen=True)
class XModGG:
    """A crossed module over group-groupoids."""

    g: GroupGroupoid
    h: GroupGroupoid
    boundary_arrows: GroupHom
    boundary_objects: GroupHom
    action: GroupAction

    def __repr__(self) -> str:
        return f"XModGG({self.g.name} -> {self.h.name})"

    def boundary_morphism(self) -> GGMorphism:
        return GGMorphism(self.g, self.h, self.boundary_arrows,
                          self.boundary_objects)


def arrow_level(xm: XModGG) -> XModGroups:
    """The crossed module of groups on the arrow groups."""
    return XModGroups(xm.g.arrows, xm.h.arrows, xm.boundary_arrows, xm.action)


def object_action(xm: XModGG) -> GroupAction:
    """The derived object-level action ``y . x = d0(eps(y) . eps(x))``."""
    rows = []
    for y in range(xm.h.objects.order):
        ey = xm.h.eps(y)
        rows.append(tuple(xm.g.d0(xm.action.act(ey, xm.g.eps(x)))
                          for x in range(xm.g.objects.order)))
    return GroupAction(xm.h.objects, xm.g.objects, tuple(rows))


def validate_xmod_gg(xm: XModGG) -> ValidationReport:
    """Exhaustive validation.

    Scan order: the two group-groupoids, the boundary morphism, the arrow
    action, the derived object action, the four action/groupoid
    compatibility laws (sources, targets, identities, inverses), the
    action/composition interchange, then CM1 and CM2 at the arrow level.
    """
    for gg, where in ((xm.g, "g"), (xm.h, "h")):
        rep = validate_group_groupoid(gg)
        if not rep.ok:
            return nested(where, rep)
    rep = validate_gg_morphism(xm.boundary_morphism())
    if not rep.ok:
        return nested("boundary", rep)
    if xm.action.actor != xm.h.arrows or xm.action.target != xm.g.arrows:
        return fail("malformed", (), "action is wired to the wrong groups")
    rep = validate_action(xm.action)
    if not rep.ok:
        return nested("action", rep)

    obj_act = object_action(xm)
    rep = validate_action(obj_act)
    if not rep.ok:
        return nested("object-action", rep)

    G, H = xm.g, xm.h
    act = xm.action.np_perms
    oact = obj_act.np_perms
    d0g, d1g = G.d0.np_map, G.d1.np_map
    d0h, d1h = H.d0.np_map, H.d1.np_map
    nh = H.arrows.order

    b_col = np.arange(nh)[:, None]
    if not np.array_equal(d0g[act], oact[d0h[b_col], d0g[None, :]]):
        b, a = map(int, np.argwhere(d0g[act] != oact[d0h[b_col], d0g[None, :]])[0])
        return fail("act-d0", (b, a), f"d0({b}.{a}) != d0({b}).d0({a})")
    if not np.array_equal(d1g[act], oact[d1h[b_col], d1g[None, :]]):
        b, a = map(int, np.argwhere(d1g[act] != oact[d1h[b_col], d1g[None, :]])[0])
        return fail("act-d1", (b, a), f"d1({b}.{a}) != d1({b}).d1({a})")

    for y in range(H.objects.order):
        for x in range(G.objects.order):
            if xm.action.act(H.eps(y), G.eps(x)) != G.eps(obj_act.act(y, x)):
                return fail("act-eps", (y, x),
                            "identity arrows are not sent to identity arrows")

    for b in range(nh):
        binv = groupoid_inverse(H, b)
        for a in range(G.arrows.order):
            lhs = groupoid_inverse(G, xm.action.act(b, a))
            rhs = xm.action.act(binv, groupoid_inverse(G, a))
            if lhs != rhs:
                return fail("act-inv", (b, a),
                            "(b.a)^-1 != b^-1 . a^-1 (groupoid inverses)")

    w = _action_interchange_violation(xm)
    if w is not None:
        return fail("act-interchange", w,
                    "(b o b1).(a o a1) != (b.a) o (b1.a1)")

    rep = validate_xmod_groups(arrow_level(xm))
    if not rep.ok:
        return rep  # CM1 / CM2 tags pass through unchanged
    return VALID


def _action_interchange_violation(xm: XModGG, chunk: int = 512):
    """First quadruple violating the action/composition interchange.

    Quantified over pairs where both sides are defined; compatibility of
    sources and targets (checked beforehand) makes the two sides defined
    simultaneously.
    """
    from .groupoids import _composable_pairs
    AH, BH, compH, _ = _composable_pairs(xm.h)
    AG, BG, compG, compG_full = _composable_pairs(xm.g)
    if len(AH) == 0 or len(AG) == 0:
        return None
    act = xm.action.np_perms
    for i0 in range(0, len(AH), chunk):
        sl = slice(i0, min(i0 + chunk, len(AH)))
        lhs = act[compH[sl][:, None], compG[None, :]]
        rhs = compG_full[act[AH[sl][:, None], AG[None, :]],
                         act[BH[sl][:, None], BG[None, :]]]
        if (rhs < 0).any():
            bad = np.argwhere(rhs < 0)[0]
            i, j = i0 + int(bad[0]), int(bad[1])
            return (int(BH[i]), int(AH[i]), int(BG[j]), int(AG[j]))
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            i, j = i0 + int(bad[0]), int(bad[1])
            return (int(BH[i]), int(AH[i]), int(BG[j]), int(AG[j]))
    return None


def induced_actions(xm: XModGG) -> tuple[GroupAction, GroupAction, GroupAction]:
    """The three induced actions of a crossed module over group-groupoids:

    * objects of H on objects of G:  ``y . x = d0(eps(y) . eps(x))``
    * objects of H on arrows of G:   ``y . a = eps(y) . a``
    * arrows of H on objects of G:   ``b . x = d1(b) . x``
    """
    obj_on_obj = object_action(xm)
    rows = tuple(tuple(xm.action.act(xm.h.eps(y), a)
                       for a in range(xm.g.arrows.order))
                 for y in range(xm.h.objects.order))
    obj_on_arrows = GroupAction(xm.h.objects, xm.g.arrows, rows)
    rows = tuple(tuple(obj_on_obj.act(xm.h.d1(b), x)
                       for x in range(xm.g.objects.order))
                 for b in range(xm.h.arrows.order))
    arrows_on_obj = GroupAction(xm.h.arrows, xm.g.objects, rows)
    return obj_on_obj, obj_on_arrows, arrows_on_obj


def object_level_xmod(xm: XModGG) -> XModGroups:
    """The object-level crossed module ``(G0, H0, bdry0)`` with the derived
    object action."""
    return XModGroups(xm.g.objects, xm.h.objects, xm.boundary_objects,
                      object_action(xm))


# ---------------------------------------------------------------------------
# Morphisms


@dataclass(frozen=True)
class XModGGMorphism:
    """A pair of group-groupoid morphisms whose arrow level is a morphism of
    crossed modules over groups."""

    domain: XModGG
    codomain: XModGG
    f: GGMorphism
    g: GGMorphism

    @staticmethod
    def identity(xm: XModGG) -> "XModGGMorphism":
        return XModGGMorphism(xm, xm, GGMorphism.identity(xm.g),
                              GGMorphism.identity(xm.h))


def validate_xmod_gg_morphism(m: XModGGMorphism) -> ValidationReport:
    for mor, gg_dom, gg_cod, where in ((m.f, m.domain.g, m.codomain.g, "f"),
                                       (m.g, m.domain.h, m.codomain.h, "g")):
        if mor.domain != gg_dom or mor.codomain != gg_cod:
            return fail("malformed", (), f"{where} is wired to the wrong sides")
        rep = validate_gg_morphism(mor)
        if not rep.ok:
            return nested(where, rep)
    arrow_m = XModGroupsMorphism(arrow_level(m.domain), arrow_level(m.codomain),
                                 m.f.on_arrows, m.g.on_arrows)
    rep = validate_xmod_groups_morphism(arrow_m)
    if not rep.ok:
        return nested("arrow-level", rep)
    return VALID


def xmod_gg_morphism_compose(m1, m2) -> XModGGMorphism:
    return XModGGMorphism(m1.domain, m2.codomain,
                          gg_morphism_compose(m1.f, m2.f),
                          gg_morphism_compose(m1.g, m2.g))


def is_xmod_gg_isomorphism(m: XModGGMorphism) -> bool:
    from .groups import is_injective, is_surjective
    comps = (m.f.on_arrows, m.f.on_objects, m.g.on_arrows, m.g.on_objects)
    return (validate_xmod_gg_morphism(m).ok
            and all(is_injective(c) and is_surjective(c) for c in comps))


# ---------------------------------------------------------------------------
# The catalog of standard crossed modules over group-groupoids


def identity_xmod(gg: GroupGroupoid) -> XModGG:
    """``(G, G, 1)`` with the conjugation action."""
    return XModGG(gg, gg, GroupHom.identity(gg.arrows),
                  GroupHom.identity(gg.objects),
                  conjugation_action(gg.arrows))


def zero_xmod(gg: GroupGroupoid) -> XModGG:
    """``(1, G, 0)``: the singleton group-groupoid included trivially."""
    one = trivial_gg()
    return XModGG(one, gg,
                  GroupHom.zero(one.arrows, gg.arrows),
                  GroupHom.zero(one.objects, gg.objects),
                  GroupAction.trivial(gg.arrows, one.arrows))


def discrete_xmod(xm: XModGroups) -> XModGG:
    """A crossed module of groups seen over discrete group-groupoids."""
    return XModGG(discrete_gg(xm.a), discrete_gg(xm.b),
                  xm.boundary, xm.boundary, xm.action)


def pair_xmod(xm: XModGroups) -> XModGG:
    """A crossed module of groups promoted to the pair group-groupoids,
    with componentwise boundary and componentwise action."""
    gs, hs = pair_gg(xm.a), pair_gg(xm.b)
    na, nb = xm.a.order, xm.b.order
    bd = xm.boundary.map
    b1 = GroupHom(gs.arrows, hs.arrows,
                  tuple(sd_index(nb, bd[k // na], bd[k % na])
                        for k in range(na * na)))
    rows = []
    for bk in range(nb * nb):
        b, b2 = divmod(bk, nb)
        rows.append(tuple(
            sd_index(na, xm.action.act(b, k // na), xm.action.act(b2, k % na))
            for k in range(na * na)))
    act = GroupAction(hs.arrows, gs.arrows, tuple(rows))
    return XModGG(gs, hs, b1, xm.boundary, act)


def inclusion_xmod(gg: GroupGroupoid, arrow_indices,
                   object_indices) -> XModGG:
    """The inclusion of a normal subgroup-groupoid with the conjugation
    action.

    Normality here means: the arrow subset is a normal subgroup of the
    arrows, the object subset a normal subgroup of the objects, and both are
    closed under d0, d1 and eps.
    """
    arr_idx = sorted(set(int(i) for i in arrow_indices))
    obj_idx = sorted(set(int(i) for i in object_indices))
    arr_set, obj_set = set(arr_idx), set(obj_idx)
    for a in arr_idx:
        if gg.d0(a) not in obj_set or gg.d1(a) not in obj_set:
            raise GgxError(f"subgroupoid not closed under d0/d1 at arrow {a}")
    for x in obj_idx:
        if gg.eps(x) not in arr_set:
            raise GgxError(f"subgroupoid not closed under eps at object {x}")
    for g in range(gg.arrows.order):
        for a in arr_idx:
            if gg.arrows.add(gg.arrows.add(g, a), gg.arrows.neg(g)) not in arr_set:
                raise GgxError(f"arrow subgroup not normal: witness ({g},{a})")
    for g in range(gg.objects.order):
        for x in obj_idx:
            if gg.objects.add(gg.objects.add(g, x), gg.objects.neg(g)) not in obj_set:
                raise GgxError(f"object subgroup not normal: witness ({g},{x})")
    sub_arr, inc_arr = subgroup(gg.arrows, arr_idx, name=f"n[{gg.arrows.name}]")
    sub_obj, inc_obj = subgroup(gg.objects, obj_idx, name=f"n[{gg.objects.name}]")
    from .groups import hom_restrict
    sub_gg = GroupGroupoid(sub_arr, sub_obj,
                           hom_restrict(gg.d0, inc_arr, inc_obj),
                           hom_restrict(gg.d1, inc_arr, inc_obj),
                           hom_restrict(gg.eps, inc_obj, inc_arr))
    pos = {v: i for i, v in enumerate(inc_arr.map)}
    arr = gg.arrows
    rows = tuple(tuple(pos[arr.add(arr.add(b, inc_arr(i)), arr.neg(b))]
                       for i in range(sub_arr.order))
                 for b in range(arr.order))
    act = GroupAction(gg.arrows, sub_arr, rows)
    return XModGG(sub_gg, gg, inc_arr, inc_obj, act)


def xmod_catalog(name: str, *args) -> XModGG:
    """Dispatch to the standard constructions by name."""
    builders = {
        "identity": identity_xmod,
        "zero": zero_xmod,
        "discrete": discrete_xmod,
        "pair": pair_xmod,
        "inclusion": inclusion_xmod,
    }
    if name not in builders:
        raise GgxError(f"unknown crossed-module construction {name!r}; "
                       f"choose from {sorted(builders)}")
    return builders[name](*args)
