"""Finite group-groupoids: internal groupoids in the category of finite
groups.

A group-groupoid is stored as its arrow group, object group and the three
structure homomorphisms ``d0`` (source), ``d1`` (target) and ``eps`` (object
inclusion).  The groupoid composition is never stored: it is always the
derived formula ``b o a = b - eps(d0(b)) + a`` (defined when
``d1(a) = d0(b)``), which the group structure determines uniquely.  The
composability convention is "a then b", so ``d0(b o a) = d0(a)`` and
``d1(b o a) = d1(b)``.

Validation checks the section laws, the elementwise commutation of
``Ker d0`` with ``Ker d1`` (the condition that makes the derived formula a
groupoid composition) and then asserts every derived law exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import (FiniteGroup, GroupAction, GroupHom, SplitExtension,
                     compose, conjugation_action, kernel, sd_index,
                     semidirect_product, trivial_group, validate_group,
                     validate_hom, validate_split_extension)
from .report import (VALID, NotComposableError, ValidationReport, fail,
                     nested)


@dataclass(frozen=True)
class GroupGroupoid:
    """Arrow group, object group and structure homs of an internal groupoid."""

    arrows: FiniteGroup
    objects: FiniteGroup
    d0: GroupHom
    d1: GroupHom
    eps: GroupHom

    @property
    def name(self) -> str:
        return f"{self.arrows.name}/{self.objects.name}"

    def __repr__(self) -> str:
        return f"GroupGroupoid({self.name})"


def compose_arrows(gg: GroupGroupoid, a: int, b: int) -> int:
    """The composite ``b o a`` ("a then b"); requires ``d1(a) = d0(b)``."""
    if gg.d1(a) != gg.d0(b):
        raise NotComposableError(
            f"arrows {a} and {b} are not composable: d1({a}) != d0({b})")
    arr = gg.arrows
    return arr.add(arr.sub(b, gg.eps(gg.d0(b))), a)


def groupoid_inverse(gg: GroupGroupoid, a: int) -> int:
    """``eps(d0(a)) - a + eps(d1(a))``, the groupoid inverse of ``a``."""
    arr = gg.arrows
    return arr.add(arr.sub(gg.eps(gg.d0(a)), a), gg.eps(gg.d1(a)))


def star(gg: GroupGroupoid, x: int) -> tuple[int, ...]:
    """Arrows with source ``x``."""
    return tuple(a for a in range(gg.arrows.order) if gg.d0(a) == x)


def costar(gg: GroupGroupoid, x: int) -> tuple[int, ...]:
    """Arrows with target ``x``."""
    return tuple(a for a in range(gg.arrows.order) if gg.d1(a) == x)


def ker_d0(gg: GroupGroupoid):
    """Arrows with source the zero object, as a subgroup with inclusion."""
    return kernel(gg.d0)


def ker_d1(gg: GroupGroupoid):
    return kernel(gg.d1)


# ---------------------------------------------------------------------------
# Validation


def _composable_pairs(gg: GroupGroupoid):
    """Index arrays ``(A, B)`` of all pairs with ``d1(A) = d0(B)``, plus the
    composite of each pair and a full composite matrix (-1 = undefined)."""
    d0m, d1m = gg.d0.np_map, gg.d1.np_map
    mask = d1m[:, None] == d0m[None, :]
    A, B = np.nonzero(mask)
    tbl, neg = gg.arrows.np_table, gg.arrows.np_neg
    em = gg.eps.np_map
    comp = tbl[tbl[B, neg[em[d0m[B]]]], A]
    full = np.full((gg.arrows.order,) * 2, -1, dtype=np.int64)
    full[A, B] = comp
    return A, B, comp, full


def _first_bad_pair(A, B, lhs, rhs):
    bad = np.nonzero(lhs != rhs)[0]
    i = int(bad[0])
    return int(A[i]), int(B[i])


def validate_group_groupoid(gg: GroupGroupoid) -> ValidationReport:
    """Exhaustive check of the group-groupoid axioms.

    Component problems are reported under their own location; the structural
    axioms then follow in a fixed scan order: section laws, kernel
    commutation, and the derived-composition laws (the two equivalent
    composition formulas, endpoints, associativity, identities, inverses and
    the one-groupoid interchange with the group operation).
    """
    for grp, where in ((gg.arrows, "arrows"), (gg.objects, "objects")):
        rep = validate_group(grp)
        if not rep.ok:
            return nested(where, rep)
    wiring = [
        (gg.d0, gg.arrows, gg.objects, "d0"),
        (gg.d1, gg.arrows, gg.objects, "d1"),
        (gg.eps, gg.objects, gg.arrows, "eps"),
    ]
    for f, dom, cod, where in wiring:
        if f.domain != dom or f.codomain != cod:
            return fail("malformed", (), f"{where} is wired to the wrong groups",
                        where=where)
        rep = validate_hom(f)
        if not rep.ok:
            return nested(where, rep)

    d0m, d1m, em = gg.d0.np_map, gg.d1.np_map, gg.eps.np_map
    for x in range(gg.objects.order):
        if d0m[em[x]] != x:
            return fail("sec-d0", (x,), f"d0(eps({x})) != {x}")
        if d1m[em[x]] != x:
            return fail("sec-d1", (x,), f"d1(eps({x})) != {x}")

    tbl, neg = gg.arrows.np_table, gg.arrows.np_neg
    zero_obj = gg.objects.zero
    K0 = np.nonzero(d0m == zero_obj)[0]
    K1 = np.nonzero(d1m == zero_obj)[0]
    if not np.array_equal(tbl[np.ix_(K0, K1)], tbl[np.ix_(K1, K0)].T):
        bad = np.argwhere(tbl[np.ix_(K0, K1)] != tbl[np.ix_(K1, K0)].T)[0]
        a, b = int(K0[bad[0]]), int(K1[bad[1]])
        return fail("ker-commute", (a, b),
                    f"{a} in Ker d0 and {b} in Ker d1 do not commute")

    A, B, comp, comp_full = _composable_pairs(gg)
    # the two composition formulas agree: b - eps(d0 b) + a == a - eps(d1 a) + b
    alt = tbl[tbl[A, neg[em[d1m[A]]]], B]
    if not np.array_equal(comp, alt):
        a, b = _first_bad_pair(A, B, comp, alt)
        return fail("comp-agree", (a, b),
                    "the two derived composition formulas disagree")
    if not (np.array_equal(d0m[comp], d0m[A]) and
            np.array_equal(d1m[comp], d1m[B])):
        bad = np.nonzero((d0m[comp] != d0m[A]) | (d1m[comp] != d1m[B]))[0]
        a, b = int(A[bad[0]]), int(B[bad[0]])
        return fail("comp-endpoint", (a, b),
                    "composite has wrong source or target")

    by_d0: dict[int, list[int]] = {}
    for a in range(gg.arrows.order):
        by_d0.setdefault(int(d0m[a]), []).append(a)
    for i in range(len(A)):
        a, b = int(A[i]), int(B[i])
        for c in by_d0.get(int(d1m[b]), ()):
            if comp_full[int(comp_full[a, b]), c] != comp_full[a, int(comp_full[b, c])]:
                return fail("comp-assoc", (a, b, c),
                            "derived composition is not associative")

    for a in range(gg.arrows.order):
        if comp_full[a, em[d1m[a]]] != a:
            return fail("comp-identity", (a,), f"eps(d1({a})) o {a} != {a}")
        if comp_full[em[d0m[a]], a] != a:
            return fail("comp-identity", (a,), f"{a} o eps(d0({a})) != {a}")
        inv = groupoid_inverse(gg, a)
        if comp_full[inv, a] != em[d1m[a]] or comp_full[a, inv] != em[d0m[a]]:
            return fail("comp-inverse", (a, inv),
                        "groupoid inverse fails the identity laws")

    # one-groupoid interchange: (b o a) + (b1 o a1) == (b + b1) o (a + a1)
    w = _interchange_add_violation(tbl, comp, comp_full, A, B)
    if w is not None:
        return fail("interchange", w,
                    "(b o a) + (b1 o a1) != (b + b1) o (a + a1)")
    return VALID


def _interchange_add_violation(tbl, comp, comp_full, A, B, chunk=1024):
    """First quadruple violating the group/composition interchange, or None."""
    m = len(A)
    for i0 in range(0, m, chunk):
        sl = slice(i0, min(i0 + chunk, m))
        lhs = tbl[np.ix_(comp[sl], comp)]
        rhs = comp_full[tbl[np.ix_(A[sl], A)], tbl[np.ix_(B[sl], B)]]
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            i, j = i0 + int(bad[0]), int(bad[1])
            return (int(A[i]), int(B[i]), int(A[j]), int(B[j]))
    return None


# ---------------------------------------------------------------------------
# Morphisms


@dataclass(frozen=True)
class GGMorphism:
    """A pair of group homs commuting with d0, d1 and eps on both sides."""

    domain: GroupGroupoid
    codomain: GroupGroupoid
    on_arrows: GroupHom
    on_objects: GroupHom

    @staticmethod
    def identity(gg: GroupGroupoid) -> "GGMorphism":
        return GGMorphism(gg, gg, GroupHom.identity(gg.arrows),
                          GroupHom.identity(gg.objects))


def validate_gg_morphism(m: GGMorphism) -> ValidationReport:
    if (m.on_arrows.domain != m.domain.arrows
            or m.on_arrows.codomain != m.codomain.arrows
            or m.on_objects.domain != m.domain.objects
            or m.on_objects.codomain != m.codomain.objects):
        return fail("malformed", (), "component maps are wired to the wrong groups")
    for f, where in ((m.on_arrows, "on-arrows"), (m.on_objects, "on-objects")):
        rep = validate_hom(f)
        if not rep.ok:
            return nested(where, rep)
    f1, f0 = m.on_arrows, m.on_objects
    dom, cod = m.domain, m.codomain
    for a in range(dom.arrows.order):
        if cod.d0(f1(a)) != f0(dom.d0(a)):
            return fail("square-d0", (a,), "d0 does not commute with the morphism")
        if cod.d1(f1(a)) != f0(dom.d1(a)):
            return fail("square-d1", (a,), "d1 does not commute with the morphism")
    for x in range(dom.objects.order):
        if f1(dom.eps(x)) != cod.eps(f0(x)):
            return fail("square-eps", (x,), "eps does not commute with the morphism")
    return VALID


def gg_morphism_compose(m1: GGMorphism, m2: GGMorphism) -> GGMorphism:
    """``m1`` followed by ``m2``."""
    return GGMorphism(m1.domain, m2.codomain,
                      compose(m1.on_arrows, m2.on_arrows),
                      compose(m1.on_objects, m2.on_objects))


def is_gg_isomorphism(m: GGMorphism) -> bool:
    from .groups import is_injective, is_surjective
    return (validate_gg_morphism(m).ok
            and is_injective(m.on_arrows) and is_surjective(m.on_arrows)
            and is_injective(m.on_objects) and is_surjective(m.on_objects))


# ---------------------------------------------------------------------------
# Stock group-groupoids


def discrete_gg(g: FiniteGroup) -> GroupGroupoid:
    """The group-groupoid with only identity arrows."""
    ident = GroupHom.identity(g)
    return GroupGroupoid(g, g, ident, ident, ident)


def trivial_gg() -> GroupGroupoid:
    return discrete_gg(trivial_group())


def pair_gg(g: FiniteGroup) -> GroupGroupoid:
    """Arrows are ordered pairs over ``g``: d0(a,b) = a, d1(a,b) = b,
    eps(a) = (a,a); the composite of (a,b) and (b,c) is (a,c)."""
    from .groups import direct_product
    arrows = direct_product(g, g, name=f"pair({g.name})")
    n = g.order
    d0 = GroupHom(arrows, g, tuple(k // n for k in range(n * n)))
    d1 = GroupHom(arrows, g, tuple(k % n for k in range(n * n)))
    eps = GroupHom(g, arrows, tuple(sd_index(n, x, x) for x in range(n)))
    return GroupGroupoid(arrows, g, d0, d1, eps)


# ---------------------------------------------------------------------------
# The classical correspondence with crossed modules of groups


def gg_from_xmod(xm) -> GroupGroupoid:
    """The group-groupoid of a crossed module ``(A, B, bdry, action)``:
    arrows ``A x| B`` on objects ``B`` with ``d0(a,b) = b``,
    ``d1(a,b) = bdry(a) + b`` and ``eps(b) = (0,b)``."""
    a, b = xm.a, xm.b
    arrows = semidirect_product(a, b, xm.action)
    nb = b.order
    d0 = GroupHom(arrows, b, tuple(k % nb for k in range(arrows.order)))
    d1 = GroupHom(arrows, b,
                  tuple(b.add(xm.boundary(k // nb), k % nb)
                        for k in range(arrows.order)))
    eps = GroupHom(b, arrows, tuple(sd_index(nb, a.zero, y) for y in range(nb)))
    return GroupGroupoid(arrows, b, d0, d1, eps)


def xmod_from_gg(gg: GroupGroupoid):
    """The crossed module of a group-groupoid: ``A = Ker d0`` with the target
    map restricted and the action by conjugation with identity arrows,
    ``x . a = eps(x) + a - eps(x)``."""
    from .xmod import XModGroups
    K, inc = ker_d0(gg)
    bdry = compose(inc, gg.d1)
    pos = {v: i for i, v in enumerate(inc.map)}
    arr = gg.arrows
    rows = []
    for x in range(gg.objects.order):
        e = gg.eps(x)
        ne = arr.neg(e)
        rows.append(tuple(pos[arr.add(arr.add(e, inc(i)), ne)]
                          for i in range(K.order)))
    action = GroupAction(gg.objects, K, tuple(rows))
    return XModGroups(K, gg.objects, bdry, action)


def splitting_iso(gg: GroupGroupoid) -> GGMorphism:
    """The natural isomorphism from ``gg`` onto the group-groupoid rebuilt
    from its crossed module, ``a -> (a - eps(d0(a)), d0(a))``.

    The splitting uses the source map so that the first component lands in
    ``Ker d0``; pairing the first component with the target map instead
    would leave the kernel.
    """
    xm = xmod_from_gg(gg)
    rebuilt = gg_from_xmod(xm)
    K, inc = ker_d0(gg)
    pos = {v: i for i, v in enumerate(inc.map)}
    arr = gg.arrows
    nb = gg.objects.order
    amap = []
    for a in range(arr.order):
        k = pos[arr.sub(a, gg.eps(gg.d0(a)))]
        amap.append(sd_index(nb, k, gg.d0(a)))
    return GGMorphism(gg, rebuilt,
                      GroupHom(arr, rebuilt.arrows, tuple(amap)),
                      GroupHom.identity(gg.objects))


# ---------------------------------------------------------------------------
# Split extensions of group-groupoids


@dataclass(frozen=True)
class SplitExtensionGG:
    """A split extension of group-groupoids; both the arrow level and the
    object level are split extensions of groups, and all structure maps
    commute with the extension maps."""

    g: GroupGroupoid
    k: GroupGroupoid
    h: GroupGroupoid
    iota: GGMorphism
    p: GGMorphism
    s: GGMorphism


def validate_split_extension_gg(ext: SplitExtensionGG) -> ValidationReport:
    for m, where in ((ext.iota, "iota"), (ext.p, "p"), (ext.s, "s")):
        rep = validate_gg_morphism(m)
        if not rep.ok:
            return nested(where, rep)
    lvl1 = SplitExtension(ext.g.arrows, ext.k.arrows, ext.h.arrows,
                          ext.iota.on_arrows, ext.p.on_arrows, ext.s.on_arrows)
    rep = validate_split_extension(lvl1)
    if not rep.ok:
        return nested("level-arrows", rep)
    lvl0 = SplitExtension(ext.g.objects, ext.k.objects, ext.h.objects,
                          ext.iota.on_objects, ext.p.on_objects,
                          ext.s.on_objects)
    rep = validate_split_extension(lvl0)
    if not rep.ok:
        return nested("level-objects", rep)
    return VALID


def induced_object_action(act: GroupAction, g: GroupGroupoid,
                          h: GroupGroupoid) -> GroupAction:
    """From an arrow-level action of ``h`` on ``g``, the object-level action
    ``y . x = d0(eps(y) . eps(x))``."""
    rows = []
    for y in range(h.objects.order):
        ey = h.eps(y)
        rows.append(tuple(g.d0(act.act(ey, g.eps(x)))
                          for x in range(g.objects.order)))
    return GroupAction(h.objects, g.objects, tuple(rows))


def gg_semidirect(g: GroupGroupoid, h: GroupGroupoid,
                  act: GroupAction) -> GroupGroupoid:
    """Semidirect product of group-groupoids for an arrow-level action:
    arrows and objects are the two semidirect products, structure maps act
    componentwise."""
    obj_act = induced_object_action(act, g, h)
    arrows = semidirect_product(g.arrows, h.arrows, act)
    objects = semidirect_product(g.objects, h.objects, obj_act)
    na, nh = h.arrows.order, h.objects.order
    d0 = GroupHom(arrows, objects,
                  tuple(sd_index(nh, g.d0(k // na), h.d0(k % na))
                        for k in range(arrows.order)))
    d1 = GroupHom(arrows, objects,
                  tuple(sd_index(nh, g.d1(k // na), h.d1(k % na))
                        for k in range(arrows.order)))
    eps = GroupHom(objects, arrows,
                   tuple(sd_index(na, g.eps(m // nh), h.eps(m % nh))
                         for m in range(objects.order)))
    return GroupGroupoid(arrows, objects, d0, d1, eps)


def gg_conjugation_extension(gg: GroupGroupoid) -> SplitExtensionGG:
    """The split extension of ``gg`` by itself realizing conjugation,
    with ``iota(a) = (a, 0)``, ``p(a, a1) = a1`` and ``s(a) = (0, a)``."""
    act = conjugation_action(gg.arrows)
    k = gg_semidirect(gg, gg, act)
    na, nh = gg.arrows.order, gg.objects.order
    iota = GGMorphism(
        gg, k,
        GroupHom(gg.arrows, k.arrows,
                 tuple(sd_index(na, a, gg.arrows.zero) for a in range(na))),
        GroupHom(gg.objects, k.objects,
                 tuple(sd_index(nh, x, gg.objects.zero) for x in range(nh))))
    p = GGMorphism(
        k, gg,
        GroupHom(k.arrows, gg.arrows, tuple(v % na for v in range(k.arrows.order))),
        GroupHom(k.objects, gg.objects,
                 tuple(v % nh for v in range(k.objects.order))))
    s = GGMorphism(
        gg, k,
        GroupHom(gg.arrows, k.arrows,
                 tuple(sd_index(na, gg.arrows.zero, a) for a in range(na))),
        GroupHom(gg.objects, k.objects,
                 tuple(sd_index(nh, gg.objects.zero, x) for x in range(nh))))
    return SplitExtensionGG(gg, k, gg, iota, p, s)
