"""Double group-groupoids and the special double groupoid of a crossed
module.

A double group-groupoid has four groups: squares ``S``, horizontal edges
``H``, vertical edges ``V`` and points ``P``, carrying four compatible
group-groupoid structures ``(S,H)``, ``(S,V)``, ``(H,P)`` and ``(V,P)``.
The naming convention for the twelve structure maps follows the direction
of the groupoid they belong to: lowercase superscripts map out of the
squares (``d0h, d1h, epsh`` for ``(S,H)``; ``d0v, d1v, epsv`` for
``(S,V)``), uppercase ones out of the edges (``d0H, d1H, epsH`` for
``(H,P)``; ``d0V, d1V, epsV`` for ``(V,P)``).

Both square compositions are derived from the group operation, never
stored: ``comp_h`` composes along the ``(S,H)`` structure and ``comp_v``
along ``(S,V)``.  On the double group-groupoid built from a crossed module
over group-groupoids the ``(S,H)``-direction composite of two squares adds
their first components, while the ``(S,V)``-direction composes both
components in their groupoids; which of the two directions a planar
picture calls "horizontal" is a convention that varies, so tests pin the
behaviour by formula rather than by picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .groups import FiniteGroup, GroupHom, compose
from .groupoids import (GroupGroupoid, _composable_pairs,
                        validate_group_groupoid)
from .report import (VALID, NotComposableError, ValidationReport, fail,
                     nested)
from .xmod import XModGroups


@dataclass(frozen=True)
class DoubleGroupGroupoid:
    """Four groups and twelve structure homomorphisms."""

    s: FiniteGroup
    h: FiniteGroup
    v: FiniteGroup
    p: FiniteGroup
    d0h: GroupHom
    d1h: GroupHom
    epsh: GroupHom
    d0v: GroupHom
    d1v: GroupHom
    epsv: GroupHom
    d0H: GroupHom
    d1H: GroupHom
    epsH: GroupHom
    d0V: GroupHom
    d1V: GroupHom
    epsV: GroupHom

    def gg_sh(self) -> GroupGroupoid:
        return GroupGroupoid(self.s, self.h, self.d0h, self.d1h, self.epsh)

    def gg_sv(self) -> GroupGroupoid:
        return GroupGroupoid(self.s, self.v, self.d0v, self.d1v, self.epsv)

    def gg_hp(self) -> GroupGroupoid:
        return GroupGroupoid(self.h, self.p, self.d0H, self.d1H, self.epsH)

    def gg_vp(self) -> GroupGroupoid:
        return GroupGroupoid(self.v, self.p, self.d0V, self.d1V, self.epsV)

    def __repr__(self) -> str:
        return (f"DoubleGroupGroupoid(S={self.s.name}, H={self.h.name}, "
                f"V={self.v.name}, P={self.p.name})")


def comp_h(d: DoubleGroupGroupoid, alpha: int, beta: int) -> int:
    """Composite of ``alpha`` then ``beta`` in the ``(S,H)`` direction;
    requires ``d1h(alpha) = d0h(beta)``."""
    if d.d1h(alpha) != d.d0h(beta):
        raise NotComposableError(f"squares {alpha}, {beta} not h-composable")
    return d.s.add(d.s.sub(beta, d.epsh(d.d0h(beta))), alpha)


def comp_v(d: DoubleGroupGroupoid, alpha: int, beta: int) -> int:
    """Composite of ``alpha`` then ``beta`` in the ``(S,V)`` direction;
    requires ``d1v(alpha) = d0v(beta)``."""
    if d.d1v(alpha) != d.d0v(beta):
        raise NotComposableError(f"squares {alpha}, {beta} not v-composable")
    return d.s.add(d.s.sub(beta, d.epsv(d.d0v(beta))), alpha)


def inv_h(d: DoubleGroupGroupoid, beta: int) -> int:
    """``epsh(d0h(b)) - b + epsh(d1h(b))``, the ``(S,H)``-groupoid inverse."""
    s = d.s
    return s.add(s.sub(d.epsh(d.d0h(beta)), beta), d.epsh(d.d1h(beta)))


def inv_v(d: DoubleGroupGroupoid, alpha: int) -> int:
    s = d.s
    return s.add(s.sub(d.epsv(d.d0v(alpha)), alpha), d.epsv(d.d1v(alpha)))


def trivial_dgg(gg: GroupGroupoid) -> DoubleGroupGroupoid:
    """``(G, G, G0, G0)`` with identity maps in the ``(S,H)`` and ``(V,P)``
    directions and the structure of ``gg`` in the other two."""
    ida = GroupHom.identity(gg.arrows)
    ido = GroupHom.identity(gg.objects)
    return DoubleGroupGroupoid(
        s=gg.arrows, h=gg.arrows, v=gg.objects, p=gg.objects,
        d0h=ida, d1h=ida, epsh=ida,
        d0v=gg.d0, d1v=gg.d1, epsv=gg.eps,
        d0H=gg.d0, d1H=gg.d1, epsH=gg.eps,
        d0V=ido, d1V=ido, epsV=ido)


# ---------------------------------------------------------------------------
# Validation


def _square(f, g, p, q, names, n):
    """First index where ``g(f(x)) != q(p(x))`` over ``0..n-1``, or None."""
    for x in range(n):
        if g(f(x)) != q(p(x)):
            return x
    return None


def validate_dgg(d: DoubleGroupGroupoid) -> ValidationReport:
    """Exhaustive validation of a double group-groupoid.

    Checks, in order: the four underlying group-groupoids; the face and
    degeneracy compatibility equations between the two directions; the
    functoriality of each direction's composition and inversion for the
    other direction's structure; and the three interchange laws between the
    two compositions and the group operation.
    """
    subs = ((d.gg_sh(), "(S,H)"), (d.gg_sv(), "(S,V)"),
            (d.gg_hp(), "(H,P)"), (d.gg_vp(), "(V,P)"))
    for gg, where in subs:
        rep = validate_group_groupoid(gg)
        if not rep.ok:
            return nested(where, rep)

    dh = (d.d0h, d.d1h)
    dv = (d.d0v, d.d1v)
    dH = (d.d0H, d.d1H)
    dV = (d.d0V, d.d1V)

    # faces: d_i^H d_j^h = d_j^V d_i^v  : S -> P
    for i in range(2):
        for j in range(2):
            x = _square(dh[j], dH[i], dv[i], dV[j], None, d.s.order)
            if x is not None:
                return fail("compat-dd", (i, j, x),
                            f"d{i}H(d{j}h(x)) != d{j}V(d{i}v(x))")
    # degeneracies against faces: epsH d_i^V = d_i^h epsv  : V -> H
    for i in range(2):
        x = _square(dV[i], d.epsH, d.epsv, dh[i], None, d.v.order)
        if x is not None:
            return fail("compat-epsH-dV", (i, x),
                        f"epsH(d{i}V(x)) != d{i}h(epsv(x))")
        x = _square(dH[i], d.epsV, d.epsh, dv[i], None, d.h.order)
        if x is not None:
            return fail("compat-dv-epsh", (i, x),
                        f"epsV(d{i}H(x)) != d{i}v(epsh(x))")
    for y in range(d.p.order):
        if d.epsv(d.epsV(y)) != d.epsh(d.epsH(y)):
            return fail("compat-eps-eps", (y,),
                        "epsv(epsV(y)) != epsh(epsH(y))")

    # functoriality of the compositions and inversions (derived laws,
    # asserted as self-checks)
    rep = _composition_functoriality(d)
    if not rep.ok:
        return rep

    # interchange laws between the two compositions and the group operation
    Ah, Bh, ch, chf = _composable_pairs(d.gg_sh())
    Av, Bv, cv, cvf = _composable_pairs(d.gg_sv())
    tbl = d.s.np_table
    w = _interchange_add(tbl, cv, cvf, Av, Bv)
    if w is not None:
        return fail("interchange-add-v", w,
                    "(b ov a) + (b1 ov a1) != (b + b1) ov (a + a1)")
    w = _interchange_add(tbl, ch, chf, Ah, Bh)
    if w is not None:
        return fail("interchange-add-h", w,
                    "(b oh a) + (b1 oh a1) != (b + b1) oh (a + a1)")
    w = _interchange_mixed(d, Av, Bv, cv, chf)
    if w is not None:
        return fail("interchange-mixed", w[:4],
                    w[4])
    return VALID


def _interchange_add(tbl, comp, comp_full, A, B, chunk=1024):
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


def _interchange_mixed(d, Av, Bv, cv, chf, chunk=1024):
    """Check (beta ov alpha) oh (beta1 ov alpha1) == (beta oh beta1) ov
    (alpha oh alpha1) over all quadruples where both sides are defined.

    Both sides are defined exactly when the two v-composable pairs are also
    h-composable edgewise (a 2x2 grid of squares); edgewise matching forces
    the left side's composability, so a grid whose left side fails to
    compose is a structural inconsistency and is reported as such.
    """
    d0h, d1h = d.d0h.np_map, d.d1h.np_map
    m = len(Av)
    if m == 0:
        return None
    _, _, _, cvf = _composable_pairs(d.gg_sv())
    # v-composable pairs indexed by position: value cv[i] = Bv[i] ov Av[i]
    for i0 in range(0, m, chunk):
        sl = slice(i0, min(i0 + chunk, m))
        # grid condition: betas and alphas are h-composable pairwise
        # (rows: pairs in the chunk act as the second h-factor)
        grid = ((d1h[Bv[None, :]] == d0h[Bv[sl][:, None]])
                & (d1h[Av[None, :]] == d0h[Av[sl][:, None]]))
        if not grid.any():
            continue
        rows, cols = np.nonzero(grid)
        lhs_ok = d1h[cv[cols]] == d0h[cv[i0 + rows]]
        if not lhs_ok.all():
            badpos = int(np.nonzero(~lhs_ok)[0][0])
            i, j = i0 + int(rows[badpos]), int(cols[badpos])
            return (int(Av[i]), int(Bv[i]), int(Av[j]), int(Bv[j]),
                    "grid of squares whose composite rows do not compose")
        lhs = chf[cv[cols], cv[i0 + rows]]
        bb = chf[Bv[cols], Bv[i0 + rows]]
        aa = chf[Av[cols], Av[i0 + rows]]
        rhs = cvf[aa, bb]
        if (rhs < 0).any() or not np.array_equal(lhs, rhs):
            badpos = int(np.nonzero((rhs < 0) | (lhs != rhs))[0][0])
            i, j = i0 + int(rows[badpos]), int(cols[badpos])
            return (int(Av[i]), int(Bv[i]), int(Av[j]), int(Bv[j]),
                    "(b ov a) oh (b1 ov a1) != (b oh b1) ov (a oh a1)")
    return None


def _composition_functoriality(d: DoubleGroupGroupoid) -> ValidationReport:
    ggs = {"h": d.gg_sh(), "v": d.gg_sv(), "H": d.gg_hp(), "V": d.gg_vp()}
    pairs = {k: _composable_pairs(g) for k, g in ggs.items()}

    # d_i^h of a v-composite is the (H,P)-composite of the d_i^h images
    checks = [
        ("v", "H", (d.d0h, d.d1h), "compat-comp-dh"),
        ("h", "V", (d.d0v, d.d1v), "compat-comp-dv"),
    ]
    for comp_dir, edge_dir, maps, tag in checks:
        A, B, comp, _ = pairs[comp_dir]
        _, _, _, edge_full = pairs[edge_dir]
        for f in maps:
            fm = f.np_map
            vals = edge_full[fm[A], fm[B]]
            if (vals < 0).any() or not np.array_equal(fm[comp], vals):
                bad = np.nonzero((vals < 0) | (fm[comp] != vals))[0][0]
                return fail(tag, (int(A[bad]), int(B[bad])),
                            "a face map does not preserve composition")
    # eps of an edge composite is the composite of the eps images
    checks_eps = [
        ("H", "v", d.epsh, "compat-comp-epsh"),
        ("V", "h", d.epsv, "compat-comp-epsv"),
    ]
    for edge_dir, comp_dir, f, tag in checks_eps:
        A, B, comp, _ = pairs[edge_dir]
        _, _, _, sq_full = pairs[comp_dir]
        fm = f.np_map
        vals = sq_full[fm[A], fm[B]]
        if (vals < 0).any() or not np.array_equal(fm[comp], vals):
            bad = np.nonzero((vals < 0) | (fm[comp] != vals))[0][0]
            return fail(tag, (int(A[bad]), int(B[bad])),
                        "a degeneracy does not preserve composition")
    # each direction's inversion is functorial for the other direction
    inv_checks = [
        ("h", inv_h, d.gg_sv(), d.gg_vp(), (d.d0v, d.d1v), d.epsv,
         "compat-inv-h"),
        ("v", inv_v, d.gg_sh(), d.gg_hp(), (d.d0h, d.d1h), d.epsh,
         "compat-inv-v"),
    ]
    from .groupoids import groupoid_inverse
    for name, invf, sq_gg, edge_gg, face_maps, eps_map, tag in inv_checks:
        for x in range(d.s.order):
            ix = invf(d, x)
            for fmap in face_maps:
                if fmap(ix) != groupoid_inverse(edge_gg, fmap(x)):
                    return fail(tag, (x,),
                                "inversion does not commute with a face map")
        for e in range(edge_gg.arrows.order):
            if invf(d, eps_map(e)) != eps_map(groupoid_inverse(edge_gg, e)):
                return fail(tag, (e,),
                            "inversion does not commute with a degeneracy")
        A, B, comp, _ = pairs["v" if name == "h" else "h"]
        comp_same = pairs["v" if name == "h" else "h"][3]
        for i in range(len(A)):
            a, b = int(A[i]), int(B[i])
            lhs = invf(d, int(comp[i]))
            rhs = comp_same[invf(d, a), invf(d, b)]
            if rhs < 0 or lhs != int(rhs):
                return fail(tag, (a, b),
                            "inversion does not preserve the other composition")
    return VALID


# ---------------------------------------------------------------------------
# Morphisms


@dataclass(frozen=True)
class DGGMorphism:
    """Componentwise group homs commuting with all twelve structure maps."""

    domain: DoubleGroupGroupoid
    codomain: DoubleGroupGroupoid
    fs: GroupHom
    fh: GroupHom
    fv: GroupHom
    fp: GroupHom

    @staticmethod
    def identity(d: DoubleGroupGroupoid) -> "DGGMorphism":
        return DGGMorphism(d, d, GroupHom.identity(d.s), GroupHom.identity(d.h),
                           GroupHom.identity(d.v), GroupHom.identity(d.p))


def validate_dgg_morphism(m: DGGMorphism) -> ValidationReport:
    from .groups import validate_hom
    comps = ((m.fs, m.domain.s, m.codomain.s, "fs"),
             (m.fh, m.domain.h, m.codomain.h, "fh"),
             (m.fv, m.domain.v, m.codomain.v, "fv"),
             (m.fp, m.domain.p, m.codomain.p, "fp"))
    for f, dom, cod, where in comps:
        if f.domain != dom or f.codomain != cod:
            return fail("malformed", (), f"{where} is wired to the wrong groups")
        rep = validate_hom(f)
        if not rep.ok:
            return nested(where, rep)
    a, b = m.domain, m.codomain
    squares = [
        (a.d0h, b.d0h, m.fs, m.fh, a.s.order, "square-d0h"),
        (a.d1h, b.d1h, m.fs, m.fh, a.s.order, "square-d1h"),
        (a.d0v, b.d0v, m.fs, m.fv, a.s.order, "square-d0v"),
        (a.d1v, b.d1v, m.fs, m.fv, a.s.order, "square-d1v"),
        (a.d0H, b.d0H, m.fh, m.fp, a.h.order, "square-d0H"),
        (a.d1H, b.d1H, m.fh, m.fp, a.h.order, "square-d1H"),
        (a.d0V, b.d0V, m.fv, m.fp, a.v.order, "square-d0V"),
        (a.d1V, b.d1V, m.fv, m.fp, a.v.order, "square-d1V"),
        (a.epsh, b.epsh, m.fh, m.fs, a.h.order, "square-epsh"),
        (a.epsv, b.epsv, m.fv, m.fs, a.v.order, "square-epsv"),
        (a.epsH, b.epsH, m.fp, m.fh, a.p.order, "square-epsH"),
        (a.epsV, b.epsV, m.fp, m.fv, a.p.order, "square-epsV"),
    ]
    for f_dom, f_cod, pre, post, n, tag in squares:
        for x in range(n):
            if post(f_dom(x)) != f_cod(pre(x)):
                return fail(tag, (x,), f"{tag[7:]} does not commute")
    return VALID


def dgg_morphism_compose(m1: DGGMorphism, m2: DGGMorphism) -> DGGMorphism:
    return DGGMorphism(m1.domain, m2.codomain,
                       compose(m1.fs, m2.fs), compose(m1.fh, m2.fh),
                       compose(m1.fv, m2.fv), compose(m1.fp, m2.fp))


def is_dgg_isomorphism(m: DGGMorphism) -> bool:
    from .groups import is_injective, is_surjective
    return (validate_dgg_morphism(m).ok
            and all(is_injective(f) and is_surjective(f)
                    for f in (m.fs, m.fh, m.fv, m.fp)))


# ---------------------------------------------------------------------------
# The special double groupoid of a crossed module of groups


@dataclass(frozen=True)
class SpecialSquare:
    """A boundary-labelled square: ``alpha`` in the crossed module's source
    group, edges ``a, b, c, d`` in its base group, subject to
    ``bdry(alpha) = -b - a + c + d``."""

    alpha: int
    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class SpecialDoubleGroupoid:
    """Squares over a crossed module ``(A, B, bdry)`` with two derived
    compositions.

    Geometry of the record, fixed by requiring both composites to preserve
    the boundary relation for arbitrary (also nonabelian) base groups:
    ``a`` is the left edge, ``b`` the bottom, ``c`` the top, ``d`` the
    right; the relation reads ``bdry(alpha) = -b - a + c + d``.

    ``comp_h(s, t)`` glues along ``s.c = t.b`` and has first component
    ``alpha_s + (-s.d) . alpha_t`` (the composite whose filler is acted on
    by an inverted edge); ``comp_v(s, t)`` glues along ``s.d = t.a`` with
    first component ``(-t.b) . alpha_s + alpha_t``.  Source conventions
    that draw the record differently swap the two names; at abelian base
    groups the two readings agree.
    """

    base: XModGroups

    def boundary_holds(self, sq: SpecialSquare) -> bool:
        B, A = self.base.b, self.base.a
        want = B.add(B.add(B.neg(sq.b), B.neg(sq.a)), B.add(sq.c, sq.d))
        return self.base.boundary(sq.alpha) == want

    @cached_property
    def squares(self) -> tuple[SpecialSquare, ...]:
        B, A = self.base.b, self.base.a
        out = []
        for a in range(B.order):
            for b in range(B.order):
                for c in range(B.order):
                    for d in range(B.order):
                        want = B.add(B.add(B.neg(b), B.neg(a)), B.add(c, d))
                        for alpha in range(A.order):
                            if self.base.boundary(alpha) == want:
                                out.append(SpecialSquare(alpha, a, b, c, d))
        return tuple(out)

    def comp_h(self, s: SpecialSquare, t: SpecialSquare) -> SpecialSquare:
        if s.c != t.b:
            raise NotComposableError("shared edge mismatch: s.c != t.b")
        A, B, act = self.base.a, self.base.b, self.base.action
        alpha = A.add(s.alpha, act.act(B.neg(s.d), t.alpha))
        return SpecialSquare(alpha, B.add(t.a, s.a), s.b, t.c,
                             B.add(t.d, s.d))

    def comp_v(self, s: SpecialSquare, t: SpecialSquare) -> SpecialSquare:
        if s.d != t.a:
            raise NotComposableError("shared edge mismatch: s.d != t.a")
        A, B, act = self.base.a, self.base.b, self.base.action
        alpha = A.add(act.act(B.neg(t.b), s.alpha), t.alpha)
        return SpecialSquare(alpha, s.a, B.add(s.b, t.b), B.add(s.c, t.c),
                             t.d)

    def identity_h(self, x: int) -> SpecialSquare:
        return SpecialSquare(self.base.a.zero, self.base.b.zero, x, x,
                             self.base.b.zero)

    def identity_v(self, y: int) -> SpecialSquare:
        return SpecialSquare(self.base.a.zero, y, self.base.b.zero,
                             self.base.b.zero, y)

    def inv_h(self, s: SpecialSquare) -> SpecialSquare:
        A, B, act = self.base.a, self.base.b, self.base.action
        return SpecialSquare(act.act(s.d, A.neg(s.alpha)),
                             B.neg(s.a), s.c, s.b, B.neg(s.d))

    def inv_v(self, s: SpecialSquare) -> SpecialSquare:
        A, B, act = self.base.a, self.base.b, self.base.action
        return SpecialSquare(act.act(s.b, A.neg(s.alpha)),
                             s.d, B.neg(s.b), B.neg(s.c), s.a)


def special_from_xmod(xm: XModGroups) -> SpecialDoubleGroupoid:
    return SpecialDoubleGroupoid(xm)
