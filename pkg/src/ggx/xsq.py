"""Crossed squares over groups: the CS1-CS5 axiom system, morphisms, and
the normal-subcrossed-module construction.

A crossed square consists of four groups in a commuting square

    L --lam--> M
    |          |
  lam'        mu
    |          |
    v          v
    N --nu---> P

with left actions of ``P`` on ``L``, ``M`` and ``N`` (inducing actions of
``M`` on ``L`` and ``N`` through ``mu`` and of ``N`` on ``L`` and ``M``
through ``nu``) and a pairing ``h : M x N -> L``.  The axioms checked are
the commutation ``nu . lam' = mu . lam`` together with:

* CS1: ``lam`` and ``lam'`` are P-equivariant, and ``(M,P,mu)``,
  ``(N,P,nu)`` and ``(L,P,mu.lam)`` are crossed modules;
* CS2: ``lam h(m,n) = m + n.(-m)`` and ``lam' h(m,n) = m.n - n``;
* CS3: ``h(lam(l), n) = l + n.(-l)`` and ``h(m, lam'(l)) = m.l - l``;
* CS4: ``h(m+m',n) = m.h(m',n) + h(m,n)`` and
  ``h(m,n+n') = h(m,n) + n.h(m,n')``;
* CS5: ``h(p.m, p.n) = p.h(m,n)``.

The source material announces six conditions but lists five; the axiom
system implemented here is the five listed items plus the commuting-square
condition, which is the natural reading of the sixth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (FiniteGroup, GroupAction, GroupHom, Table, compose,
                     hom_restrict, subgroup, validate_action,
                     validate_group, validate_hom)
from .report import VALID, GgxError, ValidationReport, fail, nested
from .xmod import XModGroups, validate_xmod_groups


@dataclass(frozen=True)
class CrossedSquare:
    l: FiniteGroup
    m: FiniteGroup
    n: FiniteGroup
    p: FiniteGroup
    lam: GroupHom
    lam_prime: GroupHom
    mu: GroupHom
    nu: GroupHom
    act_p_on_l: GroupAction
    act_p_on_m: GroupAction
    act_p_on_n: GroupAction
    hmap: Table

    # induced actions, materialized so the axioms are table lookups
    def act_m_on_l(self, m: int, l: int) -> int:
        return self.act_p_on_l.act(self.mu(m), l)

    def act_n_on_l(self, n: int, l: int) -> int:
        return self.act_p_on_l.act(self.nu(n), l)

    def act_m_on_n(self, m: int, n: int) -> int:
        return self.act_p_on_n.act(self.mu(m), n)

    def act_n_on_m(self, n: int, m: int) -> int:
        return self.act_p_on_m.act(self.nu(n), m)

    def h(self, m: int, n: int) -> int:
        return self.hmap[m][n]

    def __repr__(self) -> str:
        return (f"CrossedSquare(L={self.l.name}, M={self.m.name}, "
                f"N={self.n.name}, P={self.p.name})")


def validate_xsq(xs: CrossedSquare) -> ValidationReport:
    """Exhaustive check of the crossed-square axioms; the scan order is the
    commuting square, then CS1 through CS5."""
    for grp, where in ((xs.l, "l"), (xs.m, "m"), (xs.n, "n"), (xs.p, "p")):
        rep = validate_group(grp)
        if not rep.ok:
            return nested(where, rep)
    wiring = [
        (xs.lam, xs.l, xs.m, "lam"),
        (xs.lam_prime, xs.l, xs.n, "lam-prime"),
        (xs.mu, xs.m, xs.p, "mu"),
        (xs.nu, xs.n, xs.p, "nu"),
    ]
    for f, dom, cod, where in wiring:
        if f.domain != dom or f.codomain != cod:
            return fail("malformed", (), f"{where} is wired to the wrong groups")
        rep = validate_hom(f)
        if not rep.ok:
            return nested(where, rep)
    for act, actor, target, where in (
            (xs.act_p_on_l, xs.p, xs.l, "act-p-on-l"),
            (xs.act_p_on_m, xs.p, xs.m, "act-p-on-m"),
            (xs.act_p_on_n, xs.p, xs.n, "act-p-on-n")):
        if act.actor != actor or act.target != target:
            return fail("malformed", (), f"{where} is wired to the wrong groups")
        rep = validate_action(act)
        if not rep.ok:
            return nested(where, rep)
    if (len(xs.hmap) != xs.m.order
            or any(len(r) != xs.n.order for r in xs.hmap)
            or any(not (0 <= v < xs.l.order) for r in xs.hmap for v in r)):
        return fail("malformed", (), "pairing table has wrong shape or range")

    for l in range(xs.l.order):
        if xs.nu(xs.lam_prime(l)) != xs.mu(xs.lam(l)):
            return fail("square-commute", (l,), "nu.lam' != mu.lam")

    L, M, N, P = xs.l, xs.m, xs.n, xs.p
    # CS1: equivariance of lam and lam'
    for p in range(P.order):
        for l in range(L.order):
            if xs.lam(xs.act_p_on_l.act(p, l)) != \
                    xs.act_p_on_m.act(p, xs.lam(l)):
                return fail("CS1", (p, l), "lam is not P-equivariant")
            if xs.lam_prime(xs.act_p_on_l.act(p, l)) != \
                    xs.act_p_on_n.act(p, xs.lam_prime(l)):
                return fail("CS1", (p, l), "lam' is not P-equivariant")
    # CS1: the three crossed modules over P
    for xm, which in ((XModGroups(M, P, xs.mu, xs.act_p_on_m), "mu"),
                      (XModGroups(N, P, xs.nu, xs.act_p_on_n), "nu"),
                      (XModGroups(L, P, compose(xs.lam, xs.mu), xs.act_p_on_l),
                       "kappa")):
        rep = validate_xmod_groups(xm)
        if not rep.ok:
            return fail("CS1", rep.witness,
                        f"({which}) is not a crossed module: {rep.axiom}")

    # CS2
    for m in range(M.order):
        for n in range(N.order):
            h = xs.h(m, n)
            if xs.lam(h) != M.add(m, xs.act_n_on_m(n, M.neg(m))):
                return fail("CS2", (m, n), "lam h(m,n) != m + n.(-m)")
            if xs.lam_prime(h) != N.sub(xs.act_m_on_n(m, n), n):
                return fail("CS2", (m, n), "lam' h(m,n) != m.n - n")
    # CS3
    for l in range(L.order):
        for n in range(N.order):
            if xs.h(xs.lam(l), n) != L.add(l, xs.act_n_on_l(n, L.neg(l))):
                return fail("CS3", (l, n), "h(lam(l), n) != l + n.(-l)")
        for m in range(M.order):
            if xs.h(m, xs.lam_prime(l)) != L.sub(xs.act_m_on_l(m, l), l):
                return fail("CS3", (m, l), "h(m, lam'(l)) != m.l - l")
    # CS4
    for m in range(M.order):
        for m1 in range(M.order):
            for n in range(N.order):
                lhs = xs.h(M.add(m, m1), n)
                rhs = L.add(xs.act_m_on_l(m, xs.h(m1, n)), xs.h(m, n))
                if lhs != rhs:
                    return fail("CS4", (m, m1, n),
                                "h(m+m',n) != m.h(m',n) + h(m,n)")
    for m in range(M.order):
        for n in range(N.order):
            for n1 in range(N.order):
                lhs = xs.h(m, N.add(n, n1))
                rhs = L.add(xs.h(m, n), xs.act_n_on_l(n, xs.h(m, n1)))
                if lhs != rhs:
                    return fail("CS4", (m, n, n1),
                                "h(m,n+n') != h(m,n) + n.h(m,n')")
    # CS5
    for p in range(P.order):
        for m in range(M.order):
            for n in range(N.order):
                lhs = xs.h(xs.act_p_on_m.act(p, m), xs.act_p_on_n.act(p, n))
                if lhs != xs.act_p_on_l.act(p, xs.h(m, n)):
                    return fail("CS5", (p, m, n),
                                "h(p.m, p.n) != p.h(m,n)")
    return VALID


# ---------------------------------------------------------------------------
# Morphisms


@dataclass(frozen=True)
class XSqMorphism:
    """Four group homs commuting with the square's maps, equivariant for
    the point-group actions, and compatible with the pairings."""

    domain: CrossedSquare
    codomain: CrossedSquare
    f_l: GroupHom
    f_m: GroupHom
    f_n: GroupHom
    f_p: GroupHom

    @staticmethod
    def identity(xs: CrossedSquare) -> "XSqMorphism":
        return XSqMorphism(xs, xs, GroupHom.identity(xs.l),
                           GroupHom.identity(xs.m), GroupHom.identity(xs.n),
                           GroupHom.identity(xs.p))


def validate_xsq_morphism(m: XSqMorphism) -> ValidationReport:
    comps = ((m.f_l, m.domain.l, m.codomain.l, "f_l"),
             (m.f_m, m.domain.m, m.codomain.m, "f_m"),
             (m.f_n, m.domain.n, m.codomain.n, "f_n"),
             (m.f_p, m.domain.p, m.codomain.p, "f_p"))
    for f, dom, cod, where in comps:
        if f.domain != dom or f.codomain != cod:
            return fail("malformed", (), f"{where} is wired to the wrong groups")
        rep = validate_hom(f)
        if not rep.ok:
            return nested(where, rep)
    a, b = m.domain, m.codomain
    for l in range(a.l.order):
        if m.f_m(a.lam(l)) != b.lam(m.f_l(l)):
            return fail("square-lam", (l,), "lam does not commute")
        if m.f_n(a.lam_prime(l)) != b.lam_prime(m.f_l(l)):
            return fail("square-lam-prime", (l,), "lam' does not commute")
    for x in range(a.m.order):
        if m.f_p(a.mu(x)) != b.mu(m.f_m(x)):
            return fail("square-mu", (x,), "mu does not commute")
    for x in range(a.n.order):
        if m.f_p(a.nu(x)) != b.nu(m.f_n(x)):
            return fail("square-nu", (x,), "nu does not commute")
    for p in range(a.p.order):
        fp = m.f_p(p)
        for l in range(a.l.order):
            if m.f_l(a.act_p_on_l.act(p, l)) != b.act_p_on_l.act(fp, m.f_l(l)):
                return fail("equivariance-l", (p, l), "P-action on L")
        for x in range(a.m.order):
            if m.f_m(a.act_p_on_m.act(p, x)) != b.act_p_on_m.act(fp, m.f_m(x)):
                return fail("equivariance-m", (p, x), "P-action on M")
        for x in range(a.n.order):
            if m.f_n(a.act_p_on_n.act(p, x)) != b.act_p_on_n.act(fp, m.f_n(x)):
                return fail("equivariance-n", (p, x), "P-action on N")
    for x in range(a.m.order):
        for y in range(a.n.order):
            if m.f_l(a.h(x, y)) != b.h(m.f_m(x), m.f_n(y)):
                return fail("pairing", (x, y), "f_l(h(m,n)) != h(f_m(m), f_n(n))")
    return VALID


def xsq_morphism_compose(m1: XSqMorphism, m2: XSqMorphism) -> XSqMorphism:
    return XSqMorphism(m1.domain, m2.codomain,
                       compose(m1.f_l, m2.f_l), compose(m1.f_m, m2.f_m),
                       compose(m1.f_n, m2.f_n), compose(m1.f_p, m2.f_p))


def is_xsq_isomorphism(m: XSqMorphism) -> bool:
    from .groups import is_injective, is_surjective
    return (validate_xsq_morphism(m).ok
            and all(is_injective(f) and is_surjective(f)
                    for f in (m.f_l, m.f_m, m.f_n, m.f_p)))


# ---------------------------------------------------------------------------
# The normal-subcrossed-module square


def norrie_xsq(parent: XModGroups, s_indices, t_indices) -> CrossedSquare:
    """The crossed square of a normal subcrossed module ``(S, T)`` of
    ``(A, B)``:

        S --bdry|--> T
        |            |
       inc          inc
        |            |
        v            v
        A --bdry---> B

    ``B`` acts on ``S`` by restricting its action on ``A``, on ``T`` by
    conjugation, and the pairing is ``h(t, a) = t.a - a``.

    Normality is checked exhaustively: ``T`` normal in ``B``, ``S`` normal
    in ``A``, the boundary maps ``S`` into ``T``, the ``B``-action keeps
    ``S`` stable, and every displacement ``t.a - a`` lands in ``S``.
    """
    A, B = parent.a, parent.b
    s_idx = sorted(set(int(i) for i in s_indices))
    t_idx = sorted(set(int(i) for i in t_indices))
    s_set, t_set = set(s_idx), set(t_idx)

    for g in range(B.order):
        for t in t_idx:
            if B.add(B.add(g, t), B.neg(g)) not in t_set:
                raise GgxError(f"T is not normal in B: witness ({g},{t})")
    for g in range(A.order):
        for s in s_idx:
            if A.add(A.add(g, s), A.neg(g)) not in s_set:
                raise GgxError(f"S is not normal in A: witness ({g},{s})")
    for s in s_idx:
        if parent.boundary(s) not in t_set:
            raise GgxError(f"boundary does not map S into T: witness {s}")
    for b in range(B.order):
        for s in s_idx:
            if parent.action.act(b, s) not in s_set:
                raise GgxError(f"B-action does not keep S stable: witness ({b},{s})")
    for t in t_idx:
        for a in range(A.order):
            if A.sub(parent.action.act(t, a), a) not in s_set:
                raise GgxError(
                    f"displacement t.a - a escapes S: witness ({t},{a})")

    S, incS = subgroup(A, s_idx, name=f"sub[{A.name}]")
    T, incT = subgroup(B, t_idx, name=f"sub[{B.name}]")
    lam = hom_restrict(parent.boundary, incS, incT)
    posS = {v: i for i, v in enumerate(incS.map)}
    posT = {v: i for i, v in enumerate(incT.map)}

    act_b_on_s = GroupAction(B, S, tuple(
        tuple(posS[parent.action.act(b, incS(i))] for i in range(S.order))
        for b in range(B.order)))
    act_b_on_t = GroupAction(B, T, tuple(
        tuple(posT[B.add(B.add(b, incT(i)), B.neg(b))] for i in range(T.order))
        for b in range(B.order)))

    hmap = tuple(
        tuple(posS[A.sub(parent.action.act(incT(t), a), a)]
              for a in range(A.order))
        for t in range(T.order))
    return CrossedSquare(S, T, A, B, lam, incS, incT, parent.boundary,
                         act_b_on_s, act_b_on_t, parent.action, hmap)
