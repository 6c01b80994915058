"""Acceptance suite.

One test per acceptance criterion; each prints a single PASS/FAIL line
(visible with ``pytest tests/test_acceptance.py -s``).  All checks are
exhaustive and exact: there are no numeric tolerances anywhere, equality of
index tables is the only comparison.
"""

import json
import os
import time

import numpy as np

from ggx import serialize
from ggx.catalog import catalog_build, catalog_names
from ggx.cli import _validator_for, main as cli_main
from ggx.dgg import inv_h, inv_v, special_from_xmod, validate_dgg
from ggx.enumeration import (all_actions, all_gg_structures, all_homs,
                             all_xmod_gg, all_xmod_groups, base_groups)
from ggx.equiv import (delta, roundtrip_delta_eta, roundtrip_eta_delta,
                       roundtrip_gamma_theta, roundtrip_theta_gamma, theta)
from ggx.groups import (GroupAction, GroupHom, cyclic, derived_action,
                        negation_action, split_extension_from_action,
                        validate_split_extension)
from ggx.groupoids import (_composable_pairs, discrete_gg, pair_gg,
                           validate_group_groupoid)
from ggx.xmod import XModGroups
from ggx.xsq import validate_xsq

FIXDIR = os.path.join(os.path.dirname(__file__), "fixtures")


def _report(criterion, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    print(f"\n[{criterion}] {tag} {detail}")
    assert ok, f"{criterion}: {detail}"


# ---------------------------------------------------------------------------
# C1: axiom-suite soundness


def test_c1_axiom_suite_soundness(catalog_entries):
    small, big = [], []
    for name in sorted(catalog_entries):
        obj = catalog_entries[name]
        doc = serialize.to_document(obj)
        orders = _component_orders(obj)
        (small if max(orders) <= 8 else big).append((name, obj))

    t0 = time.time()
    for name, obj in small:
        rep = _validator_for(obj)(obj)
        assert rep.ok, f"{name}: {rep.describe()}"
    elapsed = time.time() - t0
    for name, obj in big:
        rep = _validator_for(obj)(obj)
        assert rep.ok, f"{name}: {rep.describe()}"

    failures = 0
    with open(os.path.join(FIXDIR, "manifest.json")) as fh:
        fixtures = json.load(fh)["fixtures"]
    for fx in fixtures:
        if fx["valid"]:
            continue
        obj = serialize.load_path(os.path.join(FIXDIR, fx["file"]))
        rep = _validator_for(obj)(obj)
        assert not rep.ok and rep.axiom == fx["axiom"], \
            f"{fx['file']}: got {rep.axiom}, documented {fx['axiom']}"
        failures += 1

    _report("C1", elapsed < 1.0,
            f"{len(small) + len(big)} catalog structures valid "
            f"({len(small)} small ones in {elapsed * 1000:.0f} ms), "
            f"{failures} perturbation fixtures fail with documented tags")


def _component_orders(obj):
    doc = serialize.to_document(obj)

    def walk(node):
        if isinstance(node, dict):
            if node.get("kind") == "group":
                yield len(node["elements"])
            for v in node.values():
                yield from walk(v)

    return list(walk(doc))


# ---------------------------------------------------------------------------
# C2: derived actions reproduce their defining action exactly


def test_c2_derived_action_exact():
    checked = 0
    for a in base_groups():
        for b in base_groups():
            for act in all_actions(b, a):
                ext = split_extension_from_action(a, b, act)
                assert validate_split_extension(ext).ok
                got = derived_action(ext)
                assert got.perms == act.perms, (a.name, b.name)
                checked += 1
    _report("C2", checked > 100,
            f"{checked} split extensions over the full group catalog, "
            "derived action equals the defining action elementwise")


# ---------------------------------------------------------------------------
# C3: composition coherence on group-groupoids of arrow order <= 16


def _gg_corpus(corpus):
    seen, out = set(), []

    def add(gg):
        if gg.arrows.order > 16:
            return
        key = (gg.arrows.table, gg.objects.table, gg.d0.map, gg.d1.map,
               gg.eps.map)
        if key not in seen:
            seen.add(key)
            out.append(gg)

    for name in ("z2", "z3", "z4", "v4", "s3"):
        g = catalog_build(name)
        add(discrete_gg(g))
        if g.order <= 4:
            add(pair_gg(g))
    small = [g for g in base_groups() if g.order <= 4]
    for g in small:
        for g0 in small:
            if g0.order <= g.order:
                for gg in all_gg_structures(g, g0):
                    add(gg)
    for xm in corpus:
        add(xm.g)
        add(xm.h)
    return out


def test_c3_composition_coherence(corpus):
    ggs = _gg_corpus(corpus)
    pairs_total = 0
    for gg in ggs:
        assert validate_group_groupoid(gg).ok
        arr = gg.arrows
        tbl, neg = arr.np_table, arr.np_neg
        em = gg.eps.np_map
        d0m, d1m = gg.d0.np_map, gg.d1.np_map
        A, B, comp, comp_full = _composable_pairs(gg)
        alt = tbl[tbl[A, neg[em[d1m[A]]]], B]
        assert np.array_equal(comp, alt), gg.name
        lhs = tbl[np.ix_(comp, comp)]
        rhs = comp_full[tbl[np.ix_(A, A)], tbl[np.ix_(B, B)]]
        assert (rhs >= 0).all() and np.array_equal(lhs, rhs), gg.name
        pairs_total += len(A)
    _report("C3", len(ggs) >= 25,
            f"{len(ggs)} group-groupoids, both composition formulas agree "
            f"on {pairs_total} composable pairs and the one-groupoid "
            "interchange holds on every quadruple")


# ---------------------------------------------------------------------------
# C4: interchange laws and kernel corollaries on every theta image


def _corollary_checks(d):
    S = d.s
    for (dv0, dv1, epsv, invf) in ((d.d0v, d.d1v, d.epsv, inv_v),
                                   (d.d0h, d.d1h, d.epsh, inv_h)):
        zero = dv0.codomain.zero
        k0 = [a for a in range(S.order) if dv0(a) == zero]
        k1 = [a for a in range(S.order) if dv1(a) == zero]
        # composites of kernel squares are both sums
        for a in k1:
            for a1 in k0:
                one = S.add(a1, a)
                assert one == S.add(a, a1)
        # inversion reduces on the source kernel, in either order
        for b in k0:
            e = epsv(dv1(b))
            assert invf(d, b) == S.add(S.neg(b), e) == S.sub(e, b)
        # conjugation inside the source kernel factors through the
        # degenerate square at the conjugator's target
        for a in k0:
            e = epsv(dv1(a))
            for a1 in k0:
                lhs = S.add(S.add(a, a1), S.neg(a))
                assert lhs == S.add(S.add(e, a1), S.neg(e))


def test_c4_double_interchange(corpus):
    checked = 0
    for xm in corpus:
        if xm.g.arrows.order * xm.h.arrows.order > 64:
            continue
        d = theta(xm)
        rep = validate_dgg(d)   # includes all three interchange laws
        assert rep.ok, rep.describe()
        _corollary_checks(d)
        checked += 1
    _report("C4", checked == len(corpus),
            f"{checked} theta images: all three interchange laws and the "
            "kernel corollaries hold exhaustively")


# ---------------------------------------------------------------------------
# C5: the first equivalence round-trips to isomorphisms


def test_c5_theta_gamma_roundtrips(corpus):
    fallbacks = 0
    for xm in corpus:
        rt = roundtrip_gamma_theta(xm)
        assert rt.ok, rt.report.describe()
        rt2 = roundtrip_theta_gamma(theta(xm))
        assert rt2.ok, rt2.report.describe()
        fallbacks += rt2.used_alternate
    for name in ("trivial-dgg-z2", "trivial-dgg-s3", "trivial-dgg-pair-z2"):
        rt = roundtrip_theta_gamma(catalog_build(name))
        assert rt.ok, rt.report.describe()
        fallbacks += rt.used_alternate
    _report("C5", True,
            f"{len(corpus)} round trips verified in both directions; the "
            f"minus-form square map needed the documented fallback on "
            f"{fallbacks} instances and every one resolved to an "
            "isomorphism")


# ---------------------------------------------------------------------------
# C6: the second equivalence and the crossed-square axioms


def test_c6_delta_eta_roundtrips(corpus, catalog_entries):
    for xm in corpus:
        xs = delta(xm)
        assert validate_xsq(xs).ok   # CS1-CS5, exhaustively
        rt = roundtrip_eta_delta(xm)
        assert rt.ok, rt.report.describe()
        rt2 = roundtrip_delta_eta(xs)
        assert rt2.ok, rt2.report.describe()
    norrie = [n for n in catalog_names() if n.startswith("norrie-")]
    for name in norrie:
        rt = roundtrip_delta_eta(catalog_entries[name])
        assert rt.ok, rt.report.describe()
    _report("C6", len(norrie) == 3,
            f"{len(corpus)} crossed squares pass CS1-CS5 and round-trip "
            f"both ways; {len(norrie)} normal-subcrossed-module squares "
            "round-trip as well")


# ---------------------------------------------------------------------------
# C7: the special double groupoid over its two base crossed modules


def test_c7_special_double_groupoid():
    z2, z3 = cyclic(2), cyclic(3)
    bases = [
        ("(z2,z2,id)", XModGroups(z2, z2, GroupHom.identity(z2),
                                  GroupAction.trivial(z2, z2)), 16),
        ("(z3,z2,0,inv)", XModGroups(z3, z2, GroupHom.zero(z3, z2),
                                     negation_action(z2, z3)), 24),
    ]
    for label, base, want_count in bases:
        sp = special_from_xmod(base)
        sq = sp.squares
        assert len(sq) == want_count, label
        squares = set(sq)
        for s in sq:
            assert sp.boundary_holds(s)
            assert sp.comp_h(s, sp.identity_h(s.c)) == s
            assert sp.comp_h(sp.identity_h(s.b), s) == s
            assert sp.comp_v(s, sp.identity_v(s.d)) == s
            assert sp.comp_v(sp.identity_v(s.a), s) == s
            assert sp.comp_h(s, sp.inv_h(s)) == sp.identity_h(s.b)
            assert sp.comp_v(s, sp.inv_v(s)) == sp.identity_v(s.a)
        for s in sq:
            for t in sq:
                if s.c == t.b:
                    u = sp.comp_h(s, t)
                    assert sp.boundary_holds(u) and u in squares
                if s.d == t.a:
                    u = sp.comp_v(s, t)
                    assert sp.boundary_holds(u) and u in squares
        for s in sq:
            for t in sq:
                if s.c != t.b:
                    continue
                st = sp.comp_h(s, t)
                for u in sq:
                    if t.c == u.b:
                        assert sp.comp_h(st, u) == sp.comp_h(s, sp.comp_h(t, u))
        for s in sq:
            for t in sq:
                if s.d != t.a:
                    continue
                st = sp.comp_v(s, t)
                for u in sq:
                    if t.d == u.a:
                        assert sp.comp_v(st, u) == sp.comp_v(s, sp.comp_v(t, u))
    _report("C7", True,
            "square sets of sizes 16 and 24 are closed, associative, "
            "with identities and inverses; every composite satisfies "
            "the boundary relation")


# ---------------------------------------------------------------------------
# C8: enumeration regressions


def test_c8_enumeration_regressions():
    z2, z3 = cyclic(2), cyclic(3)
    assert len(all_homs(z2, z2)) == 2
    assert len(all_homs(z3, z2)) == 1
    assert len(all_actions(z2, z3)) == 2
    assert len(all_xmod_groups(z2, z2)) == 2
    with open(os.path.join(FIXDIR, "enumeration-counts.json")) as fh:
        frozen = json.load(fh)["counts"]
    assert sum(1 for _ in all_xmod_gg(2)) == frozen["all_xmod_gg"]["2"]
    assert sum(1 for _ in all_xmod_gg(3)) == frozen["all_xmod_gg"]["3"]
    names = {"z2": cyclic(2), "z3": cyclic(3), "z4": cyclic(4)}
    from ggx.groups import klein_four, symmetric_3, trivial_group
    names.update({"v4": klein_four(), "s3": symmetric_3(),
                  "1": trivial_group()})
    for key, want in frozen["all_gg_structures"].items():
        g, g0 = key.split("/")
        assert len(all_gg_structures(names[g], names[g0])) == want, key
    _report("C8", True,
            "spot counts 2/1/2/2 as computed by the oracles; frozen corpus "
            "counts unchanged")


# ---------------------------------------------------------------------------
# C9: serialization loop and report determinism


def test_c9_serialization_loop(capsys):
    with open(os.path.join(FIXDIR, "manifest.json")) as fh:
        fixtures = json.load(fh)["fixtures"]
    for fx in fixtures:
        path = os.path.join(FIXDIR, fx["file"])
        obj = serialize.load_path(path)
        text = serialize.dumps(obj)
        assert serialize.dumps(serialize.loads(text)) == text, fx["file"]
        if fx.get("canonical") is not False:
            with open(path, encoding="utf-8") as fh:
                assert fh.read() == text, fx["file"]
        code = cli_main(["verify", path])
        assert code == (0 if fx["valid"] else 1), fx["file"]
    capsys.readouterr()
    outs = []
    for _ in range(2):
        cli_main(["verify", os.path.join(FIXDIR, "broken-xsq-h.json"),
                  "--json"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    _report("C9", len(fixtures) >= 20,
            f"{len(fixtures)} fixtures: print-parse-print is the identity, "
            "verify exit codes match, witness reports byte-identical "
            "across runs")
