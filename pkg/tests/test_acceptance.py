"""Acceptance suite: ten end-to-end criteria, each printing one PASS/FAIL
line (run with -s or read the captured output)."""

import random
import time
from fractions import Fraction

import pytest

import nestcone as nc
from nestcone.verify import nef_table_inputs

F = Fraction


def report(num: int, name: str, ok: bool, extra: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    tail = f" ({extra})" if extra else ""
    print(f"[acceptance {num:>2}] {name}: {status}{tail}")
    assert ok, f"acceptance criterion {num} ({name}) failed"


# ---------------------------------------------------------------------------

def test_01_pairing_tables():
    t0 = time.perf_counter()
    ok = True
    for n in range(2, 11):
        ok &= nc.reproduce_table("pairing_p2_hilb", n=n).ok
        ok &= nc.reproduce_table("pairing_p2_nested", n=n).ok
    elapsed = time.perf_counter() - t0
    report(1, "pairing tables reproduce exactly for n=2..10", ok and elapsed < 0.1,
           f"{elapsed:.3f}s")


def test_02_derived_class_consistency():
    surfaces = [nc.p2(), nc.p1xp1(), nc.hirzebruch(1), nc.hirzebruch(2), nc.k3(3)]

    def gammas(s):
        if s.rank == 1:
            return [(m,) for m in (1, 2, 3)]
        gs = [(m1, m2) for m1 in range(4) for m2 in range(4) if (m1, m2) != (0, 0)]
        if s.index:
            gs.append((1, -s.index))
        return gs

    def gdot(s, gamma, j):
        return sum(F(m) * s.gram[i][j] for i, m in enumerate(gamma))

    ok = True
    for s in surfaces:
        for n in range(2, 9):
            hilb_sp, nest_sp, univ_sp = nc.hilb(n), nc.nested(n), nc.univ(n)
            b2 = nc.divisor(s, hilb_sp, "B/2")
            bd = nc.divisor(s, nest_sp, "Bdiff/2")
            bb = nc.divisor(s, nest_sp, "Bb/2")
            bu = nc.divisor(s, univ_sp, "B/2")
            for gamma in gammas(s):
                # expansion pairings == collision counts
                for r in range(1, n + 1):
                    c = nc.curve_family_a(s, hilb_sp, gamma, r)
                    ok &= nc.pair(b2, c) == r - 1
                    ok &= all(
                        nc.pair(nc.divisor(s, hilb_sp, g), c) == gdot(s, gamma, j)
                        for j, g in enumerate(s.generator_names)
                    )
                for r in range(1, n + 2):
                    ca = nc.curve_family_a(s, nest_sp, gamma, r)
                    ok &= nc.pair(bd, ca) == r - 1 and nc.pair(bb, ca) == 0
                for r in range(1, n + 1):
                    cb = nc.curve_family_b(s, nest_sp, gamma, r)
                    ok &= nc.pair(bd, cb) == 1 and nc.pair(bb, cb) == r - 1
                    # pushforward identities (fail under the printed -A^a)
                    ok &= (
                        nc.pushforward_a(cb).coords
                        == nc.curve_family_a(s, nc.hilb(n + 1), gamma, r + 1).coords
                    )
                    ok &= (
                        nc.pushforward_b(cb).coords
                        == nc.curve_family_a(s, hilb_sp, gamma, r).coords
                    )
                    if r >= 2:
                        alt = nc.curve_family_b_alt(s, nest_sp, gamma, r)
                        ok &= (
                            nc.pushforward_a(alt).coords
                            != nc.curve_family_a(s, nc.hilb(n + 1), gamma, r + 1).coords
                        )
                for r in range(1, n):
                    ok &= nc.pair(bu, nc.curve_family_a(s, univ_sp, gamma, r)) == r
                for r in range(1, n + 1):
                    ok &= nc.pair(bu, nc.curve_family_b(s, univ_sp, gamma, r)) == r - 1
    report(2, "derived-class pairings match collision counts; pushforward "
              "identities hold (and fail under the printed variant)", ok)


def test_03_nef_certificates():
    t0 = time.perf_counter()
    ok = True

    def certified(table, **params):
        return nc.standard_nef_certificate(table, **params).ok

    for n in range(2, 11):
        ok &= certified("nef_p2_nested", n=n)
        ok &= certified("nef_p2_univ", n=n)
    for n in range(2, 9):
        ok &= certified("nef_f0_nested", n=n)
        ok &= certified("nef_f0_univ", n=n)
        for i in (1, 2, 3):
            ok &= certified("nef_fi_nested", i=i, n=n)
            ok &= certified("nef_fi_univ", i=i, n=n)
    for g in (3, 4, 5):
        for n in range(g + 1, g + 5):
            cert = nc.standard_nef_certificate("nef_k3_nested", g=g, n=n)
            ok &= cert.ok
            ok &= [cert.matrix[i][i] for i in range(4)] == [
                F(2 * g - 2), F(1), F(2 * g - 2), F(1)
            ]
            ok &= certified("nef_k3_univ", g=g, n=n)
    elapsed = time.perf_counter() - t0
    report(3, "nef duality certificates over all surfaces and ranges",
           ok and elapsed < 1.0, f"{elapsed:.3f}s")


def test_04_eff_certificates():
    ok = True
    for table in ("eff_p2_2_1", "eff_p2_3_2"):
        ok &= nc.standard_eff_certificate(table).ok
        ok &= nc.reproduce_table(table).ok  # printed cells exact
    ok &= nc.cone_contains(
        nc.standard_eff_cone("eff_p2_2_1"), nc.standard_nef_cone("nef_p2_univ", n=2)
    )
    ok &= nc.cone_contains(
        nc.standard_eff_cone("eff_p2_3_2"), nc.standard_nef_cone("nef_p2_nested", n=2)
    )
    report(4, "effective certificates exact; Eff contains Nef on both spaces", ok)


def test_05_summary_chart():
    rep = nc.reproduce_table("eff_summary")
    statuses = {c.status for s in rep.sections for c in s.cells}
    skipped_labels = {
        lbl
        for s in rep.sections
        for c in s.cells
        if c.status == "skipped"
        for lbl in (c.row, c.col)
    }
    unresolved_named = {"E_1", "2D^a_{3/2}", "2D^b_{3/2}"}
    ok = (
        rep.ok
        and statuses == {"match", "skipped"}
        and any(l.startswith("C^c") for l in skipped_labels)
        and unresolved_named <= skipped_labels
    )
    n_skip = sum(1 for s in rep.sections for c in s.cells if c.status == "skipped")
    report(5, "summary chart: resolvable cells verified, unresolved SKIPPED",
           ok, f"{n_skip} cells skipped")


def test_06_canonical_class():
    s = nc.p2()
    ok = all(
        nc.canonical_class(s, nc.nested(n)).coords == (F(-3), F(-3), F(1), F(0))
        for n in range(1, 11)
    )
    report(6, "canonical class of the nested space over P2, n=1..10", ok)


def test_07_butler():
    ok = True
    for i in (0, 1, 2):
        for a in (1, 2):
            for b in (1, 2):
                for n in range(4, 9):
                    inp = nc.ButlerInput(i=i, a=a, b=b, n=n, k_range=(1, 5))
                    ok &= nc.butler_check(inp).all_interior
    ref = nc.butler_check(nc.ButlerInput(i=1, a=1, b=1, n=4, k_range=(1, 1)))
    ok &= ref.steps[0].ray_coefficients == (F(2), F(2), F(2), F(2), F(2))
    for i in range(4):
        lhs, rhs = nc.half_b_a(i)
        ok &= (lhs - rhs).is_zero()
    report(7, "Butler scan all Interior; reference coefficients (2,2,2,2,2); "
              "half-B^a identity exact", ok)


def test_08_asymptotic():
    t0 = time.perf_counter()
    rep = nc.asymptotic_report(30)
    by_k = {s.k: s for s in rep.steps}
    ok = (
        rep.ok
        and by_k[10].deviation_1 == F(1, 13)
        and by_k[10].deviation_2 == F(1, 13)
        and all(by_k[k].section_distance <= F(1, k) for k in range(2, 31))
        and rep.limit_is_orthant
    )
    elapsed = time.perf_counter() - t0
    report(8, "asymptotic nesting, exact deviations, orthant limit",
           ok and elapsed < 1.0, f"{elapsed:.3f}s")


def test_09_cone_engine_properties():
    t0 = time.perf_counter()
    rng = random.Random(1234)
    ok = True
    from nestcone.linalg import solve_unique

    for _ in range(200):
        dim = rng.randint(2, 6)
        k = rng.randint(1, dim + 3)
        rays = [
            tuple([rng.randint(1, 9)] + [rng.randint(-9, 9) for _ in range(dim - 1)])
            for _ in range(k)
        ]
        c = nc.cone_from_rays(dim, rays)
        ext = nc.extremal_rays(c)
        dd = nc.dual(nc.dual(c))
        ok &= nc.extremal_rays(dd).rays == ext.rays  # dual-dual identity
        ok &= nc.extremal_rays(ext).rays == ext.rays  # idempotence
        if len(ext.rays) == dim:  # simplicial membership cross-check
            mat = [[ext.rays[j][i] for j in range(dim)] for i in range(dim)]
            for _ in range(3):
                v = tuple(rng.randint(-9, 9) for _ in range(dim))
                coeffs = solve_unique(mat, list(v))
                inside = all(x >= 0 for x in coeffs)
                ok &= (nc.position(c, v) != "Outside") == inside
    elapsed = time.perf_counter() - t0
    report(9, "cone engine: dual-dual identity, idempotence, simplicial "
              "cross-check on 200 random cones", ok and elapsed < 5.0,
           f"{elapsed:.3f}s")


def test_10_figure_fidelity():
    from nestcone.render import cross_section_svg, cross_section_tikz

    eff_cone, _ = nc.table_cone_with_labels("eff_p2_2_1")
    eff_cs = nc.cross_section(eff_cone)
    nef_cone, _ = nc.table_cone_with_labels("nef_p2_nested", n=3)
    nef_cs = nc.cross_section(nef_cone)
    ok = (
        len(eff_cs.vertices) == 4
        and len(eff_cs.edges) == 4  # square: diagonals excluded
        and len(nef_cs.vertices) == 4
        and len(nef_cs.edges) == 6  # simplex section
    )
    # bit-stability: identical output across repeated renders
    ok &= cross_section_svg(eff_cs) == cross_section_svg(
        nc.cross_section(nc.table_cone_with_labels("eff_p2_2_1")[0])
    )
    ok &= cross_section_tikz(nef_cs) == cross_section_tikz(
        nc.cross_section(nc.table_cone_with_labels("nef_p2_nested", n=3)[0])
    )
    report(10, "figure fidelity: 4-vertex square and simplex section, "
               "bit-stable SVG/TikZ", ok)
