"""The ten acceptance criteria, one test each.

Each test prints a single PASS/FAIL line as it finishes, and the lines are
repeated together in the terminal summary.  Run on its own with

    pytest tests/test_acceptance.py -s
"""

import time
from contextlib import contextmanager

import test_dissect
import test_qexpr
import test_series
from hypothesis import settings

from conftest import ACCEPTANCE, partition_numbers
from qcong import oracle, products, residues, verify
from qcong.dissect import load_fixtures, run_fixtures
from qcong.report import PASS
from qcong.series import invert

PAIRS = [(4, 3), (8, 3), (4, 9), (8, 9), (2, 9)]


@contextmanager
def criterion(number, title, budget=None):
    t0 = time.perf_counter()
    info = {"detail": ""}
    ok = False
    try:
        yield info
        elapsed = time.perf_counter() - t0
        if budget is not None:
            assert elapsed < budget, f"took {elapsed:.2f} s, budget {budget} s"
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        detail = f"{info['detail']} ({elapsed:.2f} s)".strip()
        ACCEPTANCE[number] = (ok, title, detail)
        print(f"\n[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}")


def _sweep(theorem, min_instances):
    reports = verify.verify_theorem_suite(theorem)
    bad = [r.describe() for r in reports if r.status != PASS]
    assert bad == [], bad
    short = [r.describe() for r in reports if r.instances_checked < min_instances]
    assert short == [], short
    return reports


def test_01_golden_values():
    with criterion(1, "golden values", budget=1.0) as info:
        p = invert(products.pochhammer_simple(1, 9))
        assert list(p.coeffs) == partition_numbers(9) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
        pbar = products.eta_quotient([(1, -2), (2, 1)], 4)
        assert pbar[4] == 14
        info["detail"] = "p(0..9) and pbar(4)=14"


def test_02_identity_suite():
    wanted = {"f3sq_f1sq_2dissection", "f3_f1cube_2dissection", "f1_inv4_2dissection", "f1_inv2_2dissection", "phi_minus_3dissection", "pbar_3dissection", "phi_eta", "phi_minus_eta",
              "jacobi_triple_product_plus", "jacobi_triple_product_minus", "lemma_lp1"}
    with criterion(2, "identity suite at N=400", budget=30.0) as info:
        fixtures = [f for f in load_fixtures() if f.name in wanted]
        assert {f.name for f in fixtures} == wanted
        lemma = next(f for f in fixtures if f.name == "lemma_lp1")
        assert {(b["p"], b["k"]) for b in lemma.params} >= {(2, 1), (2, 2), (3, 1), (3, 2)}
        reports = run_fixtures(fixtures, 400)
        bad = [(r.claim_id, r.params, r.first_violation) for r in reports if r.status != PASS]
        assert bad == []
        info["detail"] = f"{len(reports)} identity instances exact"


def test_03_oracle_triple_equivalence():
    with criterion(3, "oracle triple equivalence", budget=30.0) as info:
        for pair in PAIRS:
            table = oracle.count_dp(*pair, 60)
            assert [oracle.count_enumerate(*pair, n) for n in range(26)] == list(table.values[:26]), pair
            assert table.values == products.biregular_gf(*pair, 60).coeffs, pair
        info["detail"] = f"{len(PAIRS)} pairs, enumerate=dp (n<=25), dp=series (n<=60)"


def test_04_theorem1():
    with criterion(4, "Theorem 1 sweep", budget=120.0) as info:
        reports = _sweep("thm1", 250)
        got = {(r.claim_id, r.params["alpha"]) for r in reports}
        want = {(c, a) for c in ("thm1-4n+2", "thm1-8n+5") for a in range(2, 7)} | {("thm1-8n+6", a) for a in range(3, 7)}
        assert got == want
        assert all(r.order == 2000 for r in reports)
        info["detail"] = f"{len(reports)} instances, zero violations"


def test_05_theorem2():
    with criterion(5, "Theorem 2 sweep") as info:
        reports = _sweep("thm2", 100)
        got = {(r.claim_id, r.params.get("k"), r.params["alpha"]) for r in reports}
        want = {("thm2-4n+3-k", k, a) for k in range(3) for a in range(2 * k + 2, 2 * k + 5)}
        want |= {("thm2-8n+7", None, a) for a in range(3, 7)}
        assert got == want
        info["detail"] = f"{len(reports)} instances, zero violations"


def test_06_theorem3():
    with criterion(6, "Theorem 3 sweep") as info:
        reports = _sweep("thm3", 100)
        got = {(r.claim_id, r.params["alpha"], r.params["beta"], r.params["i"]) for r in reports}
        want = {("thm3-9n+3i-mod4", a, b, i) for a in (0, 1) for b in (2, 3) for i in (1, 2)}
        want |= {("thm3-9n+3i-mod8", 1, b, i) for b in (2, 3) for i in (1, 2)}
        assert got == want
        assert all(r.order >= 3000 for r in reports)
        info["detail"] = f"{len(reports)} instances, zero violations"


def test_07_theorem4():
    with criterion(7, "Theorem 4 sweep") as info:
        reports = _sweep("thm4", 100)
        got = {(r.progression[1], r.params["alpha"], r.params["beta"]) for r in reports}
        assert all(r.modulus == 8 and r.progression[0] == 12 for r in reports)
        # read directly off the statement
        want = set()
        for a in range(2, 6):
            for b in range(1, 5):
                if b % 2 == 0:
                    want |= {(3, a, b), (7, a, b)}
                if a % 2 != b % 2 or (a % 2 == 0 and b % 2 == 0):
                    want.add((11, a, b))
        assert got == want
        info["detail"] = f"{len(reports)} admissible combinations, zero violations"


def test_08_residue_tables():
    with criterion(8, "mod-12 residue tables", budget=1.0) as info:
        n = 0
        for case in residues.PARITY_CASES:
            for fam in residues.FAMILIES:
                assert residues.residue_table(fam, *case) == residues.PRINTED[case][fam], (case, fam)
                n += 1
        info["detail"] = f"{n} sets match the printed tables"


PROPERTIES = [
    test_series.test_ring_axioms,
    test_dissect.test_reassembly,
    test_dissect.test_linearity,
    test_series.test_power_additive,
    test_qexpr.test_round_trip_property,
]


def test_09_property_suites():
    with criterion(9, "property suites") as info:
        assert settings.default.max_examples >= 100 and settings.default.derandomize
        for prop in PROPERTIES:
            prop()
        info["detail"] = f"{len(PROPERTIES)} properties, 100 derandomized cases each"


def test_10_mod2():
    with criterion(10, "mod-2 congruence to n=500") as info:
        reports = verify.mod2_sweep(PAIRS, 500)
        bad = [r.describe() for r in reports if r.status != PASS]
        assert bad == []
        info["detail"] = f"{len(PAIRS)} pairs, zero violations"
