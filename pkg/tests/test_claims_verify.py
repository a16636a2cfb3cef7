import pytest

from qcong import claims, residues, verify
from qcong.claims import REGISTRY, RejectedParametersError
from qcong.report import ENGINE_INCONSISTENCY, FAIL, PASS, UNCLAIMED_FAIL, UNCLAIMED_PASS, VerificationReport


def test_registry_matches_manifest():
    assert set(claims.MANIFEST) == set(claims.THEOREMS)
    listed = [cid for ids in claims.MANIFEST.values() for cid in ids]
    assert sorted(listed) == sorted(REGISTRY)
    for thm, ids in claims.MANIFEST.items():
        assert [c.id for c in claims.claims_for(thm)] == list(ids)


@pytest.mark.parametrize("claim", list(REGISTRY.values()), ids=lambda c: c.id)
def test_claim_invariants(claim):
    assert claim.modulus in {2, 3, 4, 6, 8, 12}
    for p in claims.sweep_points(claim):
        l1, l2, a, b = claim.instantiate(p)
        assert 0 <= b < a


def test_4n2_example():
    r = verify.verify_claim("thm1-4n+2", {"alpha": 2}, 2000)
    assert r.status == PASS
    assert (r.l1, r.l2) == (4, 3)
    assert r.instances_checked == 500


def test_8n6_example():
    assert verify.verify_claim("thm1-8n+6", {"alpha": 3}, 2000).status == PASS


def test_8n6_rejects_alpha_2():
    with pytest.raises(RejectedParametersError):
        verify.verify_claim("thm1-8n+6", {"alpha": 2}, 2000)


@pytest.mark.parametrize(
    "cid,params",
    [
        ("thm2-4n+3-k", {"k": 1, "alpha": 3}),
        ("thm2-8n+7", {"alpha": 2}),
        ("thm3-9n+3i-mod4", {"alpha": 0, "beta": 1, "i": 1}),
        ("thm3-9n+3i-mod8", {"alpha": 0, "beta": 2, "i": 1}),
        ("thm3-9n+3i-mod4", {"alpha": 0, "beta": 2, "i": 3}),
        ("thm4-12n+3", {"alpha": 3, "beta": 1}),
        ("thm4-12n+11", {"alpha": 3, "beta": 1}),
    ],
)
def test_constraint_gate(cid, params):
    with pytest.raises(RejectedParametersError):
        verify.verify_claim(cid, params, 500)


def test_missing_parameter_rejected():
    with pytest.raises(RejectedParametersError):
        verify.verify_claim("thm4-12n+3", {"alpha": 2}, 500)


def test_sweep_never_checks_outside_hypothesis():
    wide = {"alpha": range(1, 7), "beta": range(0, 5), "k": range(0, 3), "i": range(0, 4)}
    for claim in REGISTRY.values():
        for p in claims.sweep_points(claim, wide):
            assert claim.hypothesis(p)


def test_order_auto_raised():
    r = verify.verify_claim("thm1-8n+5", {"alpha": 2}, 100, min_instances=100)
    assert r.order == 8 * 100 + 5
    assert r.instances_checked >= 100 and not r.insufficient_coverage
    assert any("raised" in n for n in r.notes)


def test_coverage_flag_without_auto_raise():
    r = verify.verify_claim("thm1-8n+5", {"alpha": 2}, 100, min_instances=100, auto_raise=False)
    assert r.insufficient_coverage
    assert r.instances_checked == 12


def test_reports_are_deterministic():
    a = verify.verify_claim("thm2-8n+7", {"alpha": 3}, 2000).to_dict()
    b = verify.verify_claim("thm2-8n+7", {"alpha": 3}, 2000).to_dict()
    a.pop("runtime"), b.pop("runtime")
    assert a == b


def test_violation_classified_as_claim_failure(monkeypatch):
    # a fake claim that is false: B(4,3; 4n+1) is not always 0 mod 4
    fake = claims.CongruenceClaim(
        "fake", "thm1", "4", "3", "4", "1", 4,
        hypothesis=lambda p: True, hypothesis_text="always", domain=lambda p: True, sweep={},
    )
    r = verify.verify_claim(fake, {}, 400)
    assert r.status == FAIL
    assert r.first_violation is not None


def test_engine_inconsistency_detected(monkeypatch):
    fake = claims.CongruenceClaim(
        "fake", "thm1", "4", "3", "4", "1", 4,
        hypothesis=lambda p: True, hypothesis_text="always", domain=lambda p: True, sweep={},
    )
    real = verify.oracle.count_dp

    def skewed(l1, l2, n):
        t = real(l1, l2, n)
        return type(t)(l1, l2, tuple(v + 1 for v in t.values))

    monkeypatch.setattr(verify.oracle, "count_dp", skewed)
    r = verify.verify_claim(fake, {}, 400)
    assert r.status == ENGINE_INCONSISTENCY


def test_explore_mode_reports_unclaimed():
    r = verify.verify_claim("thm4-12n+11", {"alpha": 3, "beta": 1}, 500, explore=True)
    assert r.status == UNCLAIMED_FAIL and r.passed
    r = verify.verify_claim("thm4-12n+7", {"alpha": 2, "beta": 1}, 500, explore=True)
    assert r.status in (UNCLAIMED_PASS, UNCLAIMED_FAIL) and r.passed


def test_explore_still_honours_standing_minimums():
    with pytest.raises(RejectedParametersError):
        verify.verify_claim("thm4-12n+3", {"alpha": 1, "beta": 2}, 500, explore=True)


def test_failing_report_needs_violation():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, 10, FAIL)


def test_suite_sorted_and_parallel_agrees():
    serial = verify.verify_theorem_suite("thm3")
    parallel = verify.verify_theorem_suite("thm3", workers=2)
    assert [r.sort_key() for r in serial] == sorted(r.sort_key() for r in serial)
    strip = lambda rs: [{k: v for k, v in r.to_dict().items() if k != "runtime"} for r in rs]
    assert strip(serial) == strip(parallel)


def test_thm4_parity_table():
    reports = verify.verify_theorem_suite("thm4", {"alpha": range(2, 4), "beta": range(1, 3)})
    checked = {(r.claim_id, r.params["alpha"], r.params["beta"]) for r in reports}
    assert checked == {
        ("thm4-12n+3", 2, 2), ("thm4-12n+3", 3, 2),
        ("thm4-12n+7", 2, 2), ("thm4-12n+7", 3, 2),
        ("thm4-12n+11", 2, 1), ("thm4-12n+11", 3, 2), ("thm4-12n+11", 2, 2),
    }
    assert all(r.status == PASS for r in reports)


def test_oracle_crosscheck():
    assert verify.oracle_crosscheck(4, 3, 60).status == PASS
    assert verify.oracle_crosscheck(8, 9, 60).status == PASS
    r = verify.overpartition_crosscheck(40)
    assert r.status == PASS


@pytest.mark.parametrize("alpha,beta", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 3), (5, 4)])
def test_theta_expansion_mod8(alpha, beta):
    assert verify.expansion_report(alpha, beta, 400).status == PASS


def test_mod2_sweep():
    assert all(r.status == PASS for r in verify.mod2_sweep([(4, 3), (2, 9)], 200))


@pytest.mark.parametrize("case", residues.PARITY_CASES)
def test_residue_tables(case):
    for fam in residues.FAMILIES:
        assert residues.residue_table(fam, *case) == residues.PRINTED[case][fam]


def test_residue_examples():
    assert residues.residue_table("2^a n^2", "odd", "even") == {0, 8}
    assert residues.residue_table("3^b n^2", "odd", "even") == {0, 9}
    assert residues.residue_table("2^a i^2 + 3^b j^2", "even", "even") == {0, 1, 4, 9}


def test_residue_tables_stable_across_representatives():
    for alpha in range(2, 8):
        for beta in range(1, 7):
            case = ("odd" if alpha % 2 else "even", "odd" if beta % 2 else "even")
            for fam in residues.FAMILIES:
                assert residues.attained(fam, alpha, beta) == residues.PRINTED[case][fam]
