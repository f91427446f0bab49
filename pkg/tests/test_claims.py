import math

import pytest

from ramify.claims import (
    ALL_CLAIM_IDS,
    CLAIMS,
    Verdict,
    claim_character_bounds,
    claim_character_properties,
    claim_circle,
    claim_double_sum,
    claim_existence,
    claim_goldbach_equivalence,
    claim_lower_bound,
    claim_magnification,
    claim_pigeonhole,
    claim_quadratic_residues,
    claim_threshold_scale,
    claim_upper_bound,
    claim_zero_class,
    replay_counterexample,
    replay_report,
    run_claim,
)
from ramify.ramification import character


class TestRegistry:
    def test_complete_mapping(self):
        assert list(CLAIMS) == [f"C{i}" for i in range(1, 14)]
        assert ALL_CLAIM_IDS == tuple(CLAIMS)
        for info in CLAIMS.values():
            assert info.statement and info.title
            assert info.kind in {
                "proposition",
                "theorem",
                "corollary",
                "conjecture",
                "consequence",
            }

    def test_statement_kind_census(self):
        kinds = [c.kind for c in CLAIMS.values()]
        assert kinds.count("proposition") == 4
        assert kinds.count("theorem") == 6
        assert kinds.count("corollary") == 1
        assert kinds.count("conjecture") == 1
        assert kinds.count("consequence") == 1

    def test_exit_policy(self):
        # conjectures and asymptotic claims never drive the exit code
        for info in CLAIMS.values():
            if info.asymptotic or info.kind == "conjecture":
                assert not info.affects_exit
            else:
                assert info.affects_exit

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            run_claim("C99")


class TestVerdictLogic:
    def test_fails_iff_counterexamples(self):
        reports = [
            claim_existence(6),
            claim_zero_class(12, 200),
            claim_quadratic_residues(13),
            claim_upper_bound((5,), (20,)),
            claim_goldbach_equivalence(60),
            claim_lower_bound((5,), (20,)),
            claim_double_sum((20,)),
            claim_pigeonhole(10),
            claim_magnification(10, 200),
            claim_circle(8, (20,)),
            claim_character_properties(6, 60),
            claim_character_bounds((5,), (50,)),
            claim_threshold_scale((20,)),
        ]
        for r in reports:
            fails = r.verdict == Verdict.FAILS_WITH_COUNTEREXAMPLE
            assert fails == bool(r.counterexamples), r.claim_id
            assert replay_report(r), r.claim_id
            assert "natural logarithm" in r.notes


class TestExistence:
    def test_m2_is_the_sole_counterexample(self):
        r = claim_existence(10)
        assert r.verdict == Verdict.FAILS_WITH_COUNTEREXAMPLE
        assert r.counterexamples == [{"m": 2}]

    def test_m2_boundary(self):
        r = claim_existence(2)
        assert r.counterexamples == [{"m": 2}]


class TestZeroClass:
    def test_holds_at_spec_scale(self):
        r = claim_zero_class(20, 500)
        assert r.verdict == Verdict.HOLDS_AT_SCALE
        assert r.actual == 0

    def test_single_probe(self):
        assert character(15, 5) == 0


class TestQuadraticResidues:
    def test_holds_to_50(self):
        r = claim_quadratic_residues(50)
        assert r.verdict == Verdict.HOLDS_AT_SCALE
        assert r.counterexamples == []

    def test_identity_residue_note(self):
        r = claim_quadratic_residues(7)
        assert "non-ramifier" in r.notes


class TestGoldbachEquivalence:
    def test_no_mismatch_to_400(self):
        r = claim_goldbach_equivalence(400)
        assert r.verdict == Verdict.HOLDS_AT_SCALE
        assert r.params["checked"] == 199


class TestBoundClaims:
    def test_upper_cell_5_20(self):
        r = claim_upper_bound((5,), (20,))
        assert r.verdict == Verdict.INDETERMINATE_ASYMPTOTIC
        assert r.actual == [6]
        assert r.claimed[0] == pytest.approx(14.1386, abs=1e-3)
        assert r.discrepancy[0] == pytest.approx(-8.1386, abs=1e-3)

    def test_lower_conflict_noted(self):
        r = claim_lower_bound((5,), (20,))
        assert r.claimed == [12.0] and r.actual == [6]
        assert "claimed lower bound 12 exceeds the exact count 6" in r.notes

    def test_lower_ceiling_conflict_noted(self):
        r = claim_lower_bound((3,), (100,))
        assert "trivial ceiling" in r.notes

    def test_double_sum_matches_oracle(self):
        def naive_count(m, x):
            return sum(
                1 for n in range(2, x + 1)
                if any(n % r == m - n % m for r in range(2, m))
            )

        r = claim_double_sum((20, 50))
        assert r.actual[0] == sum(naive_count(m, 20) for m in range(2, 21))
        assert r.actual[1] == sum(naive_count(m, 50) for m in range(2, 51))
        assert r.claimed[0] == pytest.approx(20 * math.log(20) / 2)
        assert "[5, 20]" in r.notes

    def test_circle_cell_5_20(self):
        r = claim_circle(5, (20,))
        i = r.params["cells"].index({"m": 5, "x": 20})
        assert r.actual[i] == 14
        root = math.sqrt(20 - math.log(20))
        assert r.claimed[i] == pytest.approx(20 * (root - 1) / root)
        assert r.actual[i] <= r.claimed[i]

    def test_character_bounds_rows(self):
        r = claim_character_bounds((5, 50), (100,))
        bounds = {(c["m"], c["bound"]) for c in r.params["cells"]}
        assert bounds == {(5, "lower"), (5, "upper"), (50, "lower"), (50, "upper")}
        # m = 5 sits below threshold(100) = 11 and must be flagged
        assert "(m=5, x=100)" in r.notes


class TestPigeonhole:
    def test_x7_smallest_instance(self):
        r = claim_pigeonhole(7)
        assert r.verdict == Verdict.HOLDS_AT_SCALE
        assert "n = 3" in r.notes and "[4, 6]" in r.notes

    def test_x2_below_scale(self):
        r = claim_pigeonhole(2)
        assert r.verdict == Verdict.HOLDS_AT_SCALE
        assert "below the scale" in r.notes

    def test_x100(self):
        assert claim_pigeonhole(100).actual > 0


class TestMagnification:
    def test_holds_small_sweep(self):
        r = claim_magnification(12, 300)
        assert r.verdict == Verdict.HOLDS_AT_SCALE
        assert r.params["instances"] > 0

    def test_filtered_instance(self):
        # gcd(|7-5|, 2) = 2, so (7, 5) must not enter the hypothesis set
        r = claim_magnification(5, 7)
        assert all(not (c["n"] == 7 and c["m"] == 5) for c in r.counterexamples)


class TestCharacterProperties:
    def test_shift_counterexample_5_7(self):
        r = claim_character_properties(10, 200)
        assert r.verdict == Verdict.FAILS_WITH_COUNTEREXAMPLE
        target = [
            c
            for c in r.counterexamples
            if c["property"] == "i" and c["m"] == 5 and c["n"] == 7
        ]
        assert target and replay_counterexample("C11", target[0])
        assert character(7, 5) == 1 and character(17, 5) == 0

    def test_only_property_i_fails(self):
        r = claim_character_properties(8, 300)
        assert {c["property"] for c in r.counterexamples} == {"i"}
        assert "(iii) the value at 1" in r.notes

    def test_counterexample_cap_is_per_modulus(self):
        r = claim_character_properties(10, 200, max_counterexamples=5)
        per_m: dict[int, int] = {}
        for c in r.counterexamples:
            if c["property"] == "i":
                per_m[c["m"]] = per_m.get(c["m"], 0) + 1
        assert per_m and all(v <= 5 for v in per_m.values())
        # the cap keeps every failing modulus represented
        full = claim_character_properties(10, 200, max_counterexamples=10**6)
        assert set(per_m) == {c["m"] for c in full.counterexamples if c["property"] == "i"}


class TestThresholdScale:
    def test_x20_counterexamples(self):
        r = claim_threshold_scale((20,))
        assert r.verdict == Verdict.FAILS_WITH_COUNTEREXAMPLE
        assert {"x": 20, "m": 3, "n": 5} in r.counterexamples
        assert {"x": 20, "m": 4, "n": 2} in r.counterexamples

    def test_x2_vacuous(self):
        r = claim_threshold_scale((2,))
        assert r.verdict == Verdict.HOLDS_AT_SCALE
        assert r.counterexamples == []


class TestReplay:
    def test_rejects_fabricated_counterexamples(self):
        assert not replay_counterexample("C2", {"m": 5, "n": 15})
        assert not replay_counterexample("C11", {"property": "i", "m": 3, "n": 5})
        assert not replay_counterexample("C13", {"x": 20, "m": 3, "n": 4})
        assert not replay_counterexample("C9", {"m": 5, "n": 7, "a1": 2, "r": 4})
        assert not replay_counterexample("C4", {})
