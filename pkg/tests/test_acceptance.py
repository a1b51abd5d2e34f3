"""Acceptance suite: one pass/fail line per criterion.

Each test delegates to the matching reproduction check in legch.verify and
asserts both exactness and the stated wall-time budget (timed inside the
criterion function, excluding import and collection overhead).
"""

from legch import verify


def _check(result, budget=None):
    name, ok, details, elapsed = result
    assert ok, f"{name}: {details}"
    if budget is not None:
        assert elapsed < budget, f"{name}: took {elapsed:.3f}s, budget {budget}s"


def test_criterion_1_trefoil_ground_truth_exact_under_1ms():
    _check(verify.criterion_1(), budget=0.001)


def test_criterion_2_fibonacci_lengths_n_up_to_20_under_10s():
    _check(verify.criterion_2(), budget=10.0)


def test_criterion_3_even_class_iff_n_mod_3_not_2():
    _check(verify.criterion_3())


def test_criterion_4_connected_sum_algebra_under_5s():
    _check(verify.criterion_4(), budget=5.0)


def test_criterion_5_tau_certificates_exact():
    _check(verify.criterion_5())


def test_criterion_6_monodromy_verdicts_under_10s():
    _check(verify.criterion_6(), budget=10.0)


def test_criterion_7_holonomy_rules_and_script_homomorphism():
    _check(verify.criterion_7())


def test_criterion_8_randomized_property_families():
    _check(verify.criterion_8())
