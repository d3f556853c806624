from facewise.catalog import (
    ABCDE,
    example_checks,
    six_element_poset,
    tightness_counterexample_game,
    twin_polymatroids,
)
from facewise.combinatorics import classify
from facewise.games import is_supermodular


def test_every_worked_example_matches_its_published_value():
    checks = example_checks()
    failed = [(check.example, check.quantity, check.expected, check.actual) for check in checks if not check.passed]
    assert not failed
    assert {check.example for check in checks} == {
        "six-element poset",
        "marginal vector example",
        "tightness counterexample",
        "twin polymatroids",
    }


def test_six_element_poset_is_a_poset():
    assert classify(six_element_poset()).is_poset


def test_counterexample_is_not_supermodular():
    assert not is_supermodular(tightness_counterexample_game())


def test_twin_polymatroids_differ_only_at_a_single_element():
    h, h_prime = twin_polymatroids()
    differing = [mask for mask in ABCDE.subsets() if h(mask) != h_prime(mask)]
    assert differing == [ABCDE.mask_of("a")]
    assert h(ABCDE.mask_of("a")) == 2 and h_prime(ABCDE.mask_of("a")) == 3
    assert h(ABCDE.mask_of("bc")) == 8


def test_hasse_check_compares_the_arrow_set():
    check = next(c for c in example_checks() if c.quantity == "Hasse arrows")
    assert check.expected == check.actual
    assert ("a", "e") in check.actual and ("a", "d") not in check.actual
    assert len(check.actual) == 6
