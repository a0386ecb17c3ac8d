from fractions import Fraction

import hankelcat


def test_sequences():
    assert hankelcat.seq_prefix("catalan", 1, 5) == [1, 1, 2, 5, 14]
    assert hankelcat.seq_prefix("binomial", 1, 3) == [1, 3, 10]
    assert hankelcat.conv_power_oracle(2, 4) == [1, 2, 5, 14]


def test_determinants():
    assert hankelcat.det_sequence("catalan", 3, 1, 12) == [1, 3, 3, -1, -6, -6, 1, 9, 9, -1, -12, -12]
    assert hankelcat.det_sequence("catalan", 4, 1, 2)[1] == 4
    assert hankelcat.bareiss_det([[2, 5], [5, 14]]) == 3
    assert hankelcat.cofactor_det([[0, 1], [1, 1]]) == -1
    big = 10**40
    assert hankelcat.bareiss_det([[big, 1], [1, big]]) == big * big - 1


def test_exact_values():
    assert hankelcat.bernoulli(12) == Fraction(-691, 2730)
    assert hankelcat.product_formula_pm(3, 1) == 5


def test_checker_report():
    assert "thm2" in hankelcat.checker_ids()
    report = hankelcat.run_checker("thm2", {"k": [2, 3]})
    assert report["status"] == "consistent"
    assert report["verified"]


def test_gf():
    out = hankelcat.extract_gf("even", 1, 3)
    assert out["numerator"] == [1, 7, 7, 1]
    assert out["class"] == "palindromic"


def test_errors():
    import pytest

    with pytest.raises(ValueError):
        hankelcat.seq_prefix("catalan", 0, 3)
    with pytest.raises(ValueError):
        hankelcat.run_checker("nosuch")
