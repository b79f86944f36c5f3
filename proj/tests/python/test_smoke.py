import json
from fractions import Fraction

import pytest

import easyspace as es


def test_group_moments_are_exact_fractions():
    v = es.group_moment("O+:4", "oooo", [1, 1, 1, 1], [1, 1, 1, 1])
    assert isinstance(v, Fraction)
    assert v == Fraction(1, 10)
    for n in range(2, 7):
        assert es.group_moment(f"U:{n}", "ob", [1, 1], [1, 1]) == Fraction(1, n)
        assert es.group_moment(f"O:{n}", "oooo", [1] * 4, [1] * 4) == Fraction(3, n * (n + 2))


def test_s_n_moments_match_the_exhaustive_oracle():
    for rows in ([1, 1], [1, 2], [2, 1]):
        for cols in ([1, 1], [1, 2]):
            assert es.group_moment("S:4", "oo", rows, cols) == es.sn_moment(4, "oo", rows, cols)


def test_partitions_and_matrices():
    assert es.partitions("O+", "oooo") == ["12|34", "14|23"]
    assert len(es.partitions("S", "oooo")) == 15
    g = es.gram("S:3", "oo")
    assert g["index"] == ["12", "1|2"]
    assert g["matrix"] == [[3, 3], [3, 9]]
    w = es.weingarten("S:2", "ooo")
    assert not w["invertible"]
    assert len(w["basis"]) < len(w["index"])


def test_space_moments_accept_several_index_forms():
    assert es.space_moment("O+:5/I=1,2", "oo", [1, 1]) == Fraction(2, 5)
    a = es.space_moment("column-space:O+:4:2", "ob", ["1.1", "2.2"])
    b = es.space_moment("column-space:O+:4:2", "ob", [(1, 1), (2, 2)])
    assert a == b


def test_verify_and_characters():
    r = es.verify("free-real-sphere:4", 3, 1)
    assert r["all_pass"]
    assert r["checks"] == r["relations"] * r["monomials"]
    assert r["failures"] == []
    assert es.char_exact("free-real-sphere:5", 5, "oooo") == Fraction(5, 3)
    assert es.char_asymptotic(["O", "O+"], "oooo", Fraction(1, 2)) == Fraction(1, 2)
    assert es.limit_moments("free-poisson", 4) == [1, 2, 5, 14]
    assert es.bp_compare("S", 1, 4)[-1] == (4, 15, 14)


def test_monte_carlo_report():
    r = es.haar_mc("O", 4, "oo", [1, 1], [1, 1], samples=50_000, seed=3)
    assert abs(r["estimate"] - 0.25) < 5 * r["standard_error"]
    assert r == es.haar_mc("O", 4, "oo", [1, 1], [1, 1], samples=50_000, seed=3)


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        es.group_moment("Q:3", "o", [1], [1])
    with pytest.raises(es.PreconditionError):
        es.haar_mc("O", 3, "o", [1], [1], samples=10)


def test_cli_in_process():
    code, out, err = es.run_cli(["bp-compare", "--category", "S", "--max-k", "3"])
    assert code == 0 and err == ""
    assert json.loads(out)["table"][-1]["free"] == "5"
    code, out, err = es.run_cli(["no-such-command"])
    assert code == 1 and "Usage" in err
