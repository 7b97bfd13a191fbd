import pytest

import rbsym


def test_single_edge():
    u = rbsym.compute({"n": 2, "edges": [[1, 2]]}, basis="p")
    assert u == {"basis": "p", "terms": [{"key": [1, 1], "num": "1", "den": "1"}]}


def test_text_and_json_agree():
    assert rbsym.compute("3; 1 2; 2 3; 3 1") == rbsym.compute({"n": 3, "edges": [[1, 2], [2, 3], [3, 1]]})


def test_permutation_and_poset():
    assert rbsym.compute({"one_line": [2, 1]}, basis="p")["terms"] == [
        {"key": [2], "num": "1", "den": "1"},
        {"key": [1, 1], "num": "1", "den": "1"},
    ]
    chain = {"n": 3, "relations": [[1, 2], [2, 3]]}
    assert rbsym.compute(chain, basis="p")["terms"] == [{"key": [1, 1, 1], "num": "1", "den": "1"}]


def test_poly():
    assert rbsym.poly("2; 1 2", 2) == 4
    assert rbsym.poly({"n": 2, "edges": []}, 2) == 6
    assert rbsym.poly("3; 1 2", 0) == 0


def test_invariants():
    r = rbsym.invariants("3; 1 2; 2 3; 3 1", tournament=True)
    assert r["odd_cycle_counts"] == {"3": "1"}
    assert rbsym.invariants({"n": 2, "relations": []})["incomparable_pairs"] == "1"


def test_verify_and_search():
    assert "redei" in rbsym.suite_names()
    r = rbsym.verify("redei", n=5)
    assert r["passed"] and r["seed"] == 0
    summary, groups = rbsym.search("chain-unions", 5)
    assert summary["max_group_size"] == 1
    assert len(groups) == summary["groups"]


def test_errors():
    with pytest.raises(rbsym.ValidationError):
        rbsym.compute("3; 1 4")
    with pytest.raises(rbsym.CapacityError):
        rbsym.compute({"n": 12, "edges": []})
    with pytest.raises(rbsym.DomainError):
        rbsym.invariants("3; 1 2", tournament=True)
    with pytest.raises(rbsym.Error):
        rbsym.verify("nonsense")
