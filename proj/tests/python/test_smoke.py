import itertools
import json
import math

import pytest

import braidperm as bp


def test_permutation_basics():
    p = bp.Permutation.parse("(2 1)(4 3)")
    assert str(p) == "(1 2)(3 4)"
    assert (p * p).is_identity()
    assert p.order() == 2
    assert bp.Permutation([2, 1]) == bp.Permutation.parse("(1 2)")
    assert str(bp.theta(1, 2, 2)) == "(1 3)(2 4)"
    assert str(bp.omega_shift(bp.Permutation.parse("(1 2)"), 1)) == "(2 3)"
    assert len({p, bp.Permutation.parse("(1 2)(3 4)")}) == 1


def test_parse_errors():
    with pytest.raises(ValueError):
        bp.Permutation.parse("(1 1)")
    with pytest.raises(bp.InvalidSpec):
        bp.build_sigma(2, "(1 2)", "id", [1], [3])


def test_construction():
    assert str(bp.build_sigma(2, "(1 2)", "id", [1], [1])) == "(1 3 2 4)"
    assert str(bp.build_sigma(2, "()", "(1 2)")) == "(1 4)(2 3)"
    first, second = bp.build_pair(2, "(1 2)")
    assert first.is_identity() and str(second) == "(1 2)"
    spec = {"d": 2, "tau": "()", "u": [[1, 2], [2, 1]]}
    assert str(bp.construct(json.dumps(spec))) == "(1 4)(2 3)"


def test_enumeration_counts():
    for d, expected in [(2, 4), (3, 18)]:
        total = 0
        for images in itertools.permutations(range(1, d + 1)):
            tau = bp.Permutation(list(images))
            m = bp.enumerate_M(d, tau)
            assert m == bp.enumerate_N(d, tau)
            total += len(m)
        assert total == expected == bp.partition_count(d) * math.factorial(d)
    assert bp.count_commuting_pairs_symmetric(4) == 120


def test_braid_image():
    image = bp.BraidImage(bp.Permutation.parse("(1 3 2 4)"), 2, 3)
    assert [str(g) for g in image.generators] == ["(1 3 2 4)", "(3 5 4 6)"]
    assert image.order() == "24"
    assert image.a_order() == "4"
    assert image.orbits() == [[1, 2, 3, 4, 5, 6]]
    assert image.split() is None
    assert image.monodromy_kernel_size() == 1
    assert "Group(" in image.gap()
    assert image.to_json()["q"] == 2

    odd = bp.BraidImage(bp.build_sigma(3, "(1 2 3)"), 3, 3)
    assert odd.order() == str(6 * 27)
    assert len(odd.split()) == 2


def test_verify_report():
    report = bp.verify([2], [3], ["prop-3.11", "thm-3.4"], 7)
    assert report["schema"] == 1
    assert report["seed"] == 7
    assert report["all_pass"]
    assert {e["claim"] for e in report["entries"]} == {"prop-3.11", "thm-3.4"}
    with pytest.raises(ValueError):
        bp.verify([2], [3], ["no-such-claim"])
