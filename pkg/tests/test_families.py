import random
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from indhilbert.engine import indpoly
from indhilbert.families import (
    bipartite_setup_sum,
    matching_numbers,
    predict,
    predict_antiregular,
    predict_cycle,
    predict_mary_tree,
    predict_multipartite,
    predict_path,
    predict_star_triangle,
)
from indhilbert.generators import CameronWalker, StarTriangle, generate, random_bipartite_connected
from indhilbert.hilbert import degree_report
from indhilbert.poly import derivative
from indhilbert.verify import SUITES, Grid, check_instance, run_suite


def test_path_predictions():
    p4 = predict_path(4)
    assert (p4.i_at_minus_one, p4.first_derivative, p4.deg_h) == (0, -2, 1)
    p6, p5 = predict_path(6), predict_path(5)
    assert (p6.i_at_minus_one, p6.deg_h, p6.alpha) == (1, 3, 3)
    assert (p5.i_at_minus_one, p5.deg_h, p5.alpha) == (1, 3, 3)


def test_cycle_predictions():
    assert predict_cycle(6).i_at_minus_one == 2
    assert predict_cycle(5).i_at_minus_one == 1
    assert predict_cycle(3).i_at_minus_one == -2 == indpoly(generate(predict_cycle(3).spec)).i_at_minus_one


def test_multipartite_predictions():
    assert predict_multipartite((3, 2)).deg_h == 3
    k222 = predict_multipartite((2, 2, 2))
    assert (k222.deg_h, k222.i_at_minus_one) == (2, -2)
    assert predict_multipartite((4,)).deg_h == 0


def test_tree_predictions():
    assert predict_mary_tree(2, 1).deg_equals_alpha
    assert not predict_mary_tree(2, 3).deg_equals_alpha
    assert predict_mary_tree(3, 2).deg_equals_alpha


def test_star_triangle_predictions():
    two, three = predict_star_triangle(2), predict_star_triangle(3)
    assert (two.i_at_minus_one, two.deg_h, two.alpha) == (0, 1, 2)
    assert three.i_at_minus_one == -2


def test_antiregular_predictions():
    assert predict_antiregular(4).i_at_minus_one == -1
    d3 = predict_antiregular(3, connected=False)
    assert (d3.i_at_minus_one, d3.deg_h, d3.alpha) == (0, 1, 2)
    assert indpoly(generate(d3.spec)).s == (1, 3, 2)
    assert predict_antiregular(2).i_at_minus_one == -1
    with pytest.raises(ValueError):
        predict_antiregular(2, connected=False)


def test_setup_sum_examples():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        matching = bipartite_setup_sum(4, 4, ((0, 0), (1, 1), (2, 2)))
        single = bipartite_setup_sum(3, 3, ((0, 0),))
    assert (matching.total, matching.predicate) == (3, True)
    assert (single.total, single.predicate) == (1, False)
    cycle = bipartite_setup_sum(4, 5, ((0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (0, 3)))
    assert cycle.terms == (1, 0, 0, 0, 0, -1)
    assert (cycle.total, cycle.predicate, cycle.min_degree_ok) == (0, True, True)


def test_setup_sum_warns_on_low_degree():
    with pytest.warns(UserWarning):
        bipartite_setup_sum(2, 2, ((0, 0),))


def test_matching_numbers():
    mn = matching_numbers(generate(StarTriangle(3)))
    assert mn.mu == mn.nu == 3


def test_mismatch_reporting():
    pred = predict_path(4)
    rep = degree_report(indpoly(generate(predict_path(5).spec)))
    assert pred.mismatches(rep)


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_on_small_grids(suite):
    result = run_suite(suite, Grid(random_count=10, seed=3))
    assert result["all_pass"], [i for i in result["instances"] if not i["passed"]][:3]


def test_suite_output_is_sorted():
    keys = [i["key"] for i in run_suite("paths", Grid(1, 12))["instances"]]
    assert keys[:3] == ["path:1", "path:2", "path:3"] and keys[-1] == "path:12"


@settings(max_examples=30)
@given(st.integers(0, 2**32))
def test_whiskered_bipartite(seed):
    # every vertex on one side carries a leaf and there are no triangles
    rng = random.Random(seed)
    a, b = rng.randint(1, 6), rng.randint(1, 6)
    spec = CameronWalker(a, b, tuple(random_bipartite_connected(rng, a, b, 0.3)),
                         tuple(rng.randint(1, 2) for _ in range(a)), (0,) * b)
    rep = degree_report(indpoly(generate(spec)))
    assert rep.deg_h == rep.alpha
    assert check_instance(spec).passed


@pytest.mark.parametrize("n", range(1, 40))
def test_path_first_derivative(n):
    pred = predict_path(n)
    if pred.first_derivative is not None:
        assert derivative(indpoly(generate(pred.spec)).poly)(-1) == pred.first_derivative


def test_predict_dispatch_rejects_junk():
    with pytest.raises(TypeError):
        predict("path:3")
