import random

import pytest
from sklearn.base import clone

from linerec.estimators import LabeledReconstructor, UnlabeledReconstructor
from linerec.graphs import generate_graph, is_isomorphic, measure, sample_generic_configuration
from linerec.layout import normalize_congruence
from linerec.pipeline import Status


def instance(seed=1, bits=36):
    g = generate_graph("complete", 4)
    rng = random.Random(seed)
    p = sample_generic_configuration(g, bits, rng)
    return g, p, measure(g, p)


def test_unlabeled_fit():
    g, p, l = instance()
    est = UnlabeledReconstructor().fit(l)
    assert est.status_ is Status.EXACT_SUCCESS
    assert is_isomorphic(est.graph_, g)
    assert est.positions_ == normalize_congruence(p)
    assert est.n_ == 4 and est.m_ == 6
    assert est.score(l) == 1.0


def test_labeled_fit():
    g, p, l = instance(seed=2)
    est = LabeledReconstructor(graph=g).fit(l)
    assert est.status_ is Status.EXACT_SUCCESS
    assert est.positions_ == normalize_congruence(p)
    per = LabeledReconstructor(graph=g, per_cycle=True).fit(l)
    assert per.positions_ == est.positions_


def test_kbasis_method():
    g = generate_graph("complete", 6)
    rng = random.Random(3)
    p = sample_generic_configuration(g, 16, rng)
    est = UnlabeledReconstructor(method="kbasis", k=3).fit(measure(g, p))
    assert est.status_ is Status.EXACT_SUCCESS
    assert is_isomorphic(est.graph_, g)


def test_get_params_and_clone():
    est = UnlabeledReconstructor(max_vertices=12)
    params = est.get_params()
    assert params["max_vertices"] == 12
    assert params["method"] == "lll"
    cloned = clone(est)
    assert cloned.get_params() == params
    est.set_params(method="kbasis")
    assert est.get_params()["method"] == "kbasis"


def test_validation_rejects_floats():
    with pytest.raises(TypeError):
        UnlabeledReconstructor().fit([4.0, 11.0, 7.0])
    with pytest.raises(ValueError):
        UnlabeledReconstructor().fit([])
    with pytest.raises(TypeError):
        LabeledReconstructor(graph="nope").fit([1, 2, 3])


def test_unknown_method():
    with pytest.raises(ValueError):
        UnlabeledReconstructor(method="magic").fit([4, 11, 7])


def test_unfitted_has_no_attributes():
    est = UnlabeledReconstructor()
    assert not hasattr(est, "graph_")


def test_big_integers_survive_validation():
    # arbitrary-precision inputs must not be coerced through floats
    g, p, l = instance(seed=4, bits=225)
    est = UnlabeledReconstructor().fit(l)
    assert est.status_ is Status.EXACT_SUCCESS
    assert max(est.positions_) > 2**53
