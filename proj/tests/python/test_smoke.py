"""Smoke tests for the python bindings: a few exact values frozen from
the C++ test suite, exercised through every exposed entry point."""

import os

import pytest

import fctools as fc

FIXTURES = os.environ.get("FC_FIXTURES", "fixtures")


def test_system_basics():
    sys = fc.System("Btilde", 5)
    assert sys.family == "Btilde"
    assert sys.rank == 5
    assert sys.tokens == ["sb1", "s1", "s2", "s3", "t"]
    assert sys.is_reduced("s1 s2 s1")
    assert not sys.is_reduced("s1 s1")
    assert sys.canonical("s2 s1 s1 s2") == "-"
    assert not sys.is_fully_commutative("s1 s2 s1")
    assert sys.length("s3 t s3 t") == 4
    assert sys.affine_length("s3 t s3 t") == 2


def test_finite_fc_count():
    sys = fc.System("D", 4)
    ball = sys.ball(12, fc_only=True)
    assert len(ball) == 48
    assert "-" in ball


def test_classify():
    sys = fc.System("Btilde", 5)
    info = sys.classify("s1 s2 s3 t s3")
    assert info["class"] == "affine1"
    assert info["length"] == 5
    assert info["affine_length"] == 1
    with pytest.raises(ValueError):
        sys.classify("s1 s2 s1")


def test_reduce_braid():
    sys = fc.System("Btilde", 5)
    comb = sys.reduce("s3 t s3 t")
    assert len(comb) == 7
    assert comb["s3 t s3"] == {0: "-1"}
    assert comb["-"] == {0: "-1"}


def test_tower_image():
    assert fc.tower_image("Ln", 3, "t") == "s3 t s3"
    assert fc.tower_image("Gn", 3, "sb2") == "s3 s2 sb3 s2 s3"
    assert fc.tower_image("beta", 4, "sb1") == "s0 s1 s0"
    with pytest.raises(ValueError):
        fc.tower_image("Xn", 3, "t")


def test_injection_image():
    # The affine-length-one element t maps through I to s4 t s4 one
    # rank up, and I = J outside the second type.
    assert fc.injection_image("I", "Btilde", 4, "t") == "s4 t s4"
    assert fc.injection_image("J", "Btilde", 4, "t") == "s4 t s4"


def test_algebra_images():
    h = fc.hecke_image("Qn", 3, "t")
    assert h["s3 t s3"] == {-1: "1"}
    assert h["s3 t"] == {-1: "1", 0: "-1"}

    t = fc.tl_image("Pn", 4, "sb3")
    assert len(t) == 13
    assert t["s4 sb4"] == {-2: "1", -1: "1"}

    with pytest.raises(ValueError):
        fc.tl_image("Rn", 3, "t")


def test_suites():
    assert "appendixA" in fc.suite_names()
    rep = fc.run_suite("appendixA", fixtures_dir=FIXTURES)
    assert rep["ok"]
    assert rep["checked"] == 49
    with pytest.raises(ValueError):
        fc.run_suite("nope", fixtures_dir=FIXTURES)
