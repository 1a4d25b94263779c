"""Smoke tests for the python bindings against small exact fixtures."""

import pytest

import krel

HILBERT_LINE = {"dim": 1, "gram": [["1+0*i"]]}
ANTI_LINE = {"dim": 1, "gram": [["-1+0*i"]]}

IDENTITY_GBR = {
    "kind": "gbr",
    "schemaVersion": 1,
    "payload": {
        "K": HILBERT_LINE,
        "H": HILBERT_LINE,
        "graph": [["1+0*i", "0+0*i", "1+0*i", "0+0*i"], ["0+0*i", "1+0*i", "0+0*i", "1+0*i"]],
    },
}

IDENTITY_RELATION = {
    "kind": "relation",
    "schemaVersion": 1,
    "payload": {
        "from": {"dim": 2, "gram": [["1+0*i", "0+0*i"], ["0+0*i", "1+0*i"]]},
        "to": {"dim": 2, "gram": [["1+0*i", "0+0*i"], ["0+0*i", "1+0*i"]]},
        "graph": [
            ["1+0*i", "0+0*i", "1+0*i", "0+0*i"],
            ["0+0*i", "1+0*i", "0+0*i", "1+0*i"],
        ],
    },
}


def test_inner_product_and_negative_index():
    assert krel.inner_product([["1+0*i"]], ["1+0*i"], ["1+0*i"]) == "1+0*i"
    assert krel.inner_product([["-1+0*i"]], ["1+0*i"], ["1+0*i"]) == "-1+0*i"
    pauli = [["0+0*i", "0-1*i"], ["0+1*i", "0+0*i"]]
    assert krel.inner_product(pauli, ["1+0*i", "0+0*i"], ["0+0*i", "1+0*i"]) == "0+1*i"
    assert krel.negative_index(pauli) == 1
    assert krel.negative_index([["1+0*i"]]) == 0


def test_classify_identity_boundary_relation():
    report = krel.classify(IDENTITY_GBR)
    flags = report["flags"]
    assert flags["ordinaryTriple"]
    assert flags["unitaryBoundary"]
    assert flags["bGeneralized"]
    assert not flags["trivial"]
    assert report["note"] == krel.finite_dim_note()


def test_classify_rejects_green_identity_violation():
    bad = {
        "kind": "gbr",
        "schemaVersion": 1,
        "payload": {**IDENTITY_GBR["payload"], "K": ANTI_LINE},
    }
    with pytest.raises(krel.KrelError):
        krel.classify(bad)


def test_adjoint_round_trip():
    doc = krel.adjoint(IDENTITY_RELATION)
    assert doc["kind"] == "relation"
    again = krel.adjoint(doc)
    assert again["payload"]["graph"] == IDENTITY_RELATION["payload"]["graph"]


def test_weyl_matrix_of_identity_model():
    samples = krel.weyl(IDENTITY_GBR, ["0+1*i", "2-3*i"])
    assert samples[0]["matrix"] == [["0+1*i"]]
    assert samples[1]["matrix"] == [["2-3*i"]]


def test_suite_run_and_determinism():
    first = krel.run_suite("prop3.4", seed=11, trials=10, max_dim=4)
    second = krel.run_suite("prop3.4", seed=11, trials=10, max_dim=4)
    assert first == second
    assert first["status"] == "PASS"
    assert first["failures"] == 0
    assert "prop3.4" in krel.registered_suites()
    assert len(krel.registered_suites()) == 21


def test_golden_example_suite():
    report = krel.run_suite("example5.19", seed=1, trials=1, max_dim=2)
    assert report["status"] == "PASS"
    assert report["trials"] == 1
