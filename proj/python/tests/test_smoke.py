"""Smoke tests for the pybiframe extension module."""

import json
import math
import os
import subprocess

import numpy as np
import pytest

import pybiframe as bf


def test_counting_and_partition_spaces():
    mu = bf.counting_space(3)
    assert mu.size == 3
    assert mu.total_weight == 3.0
    assert mu.weights == [1.0, 1.0, 1.0]

    part = bf.partition_space([2.0, 1.5, 1.2])
    assert part.total_weight == pytest.approx(4.7, rel=1e-14)

    with pytest.raises(ValueError):
        bf.partition_space([0.0])


def test_gauss_legendre_tight_integral():
    mu = bf.gauss_legendre(2, 0.0, 1.0)
    samples = [6.0 * w * (1.0 - w * w) for w in mu.nodes]
    assert bf.integrate(mu, samples) == pytest.approx(1.5, abs=1e-14)


def _skew_pair():
    mu = bf.counting_space(3)
    F = bf.family(mu, "real", np.array([[2.0, 1, 1], [-1, 3, -1], [-1, 1, 4]]))
    G = bf.family(mu, "real", np.eye(3))
    return bf.BiframePair(F, G)


def test_skew_pair_bounds_and_inverse():
    pair = _skew_pair()
    op = bf.assemble(pair)
    expected = np.array([[2.0, 1, 1], [-1, 3, -1], [-1, 1, 4]])
    assert np.max(np.abs(op.matrix - expected)) == 0.0
    assert op.lower == pytest.approx(2.0, abs=1e-13)
    assert op.upper == pytest.approx(4.0, abs=1e-13)
    assert op.hermitian_residual > 0

    inv = bf.invert(op.matrix)
    known = np.array([[13.0, -3, -4], [5, 9, 1], [2, -3, 7]]) / 33.0
    assert np.max(np.abs(inv - known)) < 1e-12

    report = bf.classify(pair)
    assert report.is_biframe
    assert report.tightness_gap == pytest.approx(2.0, abs=1e-13)


def test_reconstruction_and_dual():
    pair = _skew_pair()
    f = np.array([0.3, -1.2, 2.0], dtype=complex)
    left, right = bf.reconstruct(pair, f)
    assert np.linalg.norm(left - f) < 1e-12
    assert np.linalg.norm(right - f) < 1e-12

    dual = bf.canonical_dual(pair, side="right")
    assert bf.duality_residual(dual) < 1e-12


def test_multiplier_norm_bound_and_certificates():
    mu = bf.counting_space(3)
    F = bf.family(mu, "real", np.eye(3))
    sym = bf.symbol(mu, [2.0, 3.0, 4.0])
    mult = bf.build_multiplier(sym, F, F)
    assert mult.actual_norm == pytest.approx(4.0, abs=1e-13)
    assert mult.norm_bound == pytest.approx(4.0, abs=1e-12)

    cert = bf.lower_bound_certificate(mult, F, F)
    assert cert.holds

    pert = bf.perturbation_certificate(mult, F, F, 0.9, 0.0)
    assert not pert.hypothesis_ok  # ||I - M|| = 3 is far beyond 0.9


def test_complex_support():
    mu = bf.counting_space(2)
    vecs = np.array([[1.0, 1j], [1.0, -1j]]) / math.sqrt(2.0)
    F = bf.family(mu, "complex", vecs)
    report = bf.classify(bf.BiframePair(F, F))
    assert report.lower == pytest.approx(1.0, abs=1e-12)
    assert report.upper == pytest.approx(1.0, abs=1e-12)


def test_tensor_factorization():
    p1 = bf.fixture_repeated_basis(8)
    p2 = bf.fixture_shifted_parseval(4)
    rep = bf.classify(bf.tensor_pair(p1, p2).pair)
    assert rep.lower == pytest.approx(2.0, abs=1e-10)
    assert rep.upper == pytest.approx(6.0, abs=1e-10)
    assert bf.tensor_operator_check(p1, p2) < 1e-12

    verdict = bf.tensor_sandwich_check(p1, p2)
    assert verdict.hypothesis_met and verdict.holds


def test_kron_norm_multiplicativity():
    rng = np.random.default_rng(7)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    assert bf.op_norm(bf.kron(a, b)) == pytest.approx(bf.op_norm(a) * bf.op_norm(b), abs=1e-10)


def test_document_roundtrip(tmp_path):
    pair = _skew_pair()
    path = tmp_path / "skew.json"
    bf.save_document(str(path), pair, name="skew demo")
    loaded, sym, name = bf.load_document(str(path))
    assert sym is None
    assert name == "skew demo"
    assert np.max(np.abs(bf.assemble(loaded).matrix - bf.assemble(pair).matrix)) == 0.0


def test_verify_corpus_quick():
    results = bf.verify(instances=10)
    assert all(r.passed for r in results)
    ids = {r.id for r in results}
    assert {"1", "2", "3", "4a", "5a", "6a", "6g"} <= ids


@pytest.mark.skipif("BIFRAME_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_verify_and_bounds(tmp_path):
    cli = os.environ["BIFRAME_CLI"]
    out = subprocess.run([cli, "verify-paper", "--json"], capture_output=True, text=True)
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["all_pass"] is True

    doc = tmp_path / "skew.json"
    bf.save_document(str(doc), _skew_pair())
    # Global flags are accepted both before and after the subcommand.
    for argv in ([cli, "--json", "bounds", str(doc)], [cli, "bounds", str(doc), "--json"]):
        bounds = subprocess.run(argv, capture_output=True, text=True)
        assert bounds.returncode == 0
        payload = json.loads(bounds.stdout)
        assert payload["result"]["classify"]["lower"] == pytest.approx(2.0, abs=1e-12)
        assert payload["result"]["classify"]["upper"] == pytest.approx(4.0, abs=1e-12)
        assert payload["result"]["classify"]["hermitian_residual"] > 0

    missing = subprocess.run([cli, "bounds", str(tmp_path / "missing.json")],
                             capture_output=True, text=True)
    assert missing.returncode == 1
    assert "missing.json" in missing.stderr

    usage = subprocess.run([cli, "no-such-command"], capture_output=True, text=True)
    assert usage.returncode == 2


@pytest.mark.skipif("BIFRAME_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_reports_match_schema(tmp_path):
    jsonschema = pytest.importorskip("jsonschema")
    here = os.path.dirname(os.path.abspath(__file__))
    schema_path = os.path.join(here, "..", "..", "docs", "report.schema.json")
    with open(schema_path) as fh:
        schema = json.load(fh)

    cli = os.environ["BIFRAME_CLI"]
    doc = tmp_path / "skew.json"
    bf.save_document(str(doc), _skew_pair())
    for args in (["bounds", str(doc)], ["reconstruct", str(doc)],
                 ["dual", str(doc)], ["multiplier", str(doc)],
                 ["tensor", str(doc), str(doc), "--check-factorization", "--check-sandwich"],
                 ["verify-paper"]):
        out = subprocess.run([cli, "--json", *args], capture_output=True, text=True)
        assert out.returncode == 0, out.stderr
        jsonschema.validate(json.loads(out.stdout), schema)


@pytest.mark.skipif("BIFRAME_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_deterministic_reports_are_byte_identical():
    cli = os.environ["BIFRAME_CLI"]
    args = [cli, "verify-paper", "--json", "--deterministic", "--seed", "11"]
    first = subprocess.run(args, capture_output=True)
    second = subprocess.run(args, capture_output=True)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout
