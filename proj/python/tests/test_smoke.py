import json
import math
import os
import pathlib
import subprocess

import pytest

import annulus_splines as aspl

SCHEMA = pathlib.Path(__file__).resolve().parents[2] / "docs" / "report.schema.json"


def test_torsion_constant_d4_is_exact():
    rep = aspl.torsion_constant(1.0, 3.0, 4)
    assert rep["c_value"] == pytest.approx(0.5, rel=1e-14)
    assert rep["H_value"] == 1.0


def test_torsion_function_peaks_at_the_critical_radius():
    rep = aspl.torsion_constant(1.0, 2.0, 3)
    r_star = 2.0 * math.sqrt(rep["u_critical"])
    assert aspl.torsion_function(r_star, 1.0, 2.0, 3) == pytest.approx(rep["c_value"], rel=1e-12)
    assert rep["lower_bound"] <= rep["c_value"] <= rep["upper_bound"]


def test_shape_report():
    assert aspl.verify_hd_shape(3)["shape"] == "decreasing"
    assert aspl.verify_hd_shape(4)["shape"] == "constant"
    assert aspl.verify_hd_shape(5)["value_at_one"] == pytest.approx(1.25)


def test_interpolation_reproduces_harmonic_field():
    s = aspl.interpolate("x1", [1.0, 1.5, 2.0], d=3)
    assert s.order == 2
    assert s.truncation == 8
    assert s.radii == [1.0, 1.5, 2.0]
    assert s([0.0, 1.2, 0.5]) == pytest.approx(0.0, abs=1e-12)
    assert s([1.2, 0.3, 0.4]) == pytest.approx(1.2, rel=1e-12)
    assert aspl.sup_norm_error("x1", s) < 1e-9


def test_biharmonic_certificate():
    cert = aspl.bound_certificate("r4", [1.0, 1.5, 2.0], d=3, bound="biharmonic_l2")
    assert cert["passed"]
    assert cert["ratio"] < 1.01


def test_convergence_rates():
    rows = aspl.convergence_study("r2", [1.0, 2.0], d=2, levels=3)
    assert rows[0]["rate"] is None
    assert rows[-1]["rate"] == pytest.approx(2.0, abs=0.05)


def test_orthogonality_and_lk():
    rep = aspl.orthogonality_check("r4", [1.0, 1.5, 2.0], d=2)
    assert rep["max_residual"] < 1e-8
    assert aspl.lk_consistency_check("r4", 0, 1, [1.2, 1.5], 1.0, 2.0, d=3) < 1e-5


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        aspl.interpolate("r2", [2.0, 1.0])
    with pytest.raises(aspl.ValidationError):
        aspl.interpolate("nope", [1.0, 2.0])
    with pytest.raises(ValueError):
        aspl.torsion_function(5.0, 1.0, 2.0, 3)
    with pytest.raises(ValueError):
        aspl.convergence_study("r2", [1.0, 2.0], levels=1)


CLI = os.environ.get("ANNULUS_CLI")


@pytest.mark.skipif(not CLI, reason="ANNULUS_CLI not set")
@pytest.mark.parametrize(
    "args",
    [
        ["torsion", "--dim", "3", "--radii", "1,1.5,2"],
        ["interpolate", "--field", "r4", "--order", "4", "--radii", "1,1.5,2"],
        ["interpolate", "--field", "solid2", "--dim", "2"],
        ["convergence", "--field", "r2", "--levels", "3"],
    ],
)
def test_cli_json_matches_schema(args):
    jsonschema = pytest.importorskip("jsonschema")
    out = subprocess.run([CLI, *args, "--format", "json"], capture_output=True, text=True, check=True)
    jsonschema.validate(json.loads(out.stdout), json.loads(SCHEMA.read_text()))


@pytest.mark.skipif(not CLI, reason="ANNULUS_CLI not set")
def test_cli_exit_codes():
    assert subprocess.run([CLI, "torsion", "--radii", "2,1"], capture_output=True).returncode == 2
    failing = [CLI, "interpolate", "--field", "r2x1", "--truncation", "0"]
    assert subprocess.run(failing, capture_output=True).returncode == 3
