import json
import os
import subprocess
import sys
from itertools import combinations

import pytest

from rigidlab import (
    complex_to_json,
    graph_to_json,
    structure_from_graph,
    structure_to_json,
)
from rigidlab.reports import canonical_dumps

from conftest import complete_graph, cycle_graph, path_graph


def run_cli(*args, env_extra=None, cwd=None):
    env = dict(os.environ)
    env.pop("RIGIDLAB_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "rigidlab", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


def write_graph(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(canonical_dumps(graph_to_json(g)))
    return str(path)


def write_structure(tmp_path, name, s):
    path = tmp_path / name
    path.write_text(canonical_dumps(structure_to_json(s)))
    return str(path)


# --- gen ----------------------------------------------------------------------


def test_gen_cyclic_graph():
    out = run_cli("gen", "cyclic", "--n", "6", "--d", "2")
    assert out.returncode == 0
    assert json.loads(out.stdout) == graph_to_json(cycle_graph(6))


def test_gen_cyclic_complex_and_output_file(tmp_path):
    target = tmp_path / "c.json"
    out = run_cli("gen", "cyclic", "--n", "5", "--d", "3", "--emit", "complex", "-o", str(target))
    assert out.returncode == 0
    payload = json.loads(target.read_text())
    assert payload["facets"] == [[0, 1, 2], [0, 1, 4], [0, 3, 4], [1, 2, 3], [2, 3, 4]]


def test_gen_union(tmp_path):
    a = write_graph(tmp_path, "a.json", complete_graph(3))
    out = run_cli("gen", "union", a, a)
    assert out.returncode == 0
    assert json.loads(out.stdout)["order"] == 6


def test_gen_rejects_bad_parameters():
    out = run_cli("gen", "cyclic", "--n", "4", "--d", "4")
    assert out.returncode == 2
    assert "window" in out.stderr


# --- rigidity -------------------------------------------------------------------


def test_rigidity_pebble_on_four_cycle(tmp_path):
    f = write_graph(tmp_path, "c4.json", cycle_graph(4))
    out = run_cli("rigidity", f, "--dim", "2", "--property", "local", "--method", "pebble")
    assert out.returncode == 1
    assert json.loads(out.stdout)["value"] is False


def test_rigidity_pebble_on_triangle(tmp_path):
    f = write_graph(tmp_path, "k3.json", complete_graph(3))
    out = run_cli("rigidity", f, "--dim", "2", "--property", "local", "--method", "pebble")
    assert out.returncode == 0


def test_rigidity_connectivity_method(tmp_path):
    f = write_graph(tmp_path, "p3.json", path_graph(3))
    local = run_cli("rigidity", f, "--dim", "1", "--property", "local", "--method", "connectivity")
    glob = run_cli("rigidity", f, "--dim", "1", "--property", "global", "--method", "connectivity")
    assert local.returncode == 0 and glob.returncode == 1


def test_rigidity_numeric_records_seeds(tmp_path):
    f = write_graph(tmp_path, "k4.json", complete_graph(4))
    out = run_cli(
        "rigidity", f, "--dim", "2", "--property", "global", "--method", "numeric", "--seed", "9"
    )
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["verdict"]["seed"] == 9
    assert payload["verdict"]["verdict"] == "rigid"
    rerun = run_cli(
        "rigidity", f, "--dim", "2", "--property", "global", "--method", "numeric", "--seed", "9"
    )
    assert rerun.stdout == out.stdout  # byte-identical given the seed


def test_rigidity_cjt_method(tmp_path):
    # boundary of the 4-simplex: a genuine 3-circuit whose graph is K5
    facets = list(combinations(range(5), 4))
    payload = {"ground_size": 5, "facets": [list(f) for f in facets]}
    f = tmp_path / "simplex.json"
    f.write_text(json.dumps(payload))
    out = run_cli("rigidity", str(f), "--dim", "4", "--property", "global", "--method", "cjt")
    assert out.returncode == 0
    assert json.loads(out.stdout)["value"] is True

    bad = run_cli("rigidity", str(f), "--dim", "4", "--property", "local", "--method", "cjt")
    assert bad.returncode == 2
    assert "global" in bad.stderr


def test_rigidity_cjt_hypothesis_failure_is_a_usage_error(tmp_path):
    from rigidlab import build_cyclic_complex

    f = tmp_path / "c10_4.json"
    f.write_text(json.dumps(complex_to_json(build_cyclic_complex(10, 4))))
    out = run_cli("rigidity", str(f), "--dim", "4", "--property", "global", "--method", "cjt")
    assert out.returncode == 2
    assert "circuit" in out.stderr


def test_rigidity_method_dim_mismatch(tmp_path):
    f = write_graph(tmp_path, "k3.json", complete_graph(3))
    out = run_cli("rigidity", f, "--dim", "2", "--property", "local", "--method", "connectivity")
    assert out.returncode == 2
    assert "dim" in out.stderr


def test_method_auto_agrees_with_explicit_methods(tmp_path):
    graphs = {
        "c6": cycle_graph(6),
        "p4": path_graph(4),
        "k4": complete_graph(4),
    }
    for name, g in graphs.items():
        f = write_graph(tmp_path, f"{name}.json", g)
        for dim, prop, explicit in (
            ("1", "local", "connectivity"),
            ("1", "global", "connectivity"),
            ("2", "local", "pebble"),
        ):
            auto = run_cli("rigidity", f, "--dim", dim, "--property", prop)
            spec = run_cli("rigidity", f, "--dim", dim, "--property", prop, "--method", explicit)
            assert auto.returncode == spec.returncode, (name, dim, prop)


# --- hanf -----------------------------------------------------------------------


def test_hanf_pair(tmp_path):
    from rigidlab import build_counterexample

    g1, g2 = build_counterexample(2, 1)
    f1 = write_graph(tmp_path, "g1.json", g1)
    f2 = write_graph(tmp_path, "g2.json", g2)
    out = run_cli("hanf", f1, f2, "--r", "1")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["equivalent"] is True
    assert sorted(payload["witness"]) == list(range(12))


def test_hanf_negative(tmp_path):
    f1 = write_graph(tmp_path, "c6.json", cycle_graph(6))
    f2 = write_graph(tmp_path, "p6.json", path_graph(6))
    out = run_cli("hanf", f1, f2, "--r", "1")
    assert out.returncode == 1
    assert json.loads(out.stdout)["witness"] is None


# --- fo eval ---------------------------------------------------------------------


AXIOM_TEXT = "forall v0 forall v1 (v0 ~ v1 -> v1 ~ v0)\n"


def test_fo_eval_axiom(tmp_path):
    formula = tmp_path / "axiom.fo"
    formula.write_text(AXIOM_TEXT)
    sym = write_structure(tmp_path, "sym.json", structure_from_graph(cycle_graph(5)))
    asym = tmp_path / "asym.json"
    asym.write_text(json.dumps({"universe": 2, "relations": {"~": [[0, 1]]}}))

    ok = run_cli("fo", "eval", "--formula", str(formula), "--structure", sym)
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["value"] is True

    bad = run_cli("fo", "eval", "--formula", str(formula), "--structure", str(asym))
    assert bad.returncode == 1
    assert json.loads(bad.stdout)["value"] is False


def test_fo_eval_rejects_open_formulas(tmp_path):
    formula = tmp_path / "open.fo"
    formula.write_text("v0 ~ v1")
    s = write_structure(tmp_path, "s.json", structure_from_graph(cycle_graph(3)))
    out = run_cli("fo", "eval", "--formula", str(formula), "--structure", s)
    assert out.returncode == 2
    assert "free variables" in out.stderr and "v0" in out.stderr


def test_fo_eval_reports_syntax_errors(tmp_path):
    formula = tmp_path / "broken.fo"
    formula.write_text("forall v0 (v0 ~ v1")
    s = write_structure(tmp_path, "s.json", structure_from_graph(cycle_graph(3)))
    out = run_cli("fo", "eval", "--formula", str(formula), "--structure", s)
    assert out.returncode == 2
    assert "parenthes" in out.stderr


def test_missing_files_are_usage_errors(tmp_path):
    out = run_cli("hanf", str(tmp_path / "a.json"), str(tmp_path / "b.json"), "--r", "1")
    assert out.returncode == 2
    assert "cannot read" in out.stderr


def test_malformed_json_names_the_field(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"order": 3, "edges": [[0, 9]]}))
    out = run_cli("rigidity", str(f), "--dim", "1", "--property", "local")
    assert out.returncode == 2
    assert "edges" in out.stderr


# --- verify ----------------------------------------------------------------------


def test_verify_theorem_dimension_one():
    out = run_cli("verify", "theorem", "--d", "1", "--r", "1", "--seed", "7")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["passed"] is True
    assert payload["seeds"]["master"] == 7
    rerun = run_cli("verify", "theorem", "--d", "1", "--r", "1", "--seed", "7")
    assert rerun.stdout == out.stdout


def test_verify_theorem_env_seed():
    out = run_cli(
        "verify", "theorem", "--d", "1", "--r", "1", env_extra={"RIGIDLAB_SEED": "123"}
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["seeds"]["master"] == 123
    again = run_cli(
        "verify", "theorem", "--d", "1", "--r", "1", env_extra={"RIGIDLAB_SEED": "123"}
    )
    assert again.stdout == out.stdout


def test_verify_circuit_exit_codes():
    assert run_cli("verify", "circuit", "--d", "2", "--n", "6").returncode == 0
    out = run_cli("verify", "circuit", "--d", "3", "--n", "8")
    assert out.returncode == 1
    assert json.loads(out.stdout)["claims"]["every_codim1_face_in_exactly_two_facets"]["computed"] is False


def test_verify_connectivity_d2_flags_the_conflict():
    out = run_cli("verify", "connectivity", "--d", "2", "--n", "6")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["notes"]


def test_verify_neighborhoods():
    out = run_cli("verify", "neighborhoods", "--d", "2", "--r", "1", "--n", "6")
    assert out.returncode == 0
    claims = json.loads(out.stdout)["claims"]
    assert claims["ball_isomorphic_to_path_window_graph_m3"]["computed"] is True
    assert claims["ball_isomorphic_to_path_window_graph_m5"]["computed"] is False


def test_text_mode():
    out = run_cli("verify", "circuit", "--d", "2", "--n", "6", "--text")
    assert out.returncode == 0
    assert "passed = True" in out.stdout


def test_bad_arguments_exit_2():
    assert run_cli("rigidity").returncode == 2
    assert run_cli("nonsense").returncode == 2
    assert run_cli("verify", "theorem", "--d", "1", "--r", "1", env_extra={"RIGIDLAB_SEED": "x"}).returncode == 2
