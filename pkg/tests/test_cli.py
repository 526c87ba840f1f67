import json
from pathlib import Path

import pytest

from wreath_growth.cli import main

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def run(tmp_path, verb, config, *extra, out="out"):
    out_dir = tmp_path / out
    code = main([verb, "--config", str(config), "--out", str(out_dir), *extra])
    return code, out_dir


def write(tmp_path, text, name="c.toml"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_growth_writes_two_csvs(tmp_path):
    code, out = run(tmp_path, "growth", CONFIGS / "f2x.toml", "--horizon", "9")
    assert code == 0
    g = (out / "g.csv").read_text().splitlines()
    assert any(l.startswith("# config_digest=") for l in g)
    assert "n,g,mode" in g and "9,449,exact" in g
    w = (out / "w.csv").read_text().splitlines()
    assert "n,w,mode" in w and "4,4,exact" in w
    meta = json.loads((out / "growth.json").read_text())["meta"]
    assert set(meta) == {"command", "config_digest", "seed", "mode", "tool_version"}


def test_horizon_zero_is_config_error(tmp_path, capsys):
    code, out = run(tmp_path, "growth", CONFIGS / "f2x.toml", "--horizon", "0")
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "ConfigError" and err["exit_code"] == 2
    assert json.loads((out / "error.json").read_text()) == err


def test_repeat_runs_are_byte_identical(tmp_path):
    for tag in ("a", "b"):
        assert run(tmp_path, "growth", CONFIGS / "f2x.toml", "--horizon", "8", "--seed", "3",
                   out=tag)[0] == 0
    for name in ("g.csv", "w.csv", "growth.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_verify_reference_passes(tmp_path):
    cfg = write(tmp_path, (CONFIGS / "f2x.toml").read_text().replace(
        "assoc_triples = 1000", "assoc_triples = 100").replace(
        "oracle_pairs = 500", "oracle_pairs = 50").replace(
        "shape_n = 12", "shape_n = 6").replace("corollary1_n = 14\nassoc", "corollary1_n = 6\nassoc"))
    code, out = run(tmp_path, "verify", cfg)
    report = json.loads((out / "verify.json").read_text())
    assert code == 0 and report["passed"]
    names = {c["name"] for c in report["checks"]}
    assert {"left_ideal", "two_sided_ideal", "wreath_associativity", "oracle_equivalence",
            "filtration_in_power", "power_shape", "corollary1"} <= names


def test_verify_corrupted_table(tmp_path):
    cfg = write(tmp_path, """
[algebra]
kind = "structure_constants"
names = ["a", "b"]
table = [["b", "a"], ["a", "a"]]
[sequence]
entries = { 1 = "b" }
""")
    code, out = run(tmp_path, "verify", cfg)
    report = json.loads((out / "verify.json").read_text())
    assert code == 1 and not report["passed"]
    wit = report["checks"][0]["witnesses"][0]
    assert len(wit["triple"]) == 3 and set(wit["names"]) <= {"a", "b"}


def test_verify_unsupported_mode(tmp_path, capsys):
    cfg = write(tmp_path, """
[algebra]
kind = "monomial_quotient"
alphabet = ["x", "y"]
forbidden = ["yx"]
[sequence]
positions = { family = "triangular" }
elements = { family = "constant", value = "x" }
horizon = 60
gap_mode = true
""")
    code, _ = run(tmp_path, "verify", cfg, "--mode", "exact")
    assert code == 2
    assert json.loads(capsys.readouterr().err)["error"] == "UnsupportedModeError"


def test_dilute_two_generator_preset(tmp_path):
    code, out = run(tmp_path, "dilute", CONFIGS / "dilute_two_generators.toml")
    assert code == 0
    plan = json.loads((out / "dilution_plan.json").read_text())["plan"]
    n1, n2 = plan["thresholds"]
    assert n1 < n2
    seq = json.loads((out / "sequence.json").read_text())["sequence"]
    assert [e[0] for e in seq["entries"]] == [n1, n2]


def test_dilute_empty_generators(tmp_path):
    cfg = write(tmp_path, '[algebra]\nkind = "polynomial"\nvariables = ["x"]\n'
                          '[dilute]\ngenerators = []\n')
    code, out = run(tmp_path, "dilute", cfg)
    assert code == 0
    assert json.loads((out / "sequence.json").read_text())["sequence"]["entries"] == []


def test_dilute_fit_failure(tmp_path):
    cfg = write(tmp_path, """
[algebra]
kind = "polynomial"
variables = ["x"]
[dilute]
generators = ["x"]
f = { family = "constant", value = 1 }
eps = ["1/2"]
fit_cap = 8
""")
    code, out = run(tmp_path, "dilute", cfg)
    report = json.loads((out / "dilution_plan.json").read_text())
    assert code == 1 and report["failure"] == "fit"
    assert report["fit"][0]["c"] is None


def test_dilute_horizon_too_small(tmp_path, capsys):
    cfg = write(tmp_path, """
[algebra]
kind = "polynomial"
variables = ["x"]
[dilute]
generators = ["x"]
c = [50]
h = { family = "power", d = 2 }
horizon = 20
""")
    code, _ = run(tmp_path, "dilute", cfg)
    assert code == 3
    assert json.loads(capsys.readouterr().err)["error"] == "HorizonTooSmallError"


def test_semigroup_trivial(tmp_path):
    code, out = run(tmp_path, "semigroup", CONFIGS / "semigroup_trivial.toml")
    assert code == 0
    lines = (out / "semigroup.csv").read_text().splitlines()
    assert "n,g,mode,quantity" in lines and "1,4,exact,count" in lines
    assert lines[-1].startswith("8,")


def test_semigroup_free_monoid_without_cap(tmp_path):
    cfg = write(tmp_path, '[semigroup]\nkind = "free_monoid"\nalphabet = ["a"]\n'
                          'sequence = { entries = { 1 = "a" } }\n')
    assert run(tmp_path, "semigroup", cfg)[0] == 2


def test_semigroup_rerun_identical(tmp_path):
    for tag in ("a", "b"):
        run(tmp_path, "semigroup", CONFIGS / "semigroup_monogenic.toml", "--horizon", "6", out=tag)
    for name in ("semigroup.csv", "semigroup.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_report_f2(tmp_path):
    code, out = run(tmp_path, "report", CONFIGS / "f2.toml")
    rep = json.loads((out / "report.json").read_text())
    assert code == 0 and rep["corollary1"]["passed"]
    assert rep["gk_slope"]["window"] == [20, 40]
    assert 1.6 <= rep["gk_slope"]["slope"] <= 2.3


def test_report_window_past_horizon(tmp_path, capsys):
    code, _ = run(tmp_path, "report", CONFIGS / "f2.toml", "--horizon", "30")
    assert code == 3
    assert json.loads(capsys.readouterr().err)["error"] == "LayerRangeError"


def test_unknown_verb_exits_nonzero():
    with pytest.raises(SystemExit) as err:
        main(["bogus"])
    assert err.value.code != 0
