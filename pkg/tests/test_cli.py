"""CLI verbs, exit codes, and output determinism."""

import io

from rbdesign import gamma_design, read_design, validate, write_design
from rbdesign.cli import run


def invoke(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_generate_matches_library():
    code, out = invoke("generate", "--family", "gamma", "--variant", "RC", "--r", "8")
    assert code == 0
    assert out == write_design(gamma_design(8, "RC"))
    assert validate(read_design(out)) == []


def test_generate_to_file(tmp_path):
    target = tmp_path / "d.txt"
    code, out = invoke("generate", "--family", "delta", "--variant", "C", "--r", "4",
                       "--out", str(target))
    assert code == 0 and out == ""
    assert validate(read_design(target.read_text())) == []


def test_evaluate_reference_design():
    code, out = invoke("evaluate", "theta-8")
    assert code == 0
    assert "A-exact" in out and "7007/8196" in out
    assert "0.8549" in out
    assert "factor x16" in out and "13/16" in out
    assert "factor x10" in out and "7/8" in out
    assert "factor x9" in out and "11/12" in out


def test_evaluate_kv_format_and_precision():
    code, out = invoke("evaluate", "gamma-5", "--format", "kv", "--precision", "7")
    assert code == 0
    assert "A-decimal: 0.8382815" in out


def test_evaluate_file_argument(tmp_path):
    path = tmp_path / "lattice.txt"
    path.write_text(write_design(gamma_design(2, "RC")))
    code, out = invoke("evaluate", str(path))
    assert code == 0
    assert "7/9" in out


def test_evaluate_unknown_name_exit_parse():
    code, _ = invoke("evaluate", "no-such-design")
    assert code == 2


def test_evaluate_malformed_file_exit_parse(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 2 zebra\n")
    code, _ = invoke("evaluate", str(path))
    assert code == 2


def test_evaluate_disconnected_exit(tmp_path):
    path = tmp_path / "disc.txt"
    path.write_text(write_design(gamma_design(1)))
    code, out = invoke("evaluate", str(path))
    assert code == 3
    assert "connected" in out


def test_robustness_five_replicates():
    code, out = invoke("robustness", "gamma-rc-5")
    assert code == 0
    assert "worst" in out and "0.8341" in out
    assert "average" in out and "0.8364" in out


def test_robustness_csv_format():
    code, out = invoke("robustness", "gamma-rc-4", "--format", "csv")
    assert code == 0
    header, values = out.strip().splitlines()
    assert header.split(",")[0] == "design"
    assert len(header.split(",")) == len(values.split(","))
    assert "0.8211" in values  # the published average


def test_robustness_shape_error_exit():
    code, _ = invoke("robustness", "gamma-rc-2")
    assert code == 4


def test_isomorphic_exit_codes():
    code, out = invoke("isomorphic", "gamma-r-7", "gamma-c-7")
    assert code == 0 and "isomorphic" in out
    code, out = invoke("isomorphic", "gamma-r-4", "gamma-c-4")
    assert code == 1 and "not isomorphic" in out
    code, out = invoke("isomorphic", "gamma-rc-2", "gamma-rc-3")
    assert code == 1 and "shapes differ" in out


def test_autorder():
    code, out = invoke("autorder", "theta-8")
    assert code == 0 and out.strip() == "1"
    code, out = invoke("autorder", "delta-rc-8")
    assert code == 0 and out.strip() == "144"


def test_sylvester_check_with_witness():
    code, out = invoke("sylvester-check", "gamma-rc-8", "--witness")
    assert code == 0
    assert "Sylvester design" in out
    witness_line = next(line for line in out.splitlines() if line.startswith("witness:"))
    perm = [int(x) for x in witness_line.split(":")[1].split()]
    assert sorted(perm) == list(range(1, 37))


def test_sylvester_check_wrong_shape_exit():
    code, _ = invoke("sylvester-check", "gamma-rc-7")
    assert code == 4


def test_dual_of_semi_latin_design_is_grouped():
    code, out = invoke("dual", "delta-6")
    assert code == 0
    assert "# semi-latin: yes" in out
    assert "# resolvable: yes" in out
    body = "\n".join(line for line in out.splitlines() if not line.startswith("#"))
    parsed = read_design(body + "\n")
    assert validate(parsed) == []


def test_dual_flat_output_when_not_resolvable():
    code, out = invoke("dual", "theta-4")
    assert code == 0
    assert "# resolvable: no" in out
    blocks = [line for line in out.splitlines() if line and not line.startswith("#")]
    assert len(blocks) == 36


def test_catalog_listing():
    code, out = invoke("catalog")
    assert code == 0
    lines = out.strip().splitlines()
    assert any(line.startswith("theta-8") for line in lines)
    assert any(line.startswith("gamma-rc-8") for line in lines)
    assert len(lines) > 40


def test_export_sylvester_edges():
    code, out = invoke("export", "sylvester-edges")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 90
    assert all(len(line.split()) == 2 for line in lines)


def test_export_concurrence():
    code, out = invoke("export", "concurrence", "gamma-rc-2")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert len(rows) == 36 and all(len(r) == 36 for r in rows)
    assert rows[0][0] == "2"


def test_output_determinism():
    first = invoke("evaluate", "delta-rc-4")
    second = invoke("evaluate", "delta-rc-4")
    assert first == second


def test_search_verb_deterministic_and_seed_echoed():
    args = ("search", "--r", "3", "--restarts", "1", "--seed", "5",
            "--moves", "30", "--t0", "0.1", "--tmin", "0.02", "--format", "kv")
    code1, out1 = invoke(*args)
    code2, out2 = invoke(*args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "seed: 5" in out1


def test_search_budget_accepts_suffixed_seconds():
    code, out = invoke("search", "--r", "3", "--restarts", "1", "--seed", "2",
                       "--moves", "20", "--t0", "0.05", "--tmin", "0.02",
                       "--budget", "30s", "--format", "kv")
    assert code == 0
    assert "budget-exhausted: no" in out


def test_search_verb_writes_design_and_trace(tmp_path):
    design_file = tmp_path / "best.txt"
    trace_file = tmp_path / "trace.csv"
    code, out = invoke("search", "--r", "3", "--restarts", "1", "--seed", "1",
                       "--moves", "30", "--t0", "0.1", "--tmin", "0.02",
                       "--out", str(design_file), "--trace", str(trace_file))
    assert code == 0
    parsed = read_design(design_file.read_text())
    assert validate(parsed) == []
    assert trace_file.read_text().startswith("restart,stage,temperature")
