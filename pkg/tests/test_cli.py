import json

import pytest

from greedycover.cli import main

from conftest import IDENTITY3, THREE_BY_SIX


def run(argv):
    return main(argv)


def test_gen_writes_deterministic_file(tmp_path, capsys):
    out1 = tmp_path / "a.txt"
    out2 = tmp_path / "b.txt"
    argv = ["gen", "--m", "4", "--n", "8", "--gamma", "0.25",
            "--model", "column-regular", "--seed", "7"]
    assert run(argv + ["--out", str(out1)]) == 0
    assert run(argv + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    summary = capsys.readouterr().out
    assert "c_effective=1" in summary and "gamma_effective=0.25" in summary
    # column-regular with c = 1: every column has exactly one 1
    body = out1.read_text().splitlines()[1:]
    assert all(sum(int(row[j]) for row in body) == 1 for j in range(8))


def test_gen_rejects_bad_gamma(tmp_path, capsys):
    with pytest.raises(SystemExit) as ei:
        run(["gen", "--m", "2", "--n", "2", "--gamma", "1.5",
             "--model", "column-regular", "--seed", "0",
             "--out", str(tmp_path / "x.txt")])
    assert ei.value.code == 2
    assert "--gamma" in capsys.readouterr().err


def test_gen_requires_p_for_bernoulli(tmp_path, capsys):
    with pytest.raises(SystemExit) as ei:
        run(["gen", "--m", "2", "--n", "2", "--gamma", "0.5",
             "--model", "bernoulli-repair", "--seed", "0",
             "--out", str(tmp_path / "x.txt")])
    assert ei.value.code == 2
    assert "--p" in capsys.readouterr().err


def test_solve_identity(tmp_path, capsys):
    src = tmp_path / "id.txt"
    src.write_text(IDENTITY3)
    out = tmp_path / "id.json"
    assert run(["solve", "--in", str(src), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["greedy_rows"] == [0, 1, 2]
    assert doc["uncovered_counts"] == [3, 2, 1, 0]
    assert doc["total_size"] == 3
    assert "total_size=3" in capsys.readouterr().out


def test_solve_k_max_patch(tmp_path):
    src = tmp_path / "g.txt"
    src.write_text(THREE_BY_SIX)
    out = tmp_path / "g.json"
    assert run(["solve", "--in", str(src), "--k-max", "1", "--patch",
                "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["greedy_rows"] == [0]
    assert doc["patch_rows"] == [1, 2]
    assert doc["total_size"] == 3


def test_solve_k_star_on_unit_density(tmp_path):
    src = tmp_path / "ones.txt"
    src.write_text("2 3\n111\n111\n")
    out = tmp_path / "ones.json"
    assert run(["solve", "--in", str(src), "--k-star", "improved",
                "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["gamma_effective"] == 1.0
    assert doc["greedy_rows"] == [0]
    assert doc["total_size"] == 1


def test_solve_missing_file(tmp_path, capsys):
    assert run(["solve", "--in", str(tmp_path / "nope.txt"),
                "--out", str(tmp_path / "o.json")]) == 1
    assert capsys.readouterr().err


def test_solve_bad_instance(tmp_path, capsys):
    src = tmp_path / "bad.txt"
    src.write_text("2 2\n10\n00\n")
    assert run(["solve", "--in", str(src), "--out", str(tmp_path / "o.json")]) == 1
    assert "column 2" in capsys.readouterr().err


def test_solve_k_flags_exclusive(tmp_path, capsys):
    with pytest.raises(SystemExit) as ei:
        run(["solve", "--in", "x", "--k-max", "1", "--k-star", "improved",
             "--out", "y"])
    assert ei.value.code == 2


def test_bounds_golden(capsys):
    assert run(["bounds", "--gamma", "0.25", "--m", "4", "--n", "100"]) == 0
    assert capsys.readouterr().out == (
        "k,classical,improved,ratio\n"
        "0,1,1,1\n"
        "1,0.75,0.75,1\n"
        "2,0.5625,0.5,0.8888888888888888\n"
        "3,0.421875,0.25,0.5925925925925926\n"
        "4,0.31640625,0,0\n"
        "# cover_size_bound improved=(4,4) classical=(4,36)\n"
    )


def test_bounds_zero_at_kink(capsys):
    assert run(["bounds", "--gamma", "0.5", "--m", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1].startswith("2,0.25,0,")


def test_compare_single_instance(tmp_path, capsys):
    src = tmp_path / "id.txt"
    src.write_text(IDENTITY3)
    assert run(["compare", "--in", str(src)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == (
        "instance_id,m,n,gamma_nominal,gamma_effective,seed,model,"
        "k,u_k,delta_k,classical,improved,ratio"
    )
    rows = [ln.split(",") for ln in lines[1:]]
    assert [r[8] for r in rows] == ["3", "2", "1", "0"]  # u_k column
    for r in rows:
        delta, classical, improved = float(r[9]), float(r[10]), float(r[11])
        assert delta <= improved + 1e-9 <= classical + 2e-9


def test_compare_sweep_deterministic(tmp_path):
    out1 = tmp_path / "s1.csv"
    out2 = tmp_path / "s2.csv"
    argv = ["compare", "--m", "10", "--n", "32", "--gamma", "0.3",
            "--model", "bernoulli-repair", "--p", "0.4", "--seed", "5",
            "--count", "8"]
    assert run(argv + ["--out", str(out1)]) == 0
    assert run(argv + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    ids = {ln.split(",")[0] for ln in out1.read_text().splitlines()[1:]}
    assert ids == {str(i) for i in range(8)}


def test_compare_requires_source(capsys):
    with pytest.raises(SystemExit) as ei:
        run(["compare", "--count", "3"])
    assert ei.value.code == 2


def test_exact_output(tmp_path, capsys):
    src = tmp_path / "g.txt"
    src.write_text(THREE_BY_SIX)
    assert run(["exact", "--in", str(src)]) == 0
    assert capsys.readouterr().out == "size: 2\nrows: 1 2\n"


def test_exact_too_large(tmp_path, capsys):
    src = tmp_path / "big.txt"
    src.write_text("26 1\n" + "1\n" * 26)
    assert run(["exact", "--in", str(src)]) == 2
    assert "exceeds" in capsys.readouterr().err


def test_verify_product_inequality(capsys):
    assert run(["verify", "--suite", "product-inequality", "--max-y", "60"]) == 0
    out = capsys.readouterr().out
    assert "checked 1830 pairs" in out and "PASS" in out


def test_verify_exhaustive(tmp_path, capsys):
    report_path = tmp_path / "r.json"
    assert run(["verify", "--suite", "exhaustive", "--m", "3", "--n", "3",
                "--json", str(report_path)]) == 0
    assert "343 instances" in capsys.readouterr().out
    report = json.loads(report_path.read_text())
    assert report["pass"] is True and report["instances_checked"] == 343


def test_verify_exhaustive_too_large(capsys):
    assert run(["verify", "--suite", "exhaustive", "--m", "6", "--n", "4"]) == 2


def test_verify_random(capsys):
    assert run(["verify", "--suite", "random", "--count", "30", "--seed", "3"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_exhaustive_needs_dims(capsys):
    with pytest.raises(SystemExit) as ei:
        run(["verify", "--suite", "exhaustive"])
    assert ei.value.code == 2
