import json

import pytest

from sofl.cli import EXIT_INPUT, EXIT_OK, EXIT_TOO_LARGE, main
from sofl.instance import generate


@pytest.fixture
def inst_file(tmp_path):
    def write(text, name="inst.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_solve_text(inst_file, capsys):
    path = inst_file("variant csofl\nk 1\nB 0 1 1\n")
    assert main(["solve", "--input", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "lambda 1" in out and "weight 1" in out


def test_solve_json(inst_file, capsys):
    path = inst_file("variant csofl\nk 2\nB 0 1 1\nB 4 1 1\n")
    assert main(["solve", "--input", path, "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["weight"] == 2.0 and doc["lambda"] == 1.0
    assert len(doc["centers"]) == 2


def test_solve_k_override(inst_file, capsys):
    path = inst_file("variant csofl\nk 1\nB 0 1 1\nB 4 1 1\n")
    assert main(["solve", "--input", path, "--k", "2", "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["weight"] == 2.0


def test_solve_algorithms_agree(inst_file, capsys):
    path = inst_file("variant maxblue-nored\nk 1\nB -1 1\nB 1 1\nR 5 1\n")
    outs = []
    for algo in ("dp", "naive", "fast"):
        assert main(["solve", "--input", path, "--algorithm", algo, "--format", "json"]) == EXIT_OK
        outs.append(json.loads(capsys.readouterr().out))
    assert outs[1] == outs[2]
    assert outs[0]["covered_blue"] == outs[1]["covered_blue"]


def test_solve_fvd(inst_file, capsys):
    path = inst_file("variant allblue-minred\nk 1\nB -1 1\nB 1 1\nR 0 2\n")
    assert main(["solve", "--input", path, "--algorithm", "fvd", "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["covered_blue"] == [0, 1] and doc["covered_red"] == []


def test_solve_infeasible_maxblue(inst_file, capsys):
    path = inst_file("variant maxblue-nored\nk 1\nB 0 2\nR 0 1\n")
    assert main(["solve", "--input", path, "--algorithm", "naive"]) == EXIT_OK
    assert "no feasible" in capsys.readouterr().out


def test_parse_error_exit_code(inst_file, capsys):
    path = inst_file("variant csofl\nk 1\nB 0 1 -1\n")
    assert main(["solve", "--input", path]) == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_missing_file_exit_code(capsys):
    assert main(["solve", "--input", "/nonexistent/file.txt"]) == EXIT_INPUT


def test_gen_deterministic_bytes(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    args = ["gen", "--seed", "9", "--n", "5", "--k", "2", "--variant", "tlines", "--t", "2"]
    assert main(args + ["--out", str(a)]) == EXIT_OK
    assert main(args + ["--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_gen_stdout_matches_api(capsys):
    assert main(["gen", "--seed", "4", "--n", "3", "--k", "1", "--variant", "csofl"]) == EXIT_OK
    assert capsys.readouterr().out == generate(4, 3, 1, "csofl")


def test_check_too_large_exit_code(inst_file, capsys):
    pts = "\n".join(f"B {i} 1 1" for i in range(9))  # beyond the n<=8 guard
    path = inst_file(f"variant csofl\nk 1\n{pts}\n")
    assert main(["check", "--input", path]) == EXIT_TOO_LARGE


def test_check_pass(inst_file, capsys):
    path = inst_file("variant csofl\nk 2\nB 0 1 2\nR 2 1 -3\nB 5 2 4\n")
    assert main(["check", "--input", path]) == EXIT_OK
    assert "PASS" in capsys.readouterr().out


def test_check_all_variants(tmp_path, capsys):
    cases = [
        ("csofl", {"n": 6, "k": 2}),
        ("tlines", {"n": 3, "k": 1}),  # k=1 keeps the oracle center guard happy
        ("discrete", {"n": 4, "k": 2}),
        ("maxblue-nored", {"n": 6, "k": 1}),
        ("allblue-minred", {"n": 6, "k": 1}),
        ("maxblue-nored", {"n": 6, "k": 2}),
        ("allblue-minred", {"n": 6, "k": 2}),
    ]
    for i, (variant, kw) in enumerate(cases):
        text = generate(20 + i, kw["n"], kw["k"], variant, t=2, s=5)
        path = tmp_path / f"{variant}-{i}.txt"
        path.write_text(text)
        rc = main(["check", "--input", str(path)])
        out = capsys.readouterr().out
        assert rc == EXIT_OK, f"{variant} k={kw['k']}\n{out}"
        assert "PASS" in out
