import json
import subprocess
import sys

import pytest

from tornheim import (
    Decomposition,
    EvalConfig,
    MTIndex,
    RootOfUnity,
    decompose,
    eval_decomposition,
    term_from_record,
)
from tornheim.cli import _format_value, run


def test_decompose_bar_notation(capsys):
    assert run(["decompose", "--p", "2", "--q", "1", "--r", "2", "--notation", "bar"]) == 0
    assert capsys.readouterr().out.strip() == "z(-3,-2) + z(-4,-1) + z(4,-1)"


def test_decompose_li_text(capsys):
    assert run(["decompose", "--p", "1", "--q", "1", "--r", "3"]) == 0
    assert capsys.readouterr().out.strip() == "Li[4,1](-1,-1) + Li[4,1](1,-1)"


def test_decompose_pretty(capsys):
    assert run(["decompose", "--p", "2", "--q", "1", "--r", "2", "--notation", "bar",
                "--format", "pretty"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "ζ(3̄,2̄) + ζ(4̄,1̄) + ζ(4,1̄)"


def test_decompose_json_schema(capsys):
    assert run(["decompose", "--p", "2", "--q", "1", "--r", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {
        "terms": [
            {"coeff": 1, "s": 3, "t": 2, "x": "1/2", "y": "1/2"},
            {"coeff": 1, "s": 4, "t": 1, "x": "1/2", "y": "1/2"},
            {"coeff": 1, "s": 4, "t": 1, "x": "0/1", "y": "1/2"},
        ]
    }


def test_json_roundtrip_matches_eval_bit_for_bit(capsys):
    assert run(["decompose", "--p", "2", "--q", "3", "--r", "2", "--format", "json"]) == 0
    records = json.loads(capsys.readouterr().out)["terms"]
    terms = tuple(term_from_record(rec) for rec in records)
    idx = MTIndex(2, 3, 2)
    alpha, beta = RootOfUnity(1, 2), RootOfUnity(0, 1)
    reparsed = eval_decomposition(Decomposition(idx, alpha, beta, terms), EvalConfig())
    direct = eval_decomposition(decompose(idx, alpha, beta), EvalConfig())
    assert reparsed.value == direct.value
    assert reparsed.error_bound == direct.error_bound

    assert run(["eval", "--p", "2", "--q", "3", "--r", "2"]) == 0
    printed = capsys.readouterr().out.strip()
    assert printed == _format_value(direct)


def test_eval_prints_paper_digits(capsys):
    assert run(["eval", "--p", "2", "--q", "1", "--r", "2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("-0.2402184755 ")
    assert "±" in out


def test_oracle_command(capsys):
    assert run(["oracle", "--p", "2", "--q", "1", "--r", "2", "--cutoff", "3000"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("-0.2402184")


def test_complex_colors(capsys):
    assert run(["eval", "--p", "1", "--q", "1", "--r", "2", "--alpha", "1/4", "--beta", "1/3"]) == 0
    out = capsys.readouterr().out
    assert "i" in out  # complex value printed with imaginary part


def test_invalid_index_exit2(capsys):
    assert run(["decompose", "--p", "1", "--q", "0", "--r", "1"]) == 2
    assert "q+r>1 required" in capsys.readouterr().err


def test_bar_notation_rejects_complex_colors(capsys):
    assert run(["decompose", "--p", "1", "--q", "1", "--r", "2", "--alpha", "1/4",
                "--notation", "bar"]) == 2
    err = capsys.readouterr().err
    assert "order" in err and "bar" in err


def test_unknown_argument_exit2(capsys):
    assert run(["decompose", "--p", "2", "--q", "1", "--r", "2", "--bogus"]) == 2
    capsys.readouterr()


def test_bad_root_syntax_exit2(capsys):
    assert run(["eval", "--p", "2", "--q", "1", "--r", "2", "--alpha", "nope"]) == 2
    capsys.readouterr()


def test_relation_command(tmp_path, capsys):
    good = tmp_path / "good.txt"
    good.write_text("1*zeta(3) == Li(2,1;1,1)\n", encoding="utf-8")
    assert run(["relation", "--file", str(good)]) == 0
    capsys.readouterr()

    bad = tmp_path / "bad.txt"
    bad.write_text("1*zeta(5) == MT(2,1,2;-1,1)\n", encoding="utf-8")
    assert run(["relation", "--file", str(bad)]) == 1
    assert "fail" in capsys.readouterr().out

    broken = tmp_path / "broken.txt"
    broken.write_text("1*zeta(5) ==\n", encoding="utf-8")
    assert run(["relation", "--file", str(broken)]) == 2
    assert "position" in capsys.readouterr().err


def test_verify_small_grid(tmp_path, capsys):
    json_path = tmp_path / "reports.json"
    code = run(["verify", "--grid-weight", "3", "--orders", "1,2", "--json", str(json_path)])
    out = capsys.readouterr().out
    assert code == 0
    assert "fixtures: 13/13 pass" in out
    assert "all checks pass" in out
    records = json.loads(json_path.read_text(encoding="utf-8"))
    assert all(rec["status"] == "pass" for rec in records)
    # 13 fixtures + 4 value checks + 3 indices * 4 color pairs
    assert len(records) == 13 + 4 + 12


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tornheim", "decompose", "--p", "2", "--q", "1", "--r", "2",
         "--notation", "bar"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "z(-3,-2) + z(-4,-1) + z(4,-1)"
