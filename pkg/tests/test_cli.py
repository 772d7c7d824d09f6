import json
import subprocess
import sys

import pytest

from flagqh.cli import main, parse_word


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "flagqh", *args], capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def test_parse_word():
    assert parse_word("1,2,1") == parse_word("121") == (1, 2, 1)
    assert parse_word("") == parse_word("id") == ()


def test_qmul_text(capsys):
    assert main(["qmul", "--type", "A", "--rank", "2", "--u", "1", "--v", "1"]) == 0
    assert capsys.readouterr().out.strip() == "q1 + s[21]"


def test_qpmul_and_pwlift(capsys):
    assert main(["qpmul", "--type", "A", "--rank", "2", "--parabolic", "2", "--u", "21", "--v", "21"]) == 0
    assert "q1*s[1]" in capsys.readouterr().out
    assert main(["pwlift", "--case", "C9", "--r", "2", "--lambda", "0,0,0,1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data


@pytest.mark.parametrize("args,code", [
    (["roots", "--type", "Q", "--rank", "2"], 2),
    (["qmul", "--type", "A", "--rank", "2", "--u", "9", "--v", "1"], 2),
    (["qmul", "--type", "A", "--rank", "2", "--u", "12", "--v", "1", "--cap-degree", "1"], 2),
    (["qmul", "--type", "A", "--rank", "2", "--u", "1", "--v", "1", "--cap-degree", "1"], 3),
    (["tables", "--which", "9"], 2),
    (["verify", "--suite", "bogus"], 2),
    (["nonsense"], 2),
    (["verify", "--suite", "negative-control"], 1),
    (["verify", "--suite", "example12"], 0),
])
def test_exit_codes(args, code):
    assert main(args) == code


def test_resource_exit_code():
    # E8 exceeds the default group cap
    assert main(["qmul", "--type", "E", "--rank", "8", "--u", "1", "--v", "1"]) == 3


def test_json_is_byte_identical_across_processes(tmp_path):
    args = ["verify", "--suite", "example12", "--format", "json"]
    first, second = run(*args), run(*args)
    assert first[0] == 0 and first[1] == second[1]
    out = tmp_path / "tables.json"
    code, _, _ = run("tables", "--which", "3", "--format", "json", "--out", str(out))
    assert code == 0
    again = tmp_path / "again.json"
    run("tables", "--which", "3", "--format", "json", "--out", str(again))
    assert out.read_bytes() == again.read_bytes()
    assert json.loads(out.read_text())
