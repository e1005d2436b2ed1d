# scripts/verify_cli.py
"""
rhobound CLI 스모크 테스트 (종료 코드 0 / 1 / 2)
"""
import io
import json
import os
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout

import pytest

# 프로젝트 루트 경로 추가
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from rhobound.bounds.report import BoundReport
from rhobound.cli import CliConfig, main, parse_int_list, run
from rhobound.core.errors import ParameterError
from rhobound.verify import checks as check_module


def _invoke(argv, stdin_text=None):
    """main(argv) 실행 결과 (exit code, stdout, stderr)"""
    out, err = io.StringIO(), io.StringIO()
    saved = sys.stdin
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
    finally:
        sys.stdin = saved
    return code, out.getvalue(), err.getvalue()


def _json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_parse_int_list():
    assert parse_int_list("5,10") == (5, 10)
    assert parse_int_list("3..6") == (3, 4, 5, 6)
    assert parse_int_list("3..4, 100") == (3, 4, 100)
    with pytest.raises(ParameterError):
        parse_int_list("a,b")
    with pytest.raises(ParameterError):
        parse_int_list(",")


def test_analyze_star():
    print("\n--- analyze ---")
    code, out, _ = _invoke(["analyze", "--gen", "star:5", "--output", "json"])
    assert code == 0
    (record,) = _json_lines(out)
    assert record["s"] == "24/5"
    assert record["avg_degree"] == "8/5"
    assert record["verdict_theorem1"] == "pass"
    assert record["theorem_exact"] is True
    assert BoundReport.from_dict(record).to_dict() == record
    print("✅ analyze --gen star:5")


def test_analyze_multiple_graphs_and_out_file():
    with tempfile.TemporaryDirectory() as tmp:
        src = os.path.join(tmp, "graphs.g6")
        dst = os.path.join(tmp, "report.csv")
        with open(src, "w", encoding="utf-8") as f:
            f.write("B_\n\nBw\nDQc\n")
        code, out, _ = _invoke(["analyze", src, "--output", "csv", "--out", dst])
        assert code == 0 and out == ""
        with open(dst, encoding="utf-8") as f:
            lines = f.read().splitlines()
        assert lines[0].startswith("graph6,n,m,")
        assert [line.split(",")[0] for line in lines[1:]] == ["B_", "Bw", "DQc"]


def test_analyze_stdin_and_human():
    code, out, _ = _invoke(["analyze", "-", "--format", "edgelist", "--output", "human"],
                           stdin_text="3 2\n0 1\n1 2\n")
    assert code == 0
    assert "s" in out and "4/3" in out


def test_usage_errors():
    print("\n--- exit code 2 ---")
    cases = [
        (["analyze", "-", "--format", "edgelist"], "3 1\n1 1\n"),
        (["analyze", "--graph6", "DQ"], None),
        (["analyze", "--tol", "-1", "--gen", "star:5"], None),
        (["analyze", "--gen", "star:5", "--graph6", "B_"], None),
        (["analyze"], None),
        (["enumerate", "--n-max", "9"], None),
        (["enumerate"], None),
        (["verify", "--families", "gnp", "--sizes", "10", "--count", "0"], None),
        (["analyze", "--bogus"], None),
        ([], None),
    ]
    for argv, stdin_text in cases:
        code, out, _ = _invoke(argv, stdin_text)
        assert code == 2, (argv, code)
        assert out == ""
    _, _, err = _invoke(["analyze", "--graph6", "DQ"])
    assert "byte offset" in err
    print(f"✅ {len(cases)} cases -> 2")


def test_analyze_streams_reports_before_parse_error():
    code, out, err = _invoke(["analyze", "-"], "Bw\nBg\nDQ\nB?\n")
    assert code == 2
    reports = _json_lines(out)
    assert [r["graph6"] for r in reports] == ["Bw", "Bg"]
    assert "byte offset" in err
    print("✅ 오류 이전 리포트는 출력됨")


def test_enumerate():
    code, out, _ = _invoke(["enumerate", "--n-max", "4"])
    assert code == 0
    (summary,) = _json_lines(out)
    assert summary["graphs_checked"] == 64
    assert summary["violations"] == []
    assert summary["corpus_id"] == "exhaustive:n=4"


def test_verify_random_and_suites():
    code, out, _ = _invoke(["verify", "--families", "gnp", "--sizes", "20", "--count", "5", "--seed", "42"])
    assert code == 0
    (summary,) = _json_lines(out)
    assert summary["graphs_checked"] == 5

    code, out, _ = _invoke(["verify", "--suite", "lemma1", "--count", "50"])
    assert code == 0 and _json_lines(out)[0]["graphs_checked"] == 50

    code, _, _ = _invoke(["verify", "--suite", "blowup", "--count", "3", "--ts", "2"])
    assert code == 0


def test_verify_violation_exit_code():
    original = check_module.CHECK_FUNCTIONS["rowsum"]
    check_module.CHECK_FUNCTIONS["rowsum"] = lambda ctx: {"forced": True}
    try:
        code, out, _ = _invoke(["verify", "--gen", "star:6", "--checks", "rowsum", "--workers", "1"])
    finally:
        check_module.CHECK_FUNCTIONS["rowsum"] = original
    assert code == 1
    (summary,) = _json_lines(out)
    assert summary["violations"][0]["failing_check"] == "rowsum"
    assert summary["violations"][0]["details"] == {"forced": True}


def test_blowup_and_star_sweep():
    code, out, _ = _invoke(["blowup", "--gen", "path:3", "--ts", "1,2"])
    assert code == 0
    rows = _json_lines(out)
    assert [r["t"] for r in rows] == [1, 2]
    assert rows[1]["s"] == "16/3"

    code, out, _ = _invoke(["star-sweep", "--ns", "5,10,100", "--output", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,rho,gap,s,ratio,rho_certified"
    assert len(lines) == 4


def test_run_with_streams():
    out, err = io.StringIO(), io.StringIO()
    code = run(CliConfig(command="analyze", graph6="Bw", output="json"), stdout=out, stderr=err)
    assert code == 0
    assert _json_lines(out.getvalue())[0]["rho_lo"] == "2"
    code = run(CliConfig(command="analyze"), stdout=out, stderr=err)
    assert code == 2 and "error:" in err.getvalue()


if __name__ == "__main__":
    failed = 0
    for name, func in list(globals().items()):
        if name.startswith("test_") and callable(func):
            try:
                func()
            except Exception as e:
                failed += 1
                print(f"\n❌ {name}: {e!r}")
    if failed:
        print(f"\n❌ Verification Failed: {failed} test(s)")
        sys.exit(1)
    print("\n🎉 All verifications passed!")
