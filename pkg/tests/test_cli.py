import json
import os
import subprocess
import sys

import pytest


def run_cli(args, cwd, env_extra=None):
    env = dict(os.environ)
    env.pop("PERMCODEC_CACHE", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "permcodec", *args],
        capture_output=True, text=True, cwd=cwd, env=env,
    )


def test_encode_worked_examples(tmp_path):
    out = run_cli(["encode", "3612745", "--k", "4"], tmp_path)
    assert out.returncode == 0
    assert out.stdout == '{"w":"1212234","wp":"1213422"}\n'
    out = run_cli(["encode", "35412", "--k", "3"], tmp_path)
    assert out.returncode == 0
    assert out.stdout == '{"w":"01101","wp":"01011"}\n'


def test_encode_precondition_failure_reports_witness(tmp_path):
    out = run_cli(["encode", "1324", "--k", "4"], tmp_path)
    assert out.returncode == 3
    assert out.stdout == ""
    assert "contains 1324 at (1,2,3,4)" in out.stderr


def test_encode_parse_error(tmp_path):
    out = run_cli(["encode", "1x24", "--k", "4"], tmp_path)
    assert out.returncode == 2
    assert out.stdout == ""


def test_decode_round_trips(tmp_path):
    out = run_cli(["decode", "1212234", "1213422", "--k", "4"], tmp_path)
    assert (out.returncode, out.stdout) == (0, "3612745\n")
    out = run_cli(["decode", "011200112", "001120112", "--k", "5"], tmp_path)
    assert (out.returncode, out.stdout) == (0, "687912435\n")


def test_decode_not_in_image(tmp_path):
    out = run_cli(["decode", "10", "10", "--k", "3"], tmp_path)
    assert (out.returncode, out.stdout) == (4, "NOT-IN-IMAGE\n")


def test_decode_malformed_words(tmp_path):
    assert run_cli(["decode", "19", "19", "--k", "3"], tmp_path).returncode == 2
    assert run_cli(["decode", "101", "10", "--k", "3"], tmp_path).returncode == 2


def test_count_uses_cwd_cache_by_default(tmp_path):
    out = run_cli(["count", "-q", "1324", "-n", "6"], tmp_path)
    assert (out.returncode, out.stdout) == (0, "513\n")
    cache = tmp_path / "permcodec-cache.jsonl"
    assert cache.exists()
    assert json.loads(cache.read_text()) == {
        "pattern": "1324", "n": 6, "count": "513",
    }


def test_count_cache_flag_beats_environment(tmp_path):
    env_cache = tmp_path / "env.jsonl"
    flag_cache = tmp_path / "flag.jsonl"
    out = run_cli(
        ["count", "-q", "132", "-n", "5", "--cache", str(flag_cache)],
        tmp_path, env_extra={"PERMCODEC_CACHE": str(env_cache)},
    )
    assert (out.returncode, out.stdout) == (0, "42\n")
    assert flag_cache.exists() and not env_cache.exists()

    out = run_cli(
        ["count", "-q", "132", "-n", "5"],
        tmp_path, env_extra={"PERMCODEC_CACHE": str(env_cache)},
    )
    assert (out.returncode, out.stdout) == (0, "42\n")
    assert env_cache.exists()


def test_count_reads_poisoned_cache(tmp_path):
    cache = tmp_path / "c.jsonl"
    cache.write_text('{"pattern":"132","n":4,"count":"999"}\n')
    out = run_cli(["count", "-q", "213", "-n", "4", "--cache", str(cache)], tmp_path)
    assert (out.returncode, out.stdout) == (0, "999\n")


def test_cache_io_failure_exits_six(tmp_path):
    out = run_cli(["count", "-q", "132", "-n", "3", "--cache", str(tmp_path)], tmp_path)
    assert out.returncode == 6
    assert out.stdout == ""


def test_words_command(tmp_path):
    out = run_cli(["words", "--m", "2", "--parity", "even", "-n", "2"], tmp_path)
    assert (out.returncode, out.stdout) == (0, "15\n")
    out = run_cli(["words", "--m", "3", "--parity", "odd"], tmp_path)
    assert (out.returncode, out.stdout) == (0, "odd m=3 (alphabet 0..4)\n")


def test_bounds_csv_shape(tmp_path):
    out = run_cli(["bounds", "--k", "4", "--nmax", "6", "--format", "csv"], tmp_path)
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[0] == "k,n,count,word_bound_sq,cap,ok_word,ok_cap"
    assert len(lines) == 8  # header + nmax+1 rows
    assert all(line.endswith("true,true") for line in lines[1:])
    assert lines[5] == "4,4,23,3136,1679616,true,true"


def test_bounds_json(tmp_path):
    out = run_cli(["bounds", "--k", "3", "--nmax", "2", "--format", "json"], tmp_path)
    rows = json.loads(out.stdout)
    assert rows[2] == {
        "k": 3, "n": 2, "count": 2, "word_bound_sq": 4,
        "cap": "6561/16", "ok_word": True, "ok_cap": True,
    }
    assert rows[0]["word_bound_sq"] is None


def test_verify_command(tmp_path):
    out = run_cli(["verify", "--k", "4", "-n", "5"], tmp_path)
    assert out.returncode == 0
    assert out.stdout.splitlines()[0] == "checked 103 avoiders for k=4 n=5"
    assert out.stdout.splitlines()[-1] == "PASS"

    out = run_cli(["verify", "--k", "3", "-n", "5", "--format", "json"], tmp_path)
    report = json.loads(out.stdout)
    assert report["passed"] is True and report["total"] == 42


def test_scan_command(tmp_path):
    out = run_cli(["scan", "--k", "3", "-n", "5", "--format", "json"], tmp_path)
    report = json.loads(out.stdout)
    assert [c["count"] for c in report["classes"]] == [42, 42]
    assert report["layered_dominates"] and report["staircase_is_max"]


def test_scale_refusal_exits_five(tmp_path):
    out = run_cli(["count", "-q", "1324", "-n", "14", "--budget", "1000"], tmp_path)
    assert out.returncode == 5
    assert out.stdout == ""
    assert "budget" in out.stderr


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--k", "4", "-n", "6", "--format", "json"],
        ["scan", "--k", "4", "-n", "5"],
        ["count", "-q", "1324", "-n", "7"],
        ["bounds", "--k", "5", "--nmax", "5", "--format", "csv"],
    ],
)
def test_output_bytes_do_not_depend_on_jobs(tmp_path, args):
    one = run_cli([*args, "--jobs", "1"], tmp_path)
    eight = run_cli([*args, "--jobs", "8"], tmp_path)
    assert one.returncode == eight.returncode == 0
    assert one.stdout == eight.stdout
