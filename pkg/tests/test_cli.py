import io
import json
import subprocess
import sys

import jsonschema
import pytest

import cga.cli as cli
from cga.comgraph.graph import VertexSet
from cga.groups import ClassLabel, GroupSpec
from cga.comgraph.components import component_of
from cga.perm import CycleType, parse_cycles
from cga.schema import REPORT_SCHEMA
from cga.verify import FAIL, VerificationReport

ROW1_6332 = "(1,2,5,6,3,4)(7,8,9)(10,12,11)(13,14)"


@pytest.fixture
def env(tmp_path):
    return {"CGA_CACHE_DIR": str(tmp_path / "cache"), "CGA_JOBS": "1"}


def run(argv, env):
    out = io.StringIO()
    status = cli.main(argv, out=out, environ=env)
    return status, out.getvalue()


def run_json(argv, env):
    status, text = run(argv + ["--json"], env)
    doc = json.loads(text)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["exit_status"] == status
    return status, doc


# ------------------------------------------------ classes / centralizer

@pytest.mark.parametrize("n,expected", [(11, ["4-4-3"]), (7, []), (8, ["4-4"])])
def test_classes_alt(n, expected, env):
    status, doc = run_json(["classes", "--group", "alt", "--n", str(n)], env)
    assert status == 0
    data = doc["reports"][0]["data"]
    assert data["Yb"] == expected and data["undecided"] == []


def test_classes_sym3_all_in_ya(env):
    status, doc = run_json(["classes", "--group", "sym", "--n", "3"], env)
    assert status == 0
    assert all(c["in_Ya"] is True for c in doc["reports"][0]["data"]["classes"])


def test_classes_cap_exit_status(env):
    status, text = run(["classes", "--group", "alt", "--n", "9", "--cap", "5"], env)
    assert status == cli.EXIT_CAP
    assert "undecided" in text


def test_centralizer_command(env):
    status, doc = run_json(["centralizer", "--n", "8", "(1,3,2,4)(5,7,6,8)"], env)
    data = doc["reports"][0]["data"]
    assert status == 0 and data["order"] == 16 and data["abelian"] is False and data["in_Ya"] is False
    status, doc = run_json(["centralizer", "--n", "7", "(1,2,3,4,5,6,7)"], env)
    assert doc["reports"][0]["data"]["order"] == 7 and doc["reports"][0]["data"]["abelian"] is True


# ------------------------------------------------ component and cache

@pytest.mark.parametrize("n,cls,seed,size,delta", [
    (8, "4-4", "(1,3,2,4)(5,7,6,8)", 12, 3),
    (15, "7-4-4", "(1,3,2,4)(5,7,6,8)(9,10,11,12,13,14,15)", 72, 3),
    (15, "6-3-3-2", ROW1_6332, 96, 12),
])
def test_component_examples(n, cls, seed, size, delta, env):
    argv = ["component", "--group", "alt", "--n", str(n), "--class", cls, "--seed", seed]
    status, doc = run_json(argv, env)
    data = doc["reports"][0]["data"]
    assert status == 0
    assert (data["size"], data["delta"], data["Delta"], data["status"]) == (size, delta, delta, "certified")
    assert len(data["independent_certificate"]) == delta and len(data["cover_certificate"]) == delta


def test_component_cache_round_trip(env):
    argv = ["component", "--group", "alt", "--n", "8", "--class", "4-4", "--seed", "(1,3,2,4)(5,7,6,8)"]
    _, first = run_json(argv, env)
    path = first["reports"][0]["data"]["cache_path"]
    assert first["reports"][0]["data"]["from_cache"] is False
    lines = open(path).read().splitlines()
    header = json.loads(lines[0][2:])
    assert header["schema_version"] == "1" and header["class"] == "4-4" and header["size"] == 12
    label = ClassLabel(CycleType((4, 4), 8))
    _, vs = cli.read_component_cache(path, label)
    direct = component_of(parse_cycles("(1,3,2,4)(5,7,6,8)", 8), GroupSpec.alt(8), label)
    assert vs == direct
    assert VertexSet.from_lines(lines[1:], 8, label) == direct
    _, second = run_json(argv, env)
    assert second["reports"][0]["data"]["from_cache"] is True
    assert second["reports"][0]["data"]["delta"] == 3


def test_cache_rejects_corrupt_files(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("(1,2)\n")
    with pytest.raises(ValueError):
        cli.read_component_cache(p)
    p.write_text('# {"schema_version": "0", "degree": 4, "size": 1}\n(1,2)\n')
    with pytest.raises(ValueError):
        cli.read_component_cache(p)


@pytest.mark.parametrize("argv", [
    ["component", "--n", "8", "--class", "3-3", "--seed", "(1,3,2,4)(5,7,6,8)"],  # class mismatch
    ["component", "--n", "8", "--class", "2", "--seed", "(1,2)"],  # odd seed in A_n
    ["component", "--n", "8", "--class", "4-4", "--seed", "(1,3,2,4)(5,7,6"],  # malformed
    ["classes", "--n", "0"],
    ["classes", "--n", "30"],
    ["reps-search", "--n", "13"],
    ["reps-search", "--n", "12", "--groups", "10"],
    ["cover", "--n", "20", "--kind", "odd"],
    ["verify", "bogus-id"],
    ["verify", "theorem-small", "--n", "13"],
    ["nonsense"],
])
def test_usage_errors(argv, env):
    status, _ = run(argv, env)
    assert status == cli.EXIT_USAGE


def test_component_size_limit_is_a_cap(env):
    argv = ["component", "--n", "8", "--class", "4-4", "--seed", "(1,3,2,4)(5,7,6,8)", "--max-size", "5"]
    assert run(argv, env)[0] == cli.EXIT_CAP


# ------------------------------------------------ cover / reps-search

def test_cover_command(env):
    status, doc = run_json(["cover", "--n", "16"], env)
    data = doc["reports"][0]["data"]
    assert status == 0 and data["members"] == 280 and data["intersection_sizes"] == [4]
    assert data["valid_abelian_cover"] is True


@pytest.mark.parametrize("extra,feasible", [([], False), (["--groups", "8"], True),
                                            (["--no-symmetry-reduction"], False)])
def test_reps_search_examples(extra, feasible, env):
    status, doc = run_json(["reps-search", "--n", "12", "--kind", "even"] + extra, env)
    data = doc["reports"][0]["data"]
    assert status == 0 and data["feasible"] is feasible
    if feasible:
        assert data["assignment"][2] == "(1,3)(2,4,6)(9,10,11,12)"
    else:
        assert data["trace"] and data["dead_ends"] >= 1


def test_reps_search_full_n16(env):
    status, doc = run_json(["reps-search", "--n", "16", "--kind", "even", "--no-symmetry-reduction"], env)
    assert doc["reports"][0]["data"]["feasible"] is False


# ------------------------------------------------ verify

def test_verify_json_and_plain_agree(env):
    status, doc = run_json(["verify", "prop-alt-even", "--n", "16"], env)
    assert status == 0
    ids = [r["claim_id"] for r in doc["reports"]]
    assert len(ids) == 6 and ids == sorted(ids)
    assert all(r["result"] == "pass" for r in doc["reports"])
    status, text = run(["verify", "prop-alt-even", "--n", "16"], env)
    assert status == 0
    assert all(i in text for i in ids)


def test_verify_jsonl(env):
    status, text = run(["verify", "witness-table", "--jsonl"], env)
    lines = [json.loads(x) for x in text.splitlines()]
    assert status == 0
    assert lines[0]["schema_version"] == "1" and "invocation" in lines[0]
    for rec in lines[1:]:
        jsonschema.validate(rec, REPORT_SCHEMA["properties"]["reports"]["items"])
    assert [r["claim_id"] for r in lines[1:]] == sorted(r["claim_id"] for r in lines[1:])
    assert len(lines) == 1 + 6


def test_verify_parallel_matches_serial(env):
    _, serial = run_json(["verify", "component", "--jobs", "1"], env)
    _, parallel = run_json(["verify", "component", "--jobs", "3"], env)

    def strip(doc):
        return [{k: v for k, v in r.items() if k != "wall_time"} for r in doc["reports"]]
    assert strip(serial) == strip(parallel)
    assert parallel["invocation"]["config"]["jobs"] == 3


def test_verify_theorem_small_15(env):
    status, doc = run_json(["verify", "theorem-small", "--n", "15"], env)
    assert status == 0 and doc["reports"][0]["result"] == "pass"


def test_failing_claim_exit_status(env, monkeypatch):
    def fake(claim_id, params, pattern, cap, symmetry_reduction):
        return [VerificationReport(claim_id, "x", params, FAIL, {}, 0.0, "forced failure")]
    monkeypatch.setattr(cli, "run_task", fake)
    status, doc = run_json(["verify", "lemma-alt15.cross-class"], env)
    assert status == cli.EXIT_FAIL and doc["reports"][0]["result"] == "fail"


# ------------------------------------------------ configuration

def test_config_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"cap": 111, "jobs": 2, "cache_dir": str(tmp_path / "from-file")}))
    env = {"CGA_JOBS": "3"}
    _, doc = run_json(["classes", "--n", "5", "--config", str(cfg), "--cap", "5000"], env)
    c = doc["invocation"]["config"]
    assert (c["cap"], c["jobs"], c["cache_dir"]) == (5000, 3, str(tmp_path / "from-file"))
    assert c["sources"] == {"cap": "flag", "jobs": "env", "cache_dir": "config", "deterministic": "default"}
    _, doc = run_json(["classes", "--n", "5"], {})
    c = doc["invocation"]["config"]
    assert c["cap"] == 10**6 and c["deterministic"] is True and c["sources"]["cap"] == "default"


@pytest.mark.parametrize("env", [{"CGA_CAP": "abc"}, {"CGA_JOBS": "0"}])
def test_bad_environment_is_usage_error(env):
    assert run(["classes", "--n", "5"], env)[0] == cli.EXIT_USAGE


def test_bad_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"colour": "blue"}))
    assert run(["classes", "--n", "5", "--config", str(cfg)], {})[0] == cli.EXIT_USAGE
    assert run(["classes", "--n", "5", "--config", str(tmp_path / "missing.json")], {})[0] == cli.EXIT_USAGE


def test_schema_command_prints_valid_schema():
    status, text = run(["schema"], {})
    assert status == 0
    jsonschema.Draft202012Validator.check_schema(json.loads(text))


def test_console_script_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "cga.cli", "verify", "bogus-id"],
                          capture_output=True, text=True, env={"CGA_CACHE_DIR": str(tmp_path), "PATH": ""})
    assert proc.returncode == 2 and "bogus-id" in proc.stderr
