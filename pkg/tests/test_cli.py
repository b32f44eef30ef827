"""Command-line interface tests: exit codes, plain dumps, JSON payloads."""

import json

from reescm.cli import main
from reescm.rees import build_instance, instance_ring
from reescm.ring import parse_polynomial

INST1 = ["--m", "2", "--n", "2", "--s1", "2", "--t1", "2",
         "--s2", "2", "--t2", "2"]


def run_json(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, json.loads(out)


def run_lines(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, [l for l in out.splitlines() if l and not l.startswith("#")]


def test_verify_smallest_instance(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code = main(["verify", *INST1, "--out", str(out_file)])
    capsys.readouterr()
    payload = json.loads(out_file.read_text())
    assert code == 0
    assert payload["schema"] == 1
    assert payload["final_cm_verdict"] == "verified"
    stage_names = {s["name"] for s in payload["stages"]}
    assert {"buchberger_ok", "initial_ideal_match", "dual_linear",
            "eagon_reiner_cm", "reisner_cm"} <= stage_names
    assert all(s["status"] == "verified" for s in payload["stages"])


def test_verify_budget_exhaustion(capsys):
    code, payload = run_json(["verify", *INST1, "--budget", "1"], capsys)
    assert code == 3
    assert any(s["status"] == "not verified" for s in payload["stages"])


def test_dump_round_trips_through_parser(capsys):
    code, lines = run_lines(["dump", "--family", "g", *INST1], capsys)
    assert code == 0
    assert len(lines) == 6
    ring = instance_ring(build_instance(2, 2, 2, 2, 2, 2))
    for line in lines:
        assert str(parse_polynomial(ring, line)) == line


def test_dump_initial_family(capsys):
    code, lines = run_lines(
        ["dump", "--family", "hX", "--m", "2", "--n", "3", "--s1", "2",
         "--t1", "3", "--s2", "2", "--t2", "2"], capsys)
    assert code == 0
    assert len(lines) == 3


def test_dump_unknown_family(capsys):
    code = main(["dump", "--family", "nope", *INST1])
    capsys.readouterr()
    assert code == 2


def test_staircase_subcommand(capsys):
    code, payload = run_json(["staircase", "3", "4", "2"], capsys)
    assert code == 0
    assert payload["closed_form_equals_generic"] is True
    assert payload["regularity"] == payload["expected_regularity"] == 3
    assert payload["status"] == "verified"


def test_dual_cross_check(capsys):
    code, lines = run_lines(["dual", *INST1, "--cross-check"], capsys)
    assert code == 0
    assert lines and all(len(line.split("*")) == 5 for line in lines)


def test_betti_from_ideal_file(capsys, tmp_path):
    f = tmp_path / "ideal.txt"
    f.write_text("a*b\nb*c\n")
    code, payload = run_json(["betti", "--ideal-file", str(f)], capsys)
    assert code == 0
    triples = {(t["i"], t["j"]): t["rank"] for t in payload["betti"]}
    assert triples[(0, 2)] == 2 and triples[(1, 3)] == 1


def test_random_suite_small(capsys):
    code, payload = run_json(
        ["random-suite", "--count", "10", "--seed", "5"], capsys)
    assert code == 0
    assert payload["failures"] == []
