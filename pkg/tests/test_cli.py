"""Command-line surface: wire format, reports, exit codes, data files."""

import json

import pytest

import garside as g
from garside.cli import cmd_conjugacy, cmd_nf, cmd_rigid_conj, main, parse_braid_word
from conftest import EX_CONJ_FACTOR_WORDS, EX_X_FACTOR_WORDS, build_certified

EX_X_WIRE = " ".join(str(i) for w in EX_X_FACTOR_WORDS for i in w)


def test_parse_braid_word():
    w = parse_braid_word("1 -2 3", 4)
    assert w.letters == (1, -2, 3)
    assert parse_braid_word("D", 3).letters == (1, 2, 1)
    assert parse_braid_word("D-", 3).letters == (-1, -2, -1)
    assert g.normalize(parse_braid_word("D- D", 3)).is_identity()
    with pytest.raises(Exception):
        parse_braid_word("1 x", 3)
    with pytest.raises(Exception):
        parse_braid_word("3", 3)


def test_cmd_nf_goldens():
    assert cmd_nf("1 2 1", 3) == "D^1 |"
    assert cmd_nf("1 -1", 3) == "D^0 |"
    assert cmd_nf(EX_X_WIRE, 4) == "D^0 | 2 3 2 1 . 1 3 2 1 . 1 2 1 3 2 . 2 3 2 1 . 1 3 2 1"
    conj_then_head = " ".join(
        str(i)
        for w in EX_CONJ_FACTOR_WORDS + EX_X_FACTOR_WORDS[:3]
        for i in w
    )
    assert cmd_nf(conj_then_head, 4) == "D^1 | 1 2 1 3 . 1 3 . 1 3 2 1 . 1 2 1 3 2"


def test_cmd_rigid_conj_reports(ex_x):
    out = cmd_rigid_conj(EX_X_WIRE, 4)
    assert out.startswith("status: rigid-no-cert")
    assert "rigid: D^1 |" in out
    assert cmd_rigid_conj("1 2", 4) == "I don't know"
    # strict-paper collapses the uncertified rigid answer
    assert cmd_rigid_conj(EX_X_WIRE, 4, strict_paper=True) == "I don't know"


def test_cmd_rigid_conj_certified_report():
    import random

    x, _ = build_certified(4, 22, random.Random(8))
    wire = str(g.word_of(x))
    out = cmd_rigid_conj(wire, 4)
    assert out.startswith("status: certified")
    assert "witness-position:" in out


def test_cmd_conjugacy_reports():
    import random

    rng = random.Random(12)
    x1, _ = build_certified(4, 22, rng)
    c = g.sample_sphere(g.SampleConfig(n=4, l=2, seed=5))
    x2 = g.conjugate(x1, c)
    out = cmd_conjugacy(str(g.word_of(x1)), str(g.word_of(x2)), 4)
    assert out.startswith(("conjugate", "I don't know"))
    if out.startswith("conjugate"):
        assert "conjugator:" in out
    short = cmd_conjugacy("1 2", "2 1", 4)
    assert short == "I don't know"


def test_main_nf_and_exit_codes(capsys):
    assert main(["nf", "--n", "3", "1 2 1"]) == 0
    assert capsys.readouterr().out.strip() == "D^1 |"
    # malformed token -> 2
    assert main(["nf", "--n", "3", "1 oops"]) == 2
    # out-of-range letter -> 2 (parse error)
    assert main(["nf", "--n", "3", "7"]) == 2
    # invalid parameters -> 3
    assert main(["nf", "--n", "1", "1"]) == 3
    assert main(["experiment", "no-such-kind", "--n", "4", "--lengths", "5"]) == 3
    # argparse usage errors -> 2
    assert main(["nf"]) == 2
    assert main(["no-such-command"]) == 2


def test_main_negative_letters(capsys):
    assert main(["nf", "--n", "3", "--", "-1 1"]) == 0
    assert capsys.readouterr().out.strip() == "D^0 |"


def test_main_conjugacy_strand_mismatch_is_parameter_error():
    # same --n applies to both words; a bad second word is a parse error
    assert main(["conjugacy", "--n", "3", "1", "5"]) == 2


def test_main_census_and_sample(capsys):
    assert main(["census", "count", "--n", "3", "--length", "4"]) == 0
    assert capsys.readouterr().out.strip() == "32"
    assert main(["census", "count", "--n", "3", "--length", "2", "--ball"]) == 0
    assert capsys.readouterr().out.strip() == "45"
    assert main(["census", "growth", "--n", "3", "--length", "8"]) == 0
    assert "estimate: 2.000000" in capsys.readouterr().out
    assert main(["census", "growth", "--n", "2", "--length", "8"]) == 3

    assert main(["sample", "sphere", "--n", "4", "--length", "3",
                 "--samples", "2", "--seed", "7"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == 2
    for line in lines:
        x = g.parse_normal_form(line, 4)
        assert x.canonical_length == 3 and x.inf_power == 0
    assert main(["sample", "ball", "--n", "3", "--length", "2",
                 "--samples", "3", "--seed", "1"]) == 0
    assert len(capsys.readouterr().out.strip().split("\n")) == 3


def test_main_experiment_csv_deterministic(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    args = ["experiment", "rigid-proportion", "--n", "4", "--lengths", "5,7",
            "--samples", "25", "--seed", "99", "--out"]
    assert main(args + [str(out1)]) == 0
    assert main(args + [str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    text = out1.read_text()
    assert text.startswith("n,l,samples,successes,proportion,ci_low,ci_high,seed,elapsed_ms\n")
    assert text.strip().split("\n")[1].endswith(",99,0")


def test_main_experiment_json(tmp_path, capsys):
    out = tmp_path / "rows.json"
    assert main(["experiment", "prefix-rare", "--n", "4", "--lengths", "5",
                 "--samples", "20", "--seed", "3", "--format", "json",
                 "--out", str(out)]) == 0
    rows = json.loads(out.read_text())
    assert rows[0]["samples"] == 20
    assert rows[0]["l"] == 5


def test_main_experiment_fit_flag(capsys):
    assert main(["experiment", "prefix-rare", "--n", "4", "--lengths", "5,8,11",
                 "--samples", "30", "--seed", "3", "--fit"]) == 0
    err = capsys.readouterr().err
    assert "decay fit" in err


def test_main_pa_proportion_warns_without_witnesses(capsys):
    assert main(["experiment", "pa-proportion", "--n", "4", "--lengths", "6",
                 "--samples", "10", "--seed", "1"]) == 0
    captured = capsys.readouterr()
    assert "pseudo-Anosov" in captured.err
    assert "conjugate-to-rigid" in captured.err


def test_main_experiment_witness_file(tmp_path):
    wf = tmp_path / "witness.txt"
    wf.write_text("# a long impossible witness\n" + " ".join(["1"] * 60) + "\n")
    out = tmp_path / "o.csv"
    assert main(["experiment", "pa-proportion", "--n", "4", "--lengths", "6",
                 "--samples", "15", "--seed", "1", "--witness-file", str(wf),
                 "--out", str(out)]) == 0
    rows = out.read_text().strip().split("\n")[1:]
    assert all(row.split(",")[3] == "0" for row in rows)


def test_main_paper_scheme_degenerate_length_is_parameter_error():
    # l=6 has no middle piece under the ceiling scheme
    assert main(["experiment", "rigid-proportion", "--n", "4", "--lengths", "6",
                 "--samples", "5", "--seed", "1", "--scheme", "paper"]) == 3
    assert main(["experiment", "rigid-proportion", "--n", "4", "--lengths", "5",
                 "--samples", "5", "--seed", "1", "--scheme", "paper"]) == 0


def test_main_bench_keeps_timing(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["experiment", "conjugacy-bench", "--n", "4", "--lengths", "6",
                 "--samples", "5", "--seed", "1", "--out", str(out)]) == 0
    elapsed = out.read_text().strip().split("\n")[1].split(",")[-1]
    assert float(elapsed) > 0
