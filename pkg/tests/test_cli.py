import json

import jsonschema
import pytest

from bisuper.cli import load_schema, main
from bisuper.core import Signature
from bisuper.terms import normalize, parse_term
from bisuper.textio import parse_polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema("envelope"))
    jsonschema.validate(doc, load_schema(doc["command"]))
    return doc


def test_examples(capsys):
    assert run(capsys, "codim", "--n", "2")[:2] == (0, "8\n")
    assert run(capsys, "normalize", "--p", "1", "--q", "2", "(z2 (z1 y1))")[:2] == (0, "-1 * z1 z2 | y1\n")
    assert run(capsys, "gk", "--p", "3", "--q", "5")[:2] == (0, "6\n")


def test_more_commands(capsys):
    assert run(capsys, "codim", "--p", "2", "--q", "1")[1] == "6\n"
    assert run(capsys, "dim", "--p", "1", "--q", "1", "--bi", "1,1")[1] == "2\n"
    assert run(capsys, "dim", "--p", "2", "--q", "0", "--multi", "1,1;")[1] == "2\n"
    assert run(capsys, "cochar", "--lambda", "2,1", "--mu", "1")[1] == "4\n"
    assert run(capsys, "schur", "--shape", "2", "--vars", "2")[1] == "u1^2 + u1*u2 + u2^2\n"
    code, out, _ = run(capsys, "hilbert", "--p", "1", "--q", "1", "--trunc", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["deg_t,dimension", "1,2", "2,4", "3,8", "4,12"]


def test_gs_commands(capsys, tmp_path):
    ideal = tmp_path / "ideal.txt"
    ideal.write_text("# one generator\ny1|y1\n\n", encoding="utf-8")
    args = ("--ideal", str(ideal), "--p", "1", "--q", "0")
    code, out, _ = run(capsys, "gs", "dims", *args, "--max-degree", "4")
    assert code == 0 and out.splitlines() == ["1: 1", "2: 0", "3: 0", "4: 0"]
    assert run(capsys, "gs", "member", *args, "--poly", "y1^2|y1")[1] == "yes\n"
    assert run(capsys, "gs", "member", *args, "--poly", "y1")[1] == "no\n"
    assert run(capsys, "gs", "reduce", *args, "--poly", "y1^2|y1 + y1")[1] == "1 * y1\n"
    doc = run_json(capsys, "gs", "basis", *args, "--max-degree", "3")
    assert doc["result"]["staircase"] == ["y1 | y1"]
    assert doc["seed"] is None


def test_json_outputs_validate(capsys, tmp_path):
    ideal = tmp_path / "ideal.txt"
    ideal.write_text("z1|z2 + z2|z1\n", encoding="utf-8")
    gs = ("--ideal", str(ideal), "--p", "0", "--q", "2")
    cases = [
        ("normalize", "--p", "1", "--q", "2", "(z2 (z1 y1))"),
        ("identity-check", "--name", "superleft", "--trials", "5"),
        ("hilbert", "--p", "2", "--q", "1", "--grading", "multi", "--trunc", "3"),
        ("dim", "--p", "1", "--q", "1", "--n", "3"),
        ("codim", "--n", "3"),
        ("gk", "--p", "2", "--q", "2"),
        ("gs", "basis", *gs),
        ("gs", "dims", *gs, "--max-degree", "3"),
        ("gs", "reduce", *gs, "--poly", "z2|z1"),
        ("gs", "member", *gs, "--poly", "z2|z1"),
        ("cochar", "--table", "--max", "3"),
        ("cochar", "--lambda", "1", "--mu", "1"),
        ("schur", "--shape", "1,1", "--vars", "3"),
    ]
    for argv in cases:
        doc = run_json(capsys, *argv)
        expected = " ".join(argv[:2]) if argv[0] == "gs" else argv[0]
        assert doc["command"] == expected


def test_selftest(capsys):
    doc = run_json(capsys, "selftest", "--seed", "3")
    assert doc["seed"] == 3
    assert doc["result"]["all_passed"]
    assert len(doc["result"]["checks"]) == 10


def test_randomized_output_is_reproducible(capsys):
    argv = ("identity-check", "--lhs", "(a (b c))", "--rhs", "(b (a c))", "--seed", "7", "--trials", "20")
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 1
    assert out1 == out2
    assert out1.startswith("# seed: 7\n")
    assert "FAIL custom witness" in out1


def test_custom_identity_with_sign_passes(capsys):
    code, out, _ = run(capsys, "identity-check", "--lhs", "(a (b c))", "--rhs", "(b (a c))", "--sign", "a*b", "--trials", "20")
    assert code == 0 and "PASS custom" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("normalize", "--p", "1", "--q", "1", "(y1 y2)"),
        ("normalize", "--p", "1", "--q", "1", "(y1 y1 y1)"),
        ("normalize", "--p", "0", "--q", "0", "z1"),
        ("dim", "--p", "1", "--q", "1", "--bi", "0,0"),
        ("codim", "--p", "1"),
        ("cochar", "--lambda", "1", "--mu", "1", "--field", "GF(3)"),
        ("cochar", "--lambda", "1"),
        ("identity-check", "--name", "no-such-identity"),
        ("gs", "dims", "--ideal", "/nonexistent/file", "--p", "1", "--q", "0"),
    ],
)
def test_domain_errors_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error: ") and err.count("\n") == 1


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("frobnicate",),
        ("codim", "--bogus"),
        ("normalize", "--p", "1", "--q", "1", "--field", "GF(2)", "y1"),
        ("normalize", "--p", "1", "--q", "1", "--field", "char-2", "y1"),
        ("dim", "--p", "-1", "--q", "1", "--n", "2"),
        ("hilbert", "--p", "1", "--q", "1", "--grading", "tri"),
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_parse_error_reports_position(capsys, tmp_path):
    ideal = tmp_path / "ideal.txt"
    ideal.write_text("y1|y1\ny1 ^ y1\n", encoding="utf-8")
    code, _, err = run(capsys, "gs", "basis", "--ideal", str(ideal), "--p", "1", "--q", "0")
    assert code == 1
    assert ":2:" in err and "position" in err


def test_printed_polynomials_round_trip(capsys):
    sig = Signature(2, 2)
    for term in ["(z2 (z1 y1))", "((y1 z2) (z1 y2))", "((z1 z2) (y1 (y2 z1)))", "y2"]:
        doc = run_json(capsys, "normalize", "--p", "2", "--q", "2", term)
        text = doc["result"]["text"]
        code, out, _ = run(capsys, "normalize", "--p", "2", "--q", "2", term)
        assert out.strip() == text
        assert parse_polynomial(text, sig) == normalize(parse_term(term, sig), sig)


def test_byte_identical_reruns(capsys):
    argv = ("hilbert", "--p", "2", "--q", "2", "--grading", "bi", "--trunc", "5", "--format", "json")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_listing_is_not_randomized(capsys):
    code, out, _ = run(capsys, "identity-check", "--list")
    assert code == 0
    assert out.splitlines()[0] == "superleft"
    assert run_json(capsys, "identity-check", "--list")["seed"] is None
