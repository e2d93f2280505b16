import json
import random
from fractions import Fraction

import pytest

from spinhecke import cli
from spinhecke.parser import (
    Context,
    ParseError,
    eval_text,
    render,
    specialize_element,
)


def test_golden_renderings():
    assert render(eval_text("s1*x1", Context("ahc", "A", 2))) == "x2*s1 - u - u*c1*c2"
    assert render(eval_text("t1*b1", Context("spin", "A", 2))) == "u - b2*t1"
    assert render(eval_text("z*z", Context("cover", "A", 2))) == "1"


def test_parse_errors():
    ctx = Context("ahc", "A", 2)
    for bad in ("x1 +", "x1 ** 2", "(x1", "x1 $ x2", "x1^-1", "q3"):
        with pytest.raises(ParseError):
            eval_text(bad, ctx)


def test_atom_legality_and_bounds():
    with pytest.raises(ParseError):
        eval_text("b1", Context("ahc", "A", 2))  # b is a spin letter
    with pytest.raises(ParseError):
        eval_text("x3", Context("ahc", "A", 2))  # rank bound
    with pytest.raises(ParseError):
        eval_text("s2", Context("ahc", "A", 2))  # only one simple reflection
    with pytest.raises(ParseError):
        eval_text("z", Context("ahc", "A", 2))  # z only lives in the cover
    # legal boundary cases
    eval_text("s3*c4*x4", Context("ahc", "B", 4))
    eval_text("T4*X4*z", Context("cover", "D", 4))
    eval_text("t2", Context("finite-spin", "B", 2))


def test_arithmetic_and_scalars():
    ctx = Context("ahc", "A", 3)
    assert eval_text("x1^2 - x1*x1", ctx) == eval_text("0", ctx)
    assert eval_text("i*i", ctx) == eval_text("-1", ctx)
    assert eval_text("r2*r2", ctx) == eval_text("2", ctx)
    assert eval_text("(u + v)^2", ctx) == eval_text("u^2 + 2*u*v + v^2", ctx)
    assert eval_text("1/2 * x1 * 2", ctx) == eval_text("x1", ctx)


def test_render_parse_roundtrip_random():
    rng = random.Random(71)
    specs = [
        ("ahc", "A", 3, ["x1", "x2", "x3", "c1", "c2", "c3", "s1", "s2"]),
        ("spin", "B", 2, ["b1", "b2", "t1", "t2"]),
        ("cover", "D", 4, ["X1", "X3", "T2", "T4", "z"]),
        ("lusztig", "B", 2, ["x1", "x2", "t1", "t2"]),
    ]
    for algebra, family, rank, letters in specs:
        ctx = Context(algebra, family, rank)
        for _ in range(50):
            words = []
            for _ in range(rng.randint(1, 3)):
                factors = [rng.choice(letters) for _ in range(rng.randint(1, 4))]
                if rng.random() < 0.4:
                    factors.append(rng.choice(["u", "v", "i", "r2", "3", "1/2"]))
                words.append("*".join(factors))
            src = " + ".join(words)
            val = eval_text(src, ctx)
            text = render(val)
            assert eval_text(text, ctx) == val, (algebra, src, text)
            # rendering is deterministic / canonical
            assert render(eval_text(text, ctx)) == text


def test_specialization():
    ctx = Context("ahc", "A", 2)
    val = eval_text("s1*x1", ctx)
    at2 = specialize_element(val, Fraction(2), None)
    assert render(at2) == "x2*s1 - 2 - 2*c1*c2"
    # partial specialization keeps the other parameter symbolic
    mixed = eval_text("u*x1 + v*x2", ctx)
    assert render(specialize_element(mixed, Fraction(1, 2), None)) == "v*x2 + 1/2*x1"


def test_cli_golden_and_exit_codes(capsys):
    assert cli.main(["nf", "--type", "A", "--rank", "2", "s1*x1"]) == 0
    assert capsys.readouterr().out.strip() == "x2*s1 - u - u*c1*c2"

    assert cli.main(["nf", "--algebra", "spin", "t1*b1"]) == 0
    assert capsys.readouterr().out.strip() == "u - b2*t1"

    assert cli.main(["mul", "s1", "x1"]) == 0
    assert capsys.readouterr().out.strip() == "x2*s1 - u - u*c1*c2"

    # parse errors exit with status 2
    assert cli.main(["nf", "x1 +"]) == 2
    capsys.readouterr()
    assert cli.main(["verify", "--suite", "no-such-suite"]) == 2
    capsys.readouterr()


def test_cli_json_and_map(capsys):
    assert cli.main(["nf", "--json", "x1*x1"]) == 0
    assert json.loads(capsys.readouterr().out) == {"result": "x1^2"}

    assert cli.main(["map", "--type", "A", "--rank", "2", "phi", "x1"]) == 0
    assert capsys.readouterr().out.strip() == "r2*i*c1*b1"


def test_cli_specialization_flags(capsys):
    assert cli.main(["nf", "--u", "2", "s1*x1"]) == 0
    assert capsys.readouterr().out.strip() == "x2*s1 - 2 - 2*c1*c2"


def test_cli_verify_single_suite(capsys):
    assert cli.main(["verify", "--json", "--suite", "beta-braid"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert reports and all(r["failures"] == [] for r in reports)
    for r in reports:
        assert set(r) >= {"suite", "params", "cases", "failures", "millis"}


def test_cli_verify_module_filter(capsys):
    assert cli.main(
        ["verify", "--json", "--module", "covering", "--type", "B", "--rank", "2"]
    ) == 0
    reports = json.loads(capsys.readouterr().out)
    assert {r["suite"] for r in reports} == {
        "cover-relations", "cover-assoc", "upsilon"
    }
    assert all(r["params"] == {"type": "B", "rank": 2} for r in reports)


def test_cli_list_suites(capsys):
    assert cli.main(["list-suites"]) == 0
    out = capsys.readouterr().out
    assert "beta-braid" in out and "upsilon" in out


def test_cli_cocycle_table(capsys):
    assert cli.main(["cocycle-table", "--type", "A", "--rank", "2"]) == 0
    out = capsys.readouterr().out
    assert "mu(1, 1) = +1" in out
    assert "mu(t1, t1) = +1" in out
    # distant generators anticommute, so a -1 entry shows up from rank 4 on
    assert cli.main(["cocycle-table", "--type", "A", "--rank", "4"]) == 0
    out = capsys.readouterr().out
    assert "mu(t3, t1) = -1" in out
