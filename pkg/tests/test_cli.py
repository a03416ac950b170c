import json

import jsonschema
import pytest
from click.testing import CliRunner

from borromean import __version__
from borromean.cli import SCHEMAS, main
from borromean.presentation import parse_presentation
from conftest import DATA


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(args))

    return invoke


def run_json(run, schema, *args):
    result = run(*args, "--json")
    assert result.exit_code in (0, 3), result.output
    data = json.loads(result.output)
    jsonschema.validate(data, SCHEMAS[schema])
    return data


def test_version(run):
    result = run("--version")
    assert result.exit_code == 0 and __version__ in result.output


def test_wirtinger(run):
    assert run("wirtinger", "unlink3.pd").output.strip() == "< P, Q, R | >"
    assert run("wirtinger", "unknot.pd").output.strip() == "< F | >"
    out = run("wirtinger", "borromean.pd", "--simplify").output.strip()
    P = parse_presentation(out)
    assert len(P.generators) == 3 and len(P.relators) == 3


def test_bundled_name_or_path(run):
    by_path = run("wirtinger", str(DATA / "hopf.pd")).output
    by_name = run("wirtinger", "hopf.pd").output
    assert by_path == by_name


def test_h1(run):
    assert run("h1", "borromean.pd").output.strip() == "Z^3"
    assert run("h1", "poincare.pres").output.strip() == "trivial"
    assert run("h1", "unknot.pd").output.strip() == "Z"


def test_surgery(run, poincare):
    out = run("surgery", "borromean.pd", "-f", "-1,-1,-1").output
    assert parse_presentation(out).equivalent(poincare)
    raw = run("surgery", "borromean.pd", "-f", "-1,-1,-1", "--raw").output
    assert len(parse_presentation(raw).generators) == 6
    unknot = parse_presentation(run("surgery", "unknot.pd", "-f", "0").output)
    assert unknot.equivalent(parse_presentation("< F | >"))
    assert run("decide", "trivial.pres").output.strip() == "order 1"


def test_surgery_on_the_unlink_is_trivial(run, tmp_path):
    out = run("surgery", "unlink3.pd", "-f", "1,1,1").output
    path = tmp_path / "s.pres"
    path.write_text(out)
    assert run("decide", str(path)).output.strip() == "order 1"


def test_decide(run):
    assert run("decide", "puzzle.pres").output.strip() == "order 1"
    out = run("decide", "poincare.pres").output.strip()
    assert out.startswith("order 120; surjection onto A5: ")
    ab = run("decide", "poincare_ab.pres").output.strip()
    assert ab.startswith("order 120; surjection onto A5: A->(")


def test_decide_exhausted_exit_code(run):
    result = run("decide", "poincare.pres", "--max-cosets", "10")
    assert result.exit_code == 3
    assert "order unknown" in result.output


def test_decide_felsch(run):
    assert run("decide", "puzzle.pres", "--strategy", "felsch").output.strip() == "order 1"


def test_distinguish(run):
    result = run("distinguish", "unlink3.pd", "borromean.pd", "-f", "-1,-1,-1")
    assert result.exit_code == 0
    assert result.output.strip() == "DIFFERENT (order 1 vs order 120)"
    assert run("distinguish", "unlink3.pd", "unlink3.pd", "-f", "1,1,1").output.startswith("INCONCLUSIVE")
    assert run("distinguish", "unknot.pd", "unknot.pd", "-f", "1").output.startswith("INCONCLUSIVE")


def test_distinguish_is_symmetric(run):
    ab = run("distinguish", "unlink3.pd", "borromean.pd", "-f", "-1,-1,-1").output.split()[0]
    ba = run("distinguish", "borromean.pd", "unlink3.pd", "-f", "-1,-1,-1").output.split()[0]
    assert ab == ba == "DIFFERENT"
    for pair in (("hopf.pd", "hopf_r2.pd"), ("hopf_r1.pd", "hopf.pd")):
        one = run("distinguish", *pair, "-f", "1,1").output.split()[0]
        two = run("distinguish", *reversed(pair), "-f", "1,1").output.split()[0]
        assert one == two


@pytest.mark.parametrize(
    "args",
    [
        ("wirtinger", "missing.pd"),
        ("wirtinger", "puzzle.pres"),
        ("surgery", "borromean.pd", "-f", "1,1"),
        ("surgery", "borromean.pd", "-f", "a,b,c"),
        ("distinguish", "unknot.pd", "borromean.pd", "-f", "1"),
        ("decide", "missing.pres"),
        ("decide", "puzzle.pres", "--max-cosets", "0"),
    ],
)
def test_input_errors_exit_2(run, args):
    assert run(*args).exit_code == 2


def test_malformed_files(run, tmp_path):
    bad = tmp_path / "bad.pd"
    bad.write_text("X[1,2,3,4]")
    assert run("wirtinger", str(bad)).exit_code == 2
    pres = tmp_path / "bad.pres"
    pres.write_text("< a | b >")
    assert run("h1", str(pres)).exit_code == 2


def test_icosa(run):
    counts = run("icosa", "counts").output
    assert "V=12 E=30 F=20" in counts
    assert "24 vertex-axis + 15 edge-axis + 20 face-axis + 1 identity = 60" in counts
    assert run("icosa", "certify").output.strip() == (
        "rotation group ~ A5 (order 60); labels: vertex-axis=(12345), face-axis=(123), edge-axis=(23)(45)"
    )
    assert len(run("icosa", "rotations").output.strip().splitlines()) == 60
    assert len(run("icosa", "octahedra").output.strip().splitlines()) == 5


def test_icosa_export(run, tmp_path):
    assert run("icosa", "export").output.startswith("OFF\n12 20 30\n")
    out = tmp_path / "ico.json"
    assert run("icosa", "export", "--format", "json", "-o", str(out)).exit_code == 0
    data = json.loads(out.read_text())
    jsonschema.validate(data, SCHEMAS["icosa export"])


def test_json_outputs_match_schemas(run):
    data = run_json(run, "wirtinger", "wirtinger", "borromean.pd", "--simplify")
    assert len(data["presentation"]["generators"]) == 3
    assert run_json(run, "h1", "h1", "borromean.pd")["h1"]["free_rank"] == 3
    run_json(run, "surgery", "surgery", "borromean.pd", "-f", "-1,-1,-1")
    assert run_json(run, "decide", "decide", "poincare.pres")["order"] == 120
    exhausted = run_json(run, "decide", "decide", "poincare.pres", "--max-cosets", "10")
    assert exhausted["exhausted"] and exhausted["order"] is None
    verdict = run_json(run, "distinguish", "distinguish", "unlink3.pd", "borromean.pd", "-f", "-1,-1,-1")
    assert verdict["verdict"] == "DIFFERENT"
    assert [g["order"] for g in verdict["groups"]] == [1, 120]
    run_json(run, "icosa counts", "icosa", "counts")
    assert len(run_json(run, "icosa rotations", "icosa", "rotations")["rotations"]) == 60
    run_json(run, "icosa octahedra", "icosa", "octahedra")
    assert run_json(run, "icosa certify", "icosa", "certify")["ok"]

