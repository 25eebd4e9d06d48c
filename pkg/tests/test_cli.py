"""CLI behaviour: subcommands, JSON output, exit codes, determinism."""
import json

import pytest

from octica.cli import main
from octica.parsing import ParseError, parse_poly


@pytest.fixture
def constraint_file(tmp_path):
    path = tmp_path / "quadruple.json"
    path.write_text(json.dumps({
        "degree": 8,
        "conditions": [{"kind": "multiplicity", "point": ["0", "0", "1"], "order": 4}],
    }))
    return str(path)


@pytest.fixture
def family_file(tmp_path):
    path = tmp_path / "family.json"
    path.write_text(json.dumps({
        "degree": 8, "nn_order": 3, "parameter": "t",
        "extra_conditions": [{"kind": "multiplicity", "point": ["1", "0", "0"], "order": 4}],
        "kernel_at": ["0", "1"],
        "witness_line": "y",
    }))
    return str(path)


def test_parse_poly_examples():
    assert str(parse_poly("x^3 + x*y^3")) == "x*y^3 + x^3"
    assert str(parse_poly("x^8")) == "x^8"
    with pytest.raises(ParseError) as err:
        parse_poly("x +* y")
    assert "position" in str(err.value)
    with pytest.raises(ParseError):
        parse_poly("x + q")


def test_roundtrip_print_parse():
    texts = ["x^3 + x*y^3", "y*z - 2*x^2", "3*x^2*y - 1/2*z^3 + y^3"]
    for text in texts:
        canonical = str(parse_poly(text))
        assert str(parse_poly(canonical)) == canonical


def test_linsys_command(capsys, constraint_file):
    from octica.schemas import LINSYS_OUTPUT_SCHEMA, validate
    assert main(["linsys", "--constraints", constraint_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim_forms"] == 35
    validate(data, LINSYS_OUTPUT_SCHEMA)


def test_classify_command(capsys):
    from octica.schemas import REPORT_OUTPUT_SCHEMA, validate
    assert main(["classify", "--curve", "x^4+x^2*y^2+y^4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["type"] == "X9"
    assert data["milnor"] == 9
    validate(data, REPORT_OUTPUT_SCHEMA)


def test_classify_at_point(capsys):
    assert main(["classify", "--curve", "x*y*z", "--point", "0,0,1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["type"] == "A1"


def test_param_analyze_command(capsys, family_file):
    assert main(["param-analyze", "--family", family_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["generic_rank"] == 10
    assert data["rank_drop_locus"] == "t"
    at0, at1 = data["kernels"]
    assert (at0["special_dim"], at0["limit_dim"], at0["strict"]) == (24, 23, True)
    assert (at0["special_multiplicity"], at0["limit_multiplicity"]) == (1, 2)
    assert at1["special_dim"] == at1["limit_dim"] == 23


def test_catalog_json(capsys):
    from octica.schemas import CATALOGUE_OUTPUT_SCHEMA, validate
    assert main(["catalog", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["totals"]["strata"] == 47
    assert data["totals"]["components"] == 78
    inhabited = [s for s in data["strata"] if not s["empty"]]
    assert len(inhabited) == 78
    validate(data, CATALOGUE_OUTPUT_SCHEMA)


def test_diagram_command(tmp_path, capsys):
    out = tmp_path / "fig.dot"
    assert main(["diagram", "--scope", "simply-elliptic", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.count("->") == 29
    assert text.startswith("digraph")


def test_outputs_deterministic(capsys, constraint_file):
    main(["linsys", "--constraints", constraint_file, "--basis"])
    first = capsys.readouterr().out
    main(["linsys", "--constraints", constraint_file, "--basis"])
    second = capsys.readouterr().out
    assert first == second

    main(["catalog", "--format", "json"])
    a = capsys.readouterr().out
    main(["catalog", "--format", "json"])
    b = capsys.readouterr().out
    assert a == b


def test_user_errors_exit_1(capsys, tmp_path):
    assert main(["classify", "--curve", "x +* y"]) == 1
    err = capsys.readouterr().err
    assert "position" in err

    assert main(["--json-errors", "classify", "--curve", "x + q"]) == 1
    err = capsys.readouterr().err
    payload = json.loads(err)
    assert payload["error"] == "user"

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["linsys", "--constraints", str(bad)]) == 1

    malformed = tmp_path / "malformed.json"
    malformed.write_text(json.dumps({"degree": 8, "conditions": [{"kind": "mystery"}]}))
    assert main(["linsys", "--constraints", str(malformed)]) == 1


def test_verify_single_lemma(capsys):
    assert main(["verify", "--lemma", "degree-bounds"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["degree-bounds"]["passed"]
    assert main(["verify", "--lemma", "no-such-lemma"]) == 1
