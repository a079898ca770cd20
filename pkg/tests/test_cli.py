import json

import pytest

from app.cli import (
    EXIT_BAD_INPUT,
    EXIT_OK,
    EXIT_USAGE,
    SessionConfig,
    build_tables,
    fdeg_report,
    render_rows,
    run,
)
from app.errors import InvalidOperand


def run_json(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if code == EXIT_OK else out


def test_fdeg_value_at_q0(capsys):
    """Testar att fdeg(π_α(η2;χ)) vid q0 = 3 blir (3/64)·√3."""
    code, data = run_json(capsys, "fdeg", "--group", "GSp4", "--rep", "pi_alpha_eta2", "--q0", "3")
    assert code == EXIT_OK
    assert data["schema"] == "v1"
    assert data["value"]["text"] == "(3/64)*sqrt(3)"
    assert data["name"] == "π_α(η2;χ)"


def test_fdeg_positive_depth_datum(capsys, tmp_path):
    """Testar gradformeln för positivt djup via en JSON-fil."""
    path = tmp_path / "datum.json"
    path.write_text(json.dumps({
        "dim_rho": "1", "index": "1", "dim_g": 10, "dim_g0": 2,
        "depths": ["1/2", "1/2"], "root_counts": [0, 8],
    }))
    code, data = run_json(capsys, "fdeg", "--group", "Sp4", "--datum", str(path), "--q0", "2")
    assert code == EXIT_OK
    assert data["exponent"] == "8"
    assert data["value"]["text"] == "256"


def test_tables_weyl(capsys):
    """Testar att Weyltabellen har fem klasser."""
    code, data = run_json(capsys, "tables", "--group", "Sp4", "--weyl")
    assert code == EXIT_OK
    assert len(data["weyl"]) == 5
    assert "orbits" not in data


def test_tables_default_sections():
    """Testar standardsektionerna och att okända sektioner avvisas."""
    report = build_tables("GSp4")
    assert report.root_datum is not None and report.parahoric is not None
    assert report.springer is None
    with pytest.raises(InvalidOperand):
        build_tables("GSp4", ["nonsense"])


def test_classify_preset(capsys):
    """Testar att fall 7b(iii) med η ger ett paket med fyra medlemmar."""
    code, data = run_json(capsys, "classify", "--preset", "sp4-case-7biii-eta")
    assert code == EXIT_OK
    assert data["packet"]["size"] == 4
    assert data["centralizer"]["group"] == "Sp4"


def test_packet_restrict(capsys):
    """Testar restriktion av ett GSp4-paket till Sp4."""
    code, data = run_json(capsys, "packet", "--preset", "gsp4-case-1", "--restrict")
    assert code == EXIT_OK
    assert data["group"] == "GSp4"
    assert data["restriction"]


def test_reduce_torus(capsys):
    """Testar νη2 × η2 ⋊ 1 på GSp4 via kommandoraden."""
    code, data = run_json(
        capsys, "reduce", "--group", "GSp4", "--levi", "T",
        "--chi1", "nu*eta2", "--chi2", "eta2", "--theta", "1",
    )
    assert code == EXIT_OK
    assert data["case"] == "1aiv"
    assert data["length"] == 4


def test_stability_gsp4(capsys):
    """Testar att GSp4-kandidaterna ger två stabila par."""
    code, data = run_json(capsys, "stability", "--set", "gsp4")
    assert code == EXIT_OK
    assert len(data["subsets"]) == 2
    assert all(len(s["members"]) == 2 for s in data["subsets"])


def test_selfcheck_exit_code(capsys):
    """Testar att självkontrollen avslutar med 0."""
    code, data = run_json(capsys, "selfcheck")
    assert code == EXIT_OK
    assert data["failed"] == 0


def test_unknown_subcommand(capsys):
    """Testar att okänt eller saknat underkommando ger 64."""
    assert run(["frobnicate"]) == EXIT_USAGE
    assert run([]) == EXIT_USAGE
    assert "unknown subcommand" in capsys.readouterr().err


def test_bad_preset_exit_code(capsys):
    """Testar att en okänd förinställning ger 2 och ett JSON-fel på stderr."""
    assert run(["classify", "--preset", "sp4-case-99"]) == EXIT_BAD_INPUT
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["error"] == "invalid_operand"


def test_malformed_descriptor_file(capsys, tmp_path):
    """Testar att trasig JSON och fel fält ger 2 med malformed_descriptor."""
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(["classify", "--descriptor", str(broken)]) == EXIT_BAD_INPUT
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"group": "Sp4", "summands": "none"}))
    assert run(["classify", "--descriptor", str(wrong)]) == EXIT_BAD_INPUT
    errs = [json.loads(line) for line in capsys.readouterr().err.strip().splitlines() if line.startswith("{")]
    assert {e["error"] for e in errs} == {"malformed_descriptor"}


def test_missing_file(capsys, tmp_path):
    """Testar att en fil som saknas ger 2."""
    assert run(["stability", "--candidates", str(tmp_path / "none.json")]) == EXIT_BAD_INPUT


def test_table_format(capsys):
    """Testar tabellformatet för Weylklasserna."""
    code = run(["tables", "--group", "GSp4", "--weyl", "--format", "table"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "[weyl]" in out
    assert "torsion_rank" in out


def test_session_fixture(session):
    """Testar att sessionen bär etiketterna och utvärderingspunkten."""
    report = fdeg_report("Sp4", "pi_alpha_theta", session.q0)
    assert report.value.text == "3/16"
    assert session.labels.parse("zeta").render() == "zeta"
    assert isinstance(session, SessionConfig)


def test_render_rows():
    """Testar den justerade tabellen."""
    text = render_rows([{"a": 1, "b": True}, {"a": 22, "c": [1, 2]}])
    lines = text.splitlines()
    assert lines[0].split() == ["a", "b", "c"]
    assert "yes" in lines[2]
    assert "1, 2" in lines[3]
    assert render_rows([]) == "(empty)"
