import json

import pytest

from qzassenhaus.cli import main
from qzassenhaus.disentangler import (
    classical_limit,
    derive_qbch,
    derive_zassenhaus,
    transform_variant,
)
from qzassenhaus.export import dumps, loads, to_document, to_latex


def _all_factorizations(N=4):
    esc = derive_zassenhaus("escalating", N)
    yield esc
    yield derive_zassenhaus("uniform", N)
    yield derive_qbch(N)
    yield classical_limit(esc)
    yield transform_variant(esc, "e_lower")
    yield transform_variant(esc, "E_upper")


@pytest.mark.parametrize("f", list(_all_factorizations()), ids=lambda f: f"{f.variant}-{f.convention}")
def test_round_trip(f):
    assert loads(dumps(f)) == f


def test_document_schema():
    doc = to_document(derive_zassenhaus("escalating", 2), {"seed": 1}, timestamp="T")
    assert doc["qzx-format-version"] == 1
    assert doc["factors"] == [
        {"grade": 2, "base": 2, "exponent": [["AB", "-q", "1 + q"], ["BA", "1", "1 + q"]]}]
    assert doc["provenance"]["timestamp"] == "T"
    assert doc["provenance"]["config"] == {"seed": 1}


def test_bad_version():
    doc = to_document(derive_zassenhaus("escalating", 2))
    doc["qzx-format-version"] = 2
    with pytest.raises(ValueError):
        loads(json.dumps(doc))


def test_latex_deterministic():
    f = derive_zassenhaus("escalating", 3)
    assert to_latex(f) == to_latex(loads(dumps(f)))
    assert r"e_{q^{2}}^{x^{2}\left(-\frac{q}{1 + q}\,AB + \frac{1}{1 + q}\,BA\right)}" in to_latex(f)


def test_cli_derive_json(capsys):
    assert main(["derive", "--variant", "escalating", "--order", "4", "--format", "json"]) == 0
    f = loads(capsys.readouterr().out)
    assert f.exponent(2) == derive_zassenhaus("escalating", 2).exponent(2)
    assert f.order == 4


def test_cli_uniform_c2_matches(capsys):
    main(["derive", "--variant", "uniform", "--order", "2", "--format", "json"])
    uni = loads(capsys.readouterr().out)
    assert uni.exponent(2) == derive_zassenhaus("escalating", 2).exponent(2)


def test_cli_text_prints_C2(capsys):
    main(["derive", "--order", "4"])
    out = capsys.readouterr().out
    assert "grade 2, base q^2: -q/(1 + q)*AB + 1/(1 + q)*BA" in out


def test_cli_order_out_of_range(capsys):
    assert main(["derive", "--order", "99"]) == 2
    assert "[2, 10]" in capsys.readouterr().err


def test_cli_order_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("QZX_MAX_ORDER", "3")
    assert main(["derive", "--order", "4"]) == 2


def test_cli_verify_symbolic(capsys):
    assert main(["verify", "--symbolic", "--order", "4"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "PASS" in out


def test_cli_verify_numeric(capsys):
    assert main(["verify", "--numeric", "--order", "4", "--q", "0.7", "--seed", "42"]) == 0
    out = capsys.readouterr().out
    assert "slope" in out and "4.5" in out


def test_cli_verify_rejects_q_one(capsys):
    assert main(["verify", "--numeric", "--q", "1.0"]) == 2


def test_cli_limit_from_file(tmp_path, capsys):
    path = tmp_path / "esc.json"
    assert main(["derive", "--order", "4", "--format", "json", "-o", str(path)]) == 0
    assert main(["limit", "--input", str(path), "--format", "json"]) == 0
    g = loads(capsys.readouterr().out)
    assert g.variant == "classical"
    assert g.exponents() == classical_limit(derive_zassenhaus("escalating", 4)).exponents()


def test_cli_limit_qbch(capsys):
    assert main(["limit", "--variant", "qbch", "--order", "3"]) == 0
    out = capsys.readouterr().out
    assert "Z2 = 1/2*AB - 1/2*BA" in out
    assert "1/12*AAB" in out


def test_cli_limit_needs_source(capsys):
    assert main(["limit"]) == 2


def test_cli_report(capsys):
    assert main(["report"]) == 0
    out = capsys.readouterr().out
    assert "KRS c4: MISMATCH" in out
    assert "escalating C4: match" in out
