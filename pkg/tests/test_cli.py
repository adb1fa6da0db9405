import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from ttl.cli import main, parse_poly
from ttl.cli.app import dump_json, render_text
from ttl.cli.verify import verify_payload
from ttl.errors import ParseError
from ttl.exact import Polynomial


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# -- parser -------------------------------------------------


def test_parse_examples():
    assert parse_poly("x^3 - 2").coeffs == (-2, 0, 0, 1)
    assert parse_poly("x^3-3x-1").coeffs == (-1, -3, 0, 1)
    assert parse_poly("1/2*x^2 - 3 x + 2/4").coeffs == (0.5, -3, 0.5)
    assert parse_poly("- x").coeffs == (0, -1)
    assert parse_poly("x + x").coeffs == (0, 2)


@pytest.mark.parametrize(
    "text, pos",
    [("x^2 + + 1", 6), ("", 0), ("x^2 + y", 6), ("x^", 2), ("2 *", 3), ("x x", 2), ("3/0", 2)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_poly(text)
    assert exc.value.position == pos


@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=9), min_size=1, max_size=8))
def test_print_parse_round_trip(cs):
    f = Polynomial(cs)
    if f.is_zero():
        return
    assert parse_poly(str(f)) == f


# -- commands -------------------------------------------------


def test_analyze_json(capsys):
    code, out, _ = run(["analyze", "x^3-2", "--g", "3"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"schema_version", "command", "inputs", "results", "certificates"}
    assert rep["schema_version"] == "1"
    assert rep["results"]["classification"]["aut_rank"] == 1
    assert rep["inputs"]["poly"] == ["-2", "0", "0", "1"]


def test_analyze_cyclic_cubic(capsys):
    code, out, _ = run(["analyze", "x^3-3x-1", "--g", "3"], capsys)
    cls = json.loads(out)["results"]["classification"]
    assert code == 0 and cls["aut_rank"] == 2 and cls["two_simple"] is True


def test_analyze_reducible_exit_4(capsys):
    code, _, err = run(["analyze", "x^4-1"], capsys)
    assert code == 4 and "reducible" in err


def test_analyze_g2_note(capsys):
    code, out, _ = run(["analyze", "x^3-2", "--g", "2"], capsys)
    assert code == 0
    assert "every 2-dimensional complex torus is 2-simple" in json.loads(out)["results"]["notes"]


def test_parse_error_exit_2(capsys):
    code, _, err = run(["analyze", "x^2 + + 1"], capsys)
    assert code == 2 and "position 6" in err


def test_degree_bound_exit_3(capsys):
    code, _, _ = run(["analyze", "x^9 - 2"], capsys)
    assert code == 3
    code, out, _ = run(["analyze", "x^9 - 2", "--max-degree", "9"], capsys)
    assert code == 0


def test_synthesize(capsys):
    code, out, _ = run(["synthesize", "--n", "3", "--r", "1", "--s", "1", "--verify"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["results"]["self_verified"]
    code, out, _ = run(["synthesize", "--g", "5", "--d", "4"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["results"]["field"]["r"] == 5
    code, _, _ = run(["synthesize", "--n", "3", "--r", "2", "--s", "0"], capsys)
    assert code == 2


def test_hodge(capsys):
    code, out, _ = run(["hodge", "--g", "3", "--degree", "6", "--r", "0", "--s", "3"], capsys)
    table = json.loads(out)["results"]["tables"][0]
    assert code == 0 and table["count"] == 8 and all(r["h20_dim"] == 0 for r in table["rows"])
    code, out, _ = run(["hodge", "--g", "3", "--degree", "2"], capsys)
    notes = json.loads(out)["results"]["notes"]
    assert code == 0 and any("incompatible" in n for n in notes)
    code, _, _ = run(["hodge", "--g", "3", "--degree", "4"], capsys)
    assert code == 2


def test_h2(capsys):
    code, out, _ = run(["h2", "--g", "3", "--case", "degree_g", "--group", "(0 1 2)"], capsys)
    res = json.loads(out)["results"]
    assert code == 0 and res["invariant_dim"] == 3 and res["moving_summands"] == [12] and res["two_simple"]
    code, _, _ = run(["h2", "--g", "3", "--case", "degree_g", "--group", "(0 1)"], capsys)
    assert code == 2


def test_lie(capsys):
    code, out, _ = run(["lie", "bor-tabs", "--g", "10"], capsys)
    assert code == 0 and "A5 exterior power (j=3)" in json.loads(out)["results"]["labels"]
    code, out, _ = run(["lie", "wedge2-scan", "--m-max", "5"], capsys)
    assert code == 0 and json.loads(out)["results"]["g"] == 10
    code, _, err = run(["lie", "bor-tabs", "--g", "4"], capsys)
    assert code == 3 and "PowerGuard" in err
    code, _, _ = run(["lie", "weyl", "--rank", "5"], capsys)
    assert code == 2


def test_permgrp(capsys):
    code, out, _ = run(["permgrp", "affine-half 7"], capsys)
    res = json.loads(out)["results"]
    assert code == 0 and res["order"] == 21 and res["two_set_transitive"] and not res["two_transitive"]


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["lie", "nonsense"]) == 2
    capsys.readouterr()


def test_text_is_rendering_of_json(capsys):
    _, js, _ = run(["lie", "weyl", "--rank", "5", "--weight", "0,1,0,1,0"], capsys)
    _, txt, _ = run(["lie", "weyl", "--rank", "5", "--weight", "0,1,0,1,0", "--text"], capsys)
    assert txt == render_text(json.loads(js)) + "\n"
    assert "dim: 189" in txt


def test_byte_stable(capsys):
    _, a, _ = run(["analyze", "x^5-2", "--g", "5"], capsys)
    _, b, _ = run(["analyze", "x^5-2", "--g", "5"], capsys)
    assert a == b
    assert dump_json(json.loads(a)) == a


def test_verify_round_trip(tmp_path, capsys):
    _, out, _ = run(["analyze", "x^3-3x-1", "--g", "3"], capsys)
    path = tmp_path / "r.json"
    path.write_text(out)
    code, vout, _ = run(["verify", str(path)], capsys)
    assert code == 0 and json.loads(vout)["results"]["verified"]
    rep = json.loads(out)
    rep["results"]["classification"]["aut_rank"] = 7
    rep["certificates"][-1]["aut_rank"] = 7
    path.write_text(json.dumps(rep))
    code, _, _ = run(["verify", str(path)], capsys)
    assert code == 4


def test_verify_malformed(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"command": "x"}))
    code, _, _ = run(["verify", str(path)], capsys)
    assert code == 4
    with pytest.raises(ValueError):
        verify_payload({"schema_version": "2", "command": "", "inputs": {}, "results": {}, "certificates": []})


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-c", "import sys; from ttl.cli import main; sys.exit(main(['lie', 'sp-wedge2', '--g', '3']))"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["results"]["irreducible_dim"] == 14
