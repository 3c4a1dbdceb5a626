import csv
import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cgg.bounds import f_max, valid_params
from cgg.cli import fmax_table, main
from cgg.constructions import construct_gnk, construct_gnkl
from cgg.core import Cgg, Labelling
from cgg.errors import ParseError, UnsupportedVersionError
from cgg.io import parse, parse_document, serialize
from cgg.render import render_svg

from make_golden import GOLDEN, golden_outputs


def test_round_trip_example():
    g = construct_gnk(10, 2)
    text = serialize(g, {"construction": "Gnk", "k": 2, "q": 6})
    doc = parse_document(text)
    assert doc.graph == g and doc.meta["k"] == 2
    assert serialize(doc.graph, doc.meta) == text


@settings(max_examples=100, deadline=None)
@given(st.integers(4, 14), st.sampled_from(["odd", "even"]), st.data())
def test_round_trip_random(n, parity, data):
    ck = sorted(Cgg.complete(n, parity).edges)
    keep = data.draw(st.lists(st.booleans(), min_size=len(ck), max_size=len(ck)))
    g = Cgg(Labelling(n, parity), frozenset(e for e, b in zip(ck, keep) if b))
    assert parse(serialize(g)) == g


def test_serialized_form_is_canonical():
    text = serialize(Cgg.from_pairs(6, [(5, -5), (1, 3)]))
    assert text == '{"edges": [[-5, 5], [1, 3]], "n": 6, "parity": "odd", "schemaVersion": "1"}\n'


def doc(**over):
    base = {"schemaVersion": "1", "n": 6, "parity": "odd", "edges": [[1, 3]]}
    base.update(over)
    return json.dumps(base)


def test_parity_error():
    with pytest.raises(ParseError) as info:
        parse(doc(edges=[[2, -3]]))
    assert info.value.field == "edges[0]"


def test_unsupported_version():
    with pytest.raises(UnsupportedVersionError):
        parse(doc(schemaVersion="999"))


@pytest.mark.parametrize("text, field", [
    (doc(edges=[[1, 13]]), "edges[0]"),
    (doc(edges=[[1, 3], [3, 1]]), "edges[1]"),
    (doc(edges=[[1]]), "edges[0]"),
    (doc(n=2), "n"),
    (doc(parity="both"), "parity"),
    (doc(extra=1), "$"),
    (doc(meta=[1]), "meta"),
    (json.dumps({"n": 6}), "schemaVersion"),
])
def test_parse_errors_carry_field(text, field):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.field == field


def test_malformed_json_has_line():
    with pytest.raises(ParseError) as info:
        parse('{\n"n": 6,\n"edges": [\n')
    assert info.value.line is not None


@pytest.mark.parametrize("name", sorted(golden_outputs()))
def test_golden_files(name):
    first, second = golden_outputs()[name], golden_outputs()[name]
    assert first == second
    assert (GOLDEN / name).read_bytes() == first.encode("utf-8")


def test_svg_content():
    text = (GOLDEN / "gnk_12_3.svg").read_text()
    assert text.count('class="dashed"') == 6 and text.count("<line") == 36
    assert text.count('fill="#c00"') == 2 * 6
    empty = render_svg(Cgg.empty(7))
    assert "<line" not in empty and empty.count("<text") == 7


def test_gnkl_svg_draws_dropped_edges():
    text = (GOLDEN / "gnkl_13_3_2.svg").read_text()
    g = construct_gnkl(13, 3, 2)
    assert text.count("<line") > len(g)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_fmax(capsys):
    code, out, _ = run(capsys, "fmax", "--n", "12", "--k", "3", "--q", "8")
    assert code == 0 and out.startswith("33") and "clause 2" in out
    code, out, _ = run(capsys, "fmax", "--n", "12", "--k", "3", "--q", "8", "--json")
    assert json.loads(out) == {"value": 33, "clause": 2, "ell": 2}


def test_cli_construct_then_verify(tmp_path, capsys):
    path = tmp_path / "g.json"
    code, _, _ = run(capsys, "construct", "--n", "10", "--k", "2", "--format", "json", "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "verify", str(path), "--k", "2")
    assert code == 0 and out.strip().endswith("PASS")
    code, out, _ = run(capsys, "verify", str(path), "--k", "1", "--json")
    assert code == 1 and json.loads(out)["passed"] is False


def test_cli_construct_stdout(capsys):
    code, out, _ = run(capsys, "construct", "--n", "12", "--k", "3", "--ell", "2")
    assert code == 0 and len(parse(out)) == 33
    code, out, _ = run(capsys, "construct", "--n", "10", "--k", "2", "--format", "dot")
    assert code == 0 and out.startswith("graph")
    code, out, _ = run(capsys, "construct", "--n", "10", "--k", "2", "--q", "8", "--format", "svg")
    assert code == 0 and out.startswith("<?xml")


def test_cli_search(capsys):
    code, out, _ = run(capsys, "search", "--n", "6", "--k", "1", "--q", "4")
    assert code == 0 and "optimum 6" in out and "matches" in out
    code, out, _ = run(capsys, "search", "--n", "6", "--k", "1", "--q", "4", "--json")
    assert json.loads(out)["optimum"] == 6
    code, _, _ = run(capsys, "search", "--n", "8", "--k", "3", "--q", "2", "--budget", "10")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["fmax", "--n", "12", "--k", "6", "--q", "3"],
    ["fmax", "--n", "12"],
    ["construct", "--n", "12", "--k", "3", "--ell", "1", "--q", "7"],
    ["verify", "/nonexistent/file.json", "--k", "2"],
    ["table", "--n-max", "2"],
    ["bogus"],
    [],
])
def test_cli_usage_errors(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    _, err = capsys.readouterr()
    assert code == 2 and "Traceback" not in err and err


def test_cli_verify_bad_document(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(doc(edges=[[2, -3]]))
    code, _, err = run(capsys, "verify", str(path), "--k", "1")
    assert code == 2 and "edges[0]" in err


def test_table_matches_f_max(capsys):
    for row in fmax_table(14):
        for q, v in row["values"].items():
            assert v == f_max(row["n"], row["k"], q).value
        assert set(row["values"]) == {q for q in range(1, 14) if valid_params(row["n"], row["k"], q)}
    code, out, _ = run(capsys, "table", "--n-max", "10", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:3] == ["n", "k", "q=1"]
    assert code == 0 and len(rows) == 1 + sum(n // 2 - 1 for n in range(4, 11))
    for r in rows[1:]:
        n, k = int(r[0]), int(r[1])
        for q, cell in enumerate(r[2:], start=1):
            assert cell == (str(f_max(n, k, q).value) if valid_params(n, k, q) else "")
    code, out, _ = run(capsys, "table", "--n-max", "8", "--json")
    assert code == 0 and json.loads(out)[0] == {"n": 4, "k": 1, "f": {"1": 4, "2": 4, "3": 3}}
    code, out, _ = run(capsys, "table", "--n-max", "6")
    assert code == 0 and out.splitlines()[0].startswith("  n  k |")


@pytest.mark.parametrize("n", range(4, 15))
def test_every_construct_output_verifies(n, tmp_path, capsys):
    for k in range(1, n // 2):
        for q in range(1, n):
            path = tmp_path / f"{n}_{k}_{q}.json"
            assert main(["construct", "--n", str(n), "--k", str(k), "--q", str(q), "--out", str(path)]) == 0
            assert main(["verify", str(path), "--k", str(k)]) == 0
            report = capsys.readouterr().out
            assert "attains f_max" in report
