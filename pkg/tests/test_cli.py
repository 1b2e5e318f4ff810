import json


from planewalk.cli import main
from planewalk.derivative import decide_approximable
from planewalk.fixtures import fixture
from planewalk.obstruction import obstruction_report
from planewalk.render import render_drawing, render_table, render_tower
from planewalk.report import analyze


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_xwalk_all(capsys):
    code, out, _ = run(capsys, "analyze", "XWALK", "--method", "all", "--no-timings")
    rep = json.loads(out)
    assert code == 1 and rep["verdict"] == "no"
    assert {m: r["verdict"] for m, r in rep["methods"].items() if "verdict" in r} == {
        "derivative": "no",
        "obstruction": "no",
        "oracle": "no",
    }
    assert rep["methods"]["geom"]["agrees"] and rep["consistency"]["ok"]
    assert rep["witnesses"]["transversal"]["positions"] == [1, 4]


def test_analyze_c3wind3_notes_gap(capsys):
    code, out, _ = run(capsys, "analyze", "C3WIND(3)", "--method", "all", "--no-timings")
    rep = json.loads(out)
    assert code == 1
    assert rep["methods"]["derivative"]["verdict"] == "no"
    assert rep["methods"]["obstruction"]["verdict"] == "inconclusive"
    assert rep["methods"]["obstruction"]["zero"]
    assert any("completeness gap" in n for n in rep["notes"])


def test_analyze_backforth(capsys):
    code, out, _ = run(capsys, "analyze", "BACKFORTH", "--no-timings")
    assert code == 0 and json.loads(out)["verdict"] == "yes"
    assert set(json.loads(out)["methods"]) == {"derivative", "obstruction", "geom"}


def test_report_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "analyze", "XWALK", "--no-timings", "--json", str(a))
    run(capsys, "analyze", "XWALK", "--no-timings", "--json", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_degree(capsys):
    assert run(capsys, "degree", "C3WIND(-2)")[1].strip() == "-2"
    assert run(capsys, "degree", "THETACYCLE")[1].strip() in ("1", "-1")
    assert run(capsys, "degree", "C3WIND(1)")[1].strip() == "1"


def test_disjoint(capsys):
    code, out, _ = run(capsys, "disjoint", "PAIRX", "--no-timings")
    assert code == 1 and json.loads(out)["verdict"] == "no"
    code, out, _ = run(capsys, "disjoint", "PAIRPAR", "--no-timings")
    assert code == 2 and json.loads(out)["verdict"] == "inconclusive"
    code, out, _ = run(capsys, "disjoint", "PAIRPAR", "--method", "oracle", "--no-timings")
    assert code == 0 and json.loads(out)["methods"]["oracle"]["verdict"] == "yes"
    code, out, _ = run(capsys, "disjoint", "XSPLIT", "--no-timings")
    assert code == 1


def test_errors_exit_3(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"graph": ')
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 3 and "InputSyntaxError" in err
    code, _, err = run(capsys, "analyze", "NOSUCHFIXTURE")
    assert code == 3
    code, _, err = run(capsys, "degree", "XWALK")
    assert code == 3


def test_fixtures_listing(capsys):
    out = run(capsys, "fixtures")[1].split()
    assert "XWALK" in out and "PAIRX" in out


def test_render_files(tmp_path, capsys):
    for what in ("drawing", "tower", "table"):
        code, out, _ = run(capsys, "render", "XWALK", "--what", what, "--out", str(tmp_path))
        assert code == 0 and (tmp_path / f"{what}.svg").exists()


def test_table_svg_marks_cells():
    svg = render_table(obstruction_report(fixture("XWALK")))
    assert svg.count('class="cell black') == 2
    assert 'data-cell="1,3"' in svg and 'data-cell="3,5"' in svg
    assert '<text class="parity" data-cell="2,5"' in svg
    i = svg.index('<text class="parity" data-cell="2,5"')
    assert svg[svg.index(">", i) + 1] == "1"


def test_tower_of_c3wind2_has_two_triangle_levels():
    dec = decide_approximable(fixture("C3WIND(2)"))
    svg = render_tower(dec)
    assert svg.count('class="level"') == len(dec.trace.levels)
    assert svg.count('class="edge"') == 3 * len(dec.trace.levels)


def test_path_drawing():
    svg = render_drawing(fixture("PATH3"))
    assert svg.count('class="vertex"') == 4 and svg.count('class="edge"') == 3
    assert svg == render_drawing(fixture("PATH3"))


def test_layout_without_coordinates():
    from planewalk.derivative import derive
    svg = render_drawing(derive(fixture("STARPASS")))
    assert svg.count('class="vertex"') == 3


def test_analyze_flags_violation(monkeypatch):
    import planewalk.report as report
    from planewalk.derivative import Decision, DerivativeTrace

    monkeypatch.setattr(report, "decide_approximable", lambda inst: Decision("yes", "Injective", trace=DerivativeTrace()))
    rep = analyze(fixture("XWALK"), ["derivative", "obstruction"], timings=False)
    assert not rep["consistency"]["ok"]
    assert report.exit_code(rep) == 4
