import pytest

import alias_calc as ac


def test_assignment_joins_source_aliases():
    a = ac.AliasRelation("{b,c,x},{f,g,x},{y,z}")
    r = ac.analyze(ac.parse("z := f"), a)
    assert str(r) == "{b, c, x}, {f, g, x, z}"
    assert r.contains("z", "g")
    assert not r.contains("z", "y")


def test_recursive_program():
    src = """
procedure Main
  then x := y else x := a ; call q end
end
procedure q
  x := b ; then call Main else a := c end
end
"""
    r = ac.analyze(ac.parse(src))
    assert r.cliques() == [["a", "c"], ["b", "x"], ["x", "y"]]


def test_must_mode_is_contained_in_may():
    p = ac.parse("then x := y else x := y ; z := y end")
    must = ac.analyze(p, mode="must")
    assert str(must) == "{x, y}"
    assert must.issubset(ac.analyze(p))


def test_qualified_call():
    src = "procedure Main\n  l := m\n  call x.r (l)\nend\nprocedure r (f)\n  c := f\nend\n"
    p = ac.parse(src)
    assert str(ac.analyze(p)) == "{l, m, x.c}"
    assert str(ac.analyze(p, keep_formals=True)) == "{l, m, x.c, x.f}"


def test_trace_points():
    p = ac.parse("x := y ; y := z")
    points = [(name, str(r)) for name, r in ac.trace(p)]
    assert points == [("Main:1", "{x, y}"), ("Main:2", "{y, z}")]


def test_modified_vars():
    p = ac.parse("then x := y else x := z ; u := x end")
    assert ac.modified_vars(p) == {"Main": ["x"]}


def test_soundness_report():
    report = ac.check_soundness(ac.parse("then x := y else x := z end", "e0"))
    assert report.ok
    assert report.paths == 2
    assert str(report).endswith("checked 2 paths, 0 violations, bounded: no\n")


def test_parse_error_carries_location():
    with pytest.raises(ac.ParseError, match=r"^1:1: .*setter"):
        ac.parse("x.a := y")
    with pytest.raises(ValueError):
        ac.parse("call r", "e0")


def test_path_expressions():
    e = ac.PathExpr("x.a")
    assert e.dot_count() == 1
    assert str(e.inverse()) == "a'.x'"
    assert str(ac.PathExpr("x") / ac.PathExpr("x'.y")) == "y"
