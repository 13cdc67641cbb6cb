import pytest

from omexchange import harness
from omexchange.cli import main
from omexchange.core import ExplicitOracle, extract_circuits, is_embracing
from omexchange.errors import FormatError
from omexchange.graphic import GraphicOracle, build_example1, is_st_embracing
from omexchange.harness import (
    COUNTEREXAMPLE_ENV,
    Instance,
    audit,
    audit_instance,
    enumerate_digraphs,
    example1_instance,
    example2_instance,
    format_report,
    gen_affine,
    gen_graphic,
    generate_instances,
)

# unlabeled digraphs without loops or parallel arcs, all and weakly connected
# (OEIS A000273 and A003085)
ALL_DIGRAPHS = {1: 1, 2: 3, 3: 16, 4: 218, 5: 9608}
CONNECTED_DIGRAPHS = {1: 1, 2: 2, 3: 13, 4: 199, 5: 9364}


def _explicit_instance():
    D, s, t, A, B = build_example1()
    D2 = type(D)(D.n, D.arcs + ((s, t),))  # the anchor becomes arc 6
    o = GraphicOracle(D2)
    ex = ExplicitOracle(D2.m, D2.n - 1, extract_circuits(o))
    return Instance("explicit", ex, harness.ElementAnchor(6), A, B)


@pytest.mark.parametrize("make", [example1_instance, example2_instance, _explicit_instance])
def test_instance_text_roundtrip(make):
    inst = make()
    again = Instance.from_text(inst.to_text())
    assert again.to_text() == inst.to_text()
    assert again.A == inst.A and again.B == inst.B and again.anchor == inst.anchor
    assert again.instance_id == inst.instance_id


def test_instance_format_errors():
    with pytest.raises(FormatError):
        Instance.from_text("graphic\n")
    with pytest.raises(FormatError):
        Instance.from_text("kind nothing\n")
    text = example1_instance().to_text()
    with pytest.raises(FormatError):
        Instance.from_text(text.rsplit("tree", 1)[0])


def test_explicit_instance_distance_matches_graphic():
    ex = _explicit_instance()
    g = example1_instance()
    # the explicit copy adds only the anchor arc, which neither search mode may use
    r1, r2 = audit_instance(ex), audit_instance(g)
    assert r1.embracing == r2.embracing == {"union": 3, "full": 3}
    assert r1.monotone == r2.monotone


def test_gen_graphic_deterministic():
    a, b = gen_graphic(6, 9, seed=42), gen_graphic(6, 9, seed=42)
    assert a.to_text() == b.to_text()
    assert gen_graphic(6, 9, seed=43).to_text() != a.to_text()
    D, s, t = a.payload, a.anchor.source, a.anchor.target
    assert D.m == 9 and D.is_connected()
    assert is_st_embracing(D, a.A, s, t) and is_st_embracing(D, a.B, s, t)
    assert a.A != a.B


def test_gen_graphic_single_tree_falls_back():
    inst = gen_graphic(2, 1, seed=0)
    assert inst.A == inst.B


def test_gen_affine_self_check():
    inst = gen_affine(2, 6, seed=7)
    assert inst.to_text() == gen_affine(2, 6, seed=7).to_text()
    o = inst.oracle()
    a = inst.anchor
    assert is_embracing(o, inst.A, a) and is_embracing(o, inst.B, a)
    assert not set(inst.A) & set(inst.B)
    assert harness.check_general_position(inst.payload).ok


def test_generate_instances_shape():
    batch = generate_instances("graphic", 12, seed=5, n=6)
    assert [i.payload.n for i in batch[:4]] == [3, 4, 5, 6]
    assert all(i.seed == 5 + k for k, i in enumerate(batch))
    aff = generate_instances("affine", 2, seed=1)
    assert [i.payload.d for i in aff] == [2, 3]


def test_dump_on_violation(tmp_path):
    # declaring a rank below the true distance forces a bound violation
    inst = example1_instance()
    fake = Instance(inst.kind, inst.payload, inst.anchor, inst.A, inst.B, rank=2)
    rec = audit_instance(fake, dump_dir=tmp_path)
    assert rec.flagged and not rec.within_rank
    assert rec.dump_path is not None
    text = open(rec.dump_path).read()
    assert "# violation: embracing distance 3 exceeds rank 2" in text
    # the dump re-parses as the instance and reproduces the verdict
    again = Instance.from_text(text)
    assert again.to_text() == fake.to_text()
    rec2 = audit_instance(again, dump_dir=tmp_path / "again")
    assert rec2.line() == rec.line()


def test_no_dump_without_violation(tmp_path):
    rec = audit_instance(example1_instance(), dump_dir=tmp_path)
    assert not rec.flagged and rec.dump_path is None
    assert list(tmp_path.iterdir()) == []
    assert rec.theorem2 == 3 and rec.within_rank and rec.ordering_ok


def test_report_deterministic_and_parallel(tmp_path):
    batch = generate_instances("graphic", 10, seed=3, n=5)
    one = format_report(audit(batch, dump_dir=tmp_path), "graphic")
    two = format_report(audit(generate_instances("graphic", 10, seed=3, n=5), dump_dir=tmp_path), "graphic")
    par = format_report(audit(batch, dump_dir=tmp_path, workers=2), "graphic")
    assert one == two == par
    assert one.count("\n") == 11


def test_affine_report_header():
    batch = generate_instances("affine", 1, seed=0, d=2)
    report = format_report(audit(batch), "affine")
    assert harness.GENERAL_POSITION_NOTE in report.splitlines()[0]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumerate_digraph_counts(n):
    assert sum(1 for _ in enumerate_digraphs(n, connected=False)) == ALL_DIGRAPHS[n]
    assert sum(1 for _ in enumerate_digraphs(n)) == CONNECTED_DIGRAPHS[n]


@pytest.mark.slow
def test_enumerate_digraph_counts_five():
    assert sum(1 for _ in enumerate_digraphs(5, connected=False)) == ALL_DIGRAPHS[5]
    assert sum(1 for _ in enumerate_digraphs(5)) == CONNECTED_DIGRAPHS[5]


def test_anchored_enumeration_refines():
    # fixing two vertices can only split classes
    assert sum(1 for _ in enumerate_digraphs(3, anchored=True)) >= CONNECTED_DIGRAPHS[3]


def test_enumerated_audit_agrees_with_complete_reduction():
    enum, comp = harness.theorem2_audit_enumerated(3), harness.theorem2_audit_complete(3)
    assert not enum.violations and not comp.violations
    assert enum.max_length == comp.max_length == 2


def test_repro_functions():
    r1 = harness.repro_example1()
    assert r1.facts["distance"] == 3 and r1.facts["length2_candidates"] == 64
    assert r1.lines[-1] == "distance 3"
    r2 = harness.repro_example2()
    assert r2.facts["first"] == [(3, 2)] and r2.facts["candidates"] == 9
    assert not r2.facts["reach"].reachable


# -- command line -----------------------------------------------------------------


def test_cli_repro(capsys):
    assert main(["repro", "example1"]) == 0
    assert "distance 3" in capsys.readouterr().out
    assert main(["repro", "example2"]) == 0
    assert "v <-> y" in capsys.readouterr().out


def test_cli_distance_and_theorem2(tmp_path, capsys):
    path = tmp_path / "ex1.txt"
    path.write_text(example1_instance().to_text())
    assert main(["distance", str(path)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("start: ") and out.endswith("distance: 3\n")
    assert main(["distance", str(path), "--mode", "full", "--monotone"]) == 0
    assert capsys.readouterr().out.endswith("distance: 3\n")
    assert main(["distance", str(path), "--max-depth", "1"]) == 0
    assert "unknown beyond bound" in capsys.readouterr().out
    assert main(["theorem2", str(path)]) == 0
    out = capsys.readouterr().out
    assert "- 3 + 1" in out and "valid: True" in out


def test_cli_theorem2_needs_graphic(tmp_path):
    path = tmp_path / "ex2.txt"
    path.write_text(example2_instance().to_text())
    assert main(["theorem2", str(path)]) == 1


def test_cli_validate_axioms(tmp_path, capsys):
    good = tmp_path / "good.txt"
    good.write_text("ground 2 rank 1\n+ 0 ; - 1\n+ 1 ; - 0\n")
    assert main(["validate-axioms", str(good)]) == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("ground 2 rank 1\n+ 0 ; - 1\n")
    assert main(["validate-axioms", str(bad)]) == 1
    assert "FAIL" in capsys.readouterr().out
    assert main(["validate-axioms", str(tmp_path / "missing.txt")]) == 1
    garbled = tmp_path / "garbled.txt"
    garbled.write_text("+ 0 ; - 1\n")
    assert main(["validate-axioms", str(garbled)]) == 1


def test_cli_audit(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(COUNTEREXAMPLE_ENV, str(tmp_path / "dumps"))
    assert main(["audit", "--kind", "graphic", "--count", "5", "--seed", "1", "--n", "4"]) == 0
    captured = capsys.readouterr()
    assert len(captured.out.splitlines()) == 6
    assert "violations=0" in captured.err
    assert not (tmp_path / "dumps").exists()


def test_cli_audit_exit_two_on_dump(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(COUNTEREXAMPLE_ENV, str(tmp_path / "dumps"))
    real = harness.generate_instances

    def lowered(*args, **kwargs):
        return [Instance(i.kind, i.payload, i.anchor, i.A, i.B, i.seed, rank=0) for i in real(*args, **kwargs)]

    monkeypatch.setattr(harness, "generate_instances", lowered)
    assert main(["audit", "--kind", "graphic", "--count", "3", "--seed", "2", "--n", "4"]) == 2
    assert len(list((tmp_path / "dumps").iterdir())) == 3
