"""Enumeration counts, suite reports, determinism, hunting, fixtures, and the
command-line surface."""

import json

import pytest

from ordertop import labcli, latid
from ordertop.finstruct import Qoset, Topology, ValidationError, encode
from ordertop.labcli import (
    FAULTS,
    HypothesisSpec,
    SuiteSpec,
    enumerate_instances,
    fixtures,
    hunt,
    main,
    run_suite,
)

SIER = Topology(2, (0, 2, 3))


# ---------------------------------------------------------------- counts

def test_poset_counts():
    assert [len(labcli.posets(n)) for n in range(6)] == [1, 1, 3, 19, 219, 4231]


def test_qoset_and_topology_counts_agree():
    assert [len(labcli.qosets(n)) for n in range(5)] == [1, 1, 4, 29, 355]
    assert [len(labcli.topologies(n)) for n in range(5)] == [1, 1, 4, 29, 355]


def test_t0_topology_count_equals_poset_count():
    for n in range(5):
        assert len(enumerate_instances("t0-topology", n)) == len(labcli.posets(n))


def test_lattice_counts():
    assert [len(labcli.lattices(n)) for n in range(1, 6)] == [1, 2, 6, 36, 380]


def test_enumeration_bounds_and_kinds():
    with pytest.raises(ValidationError) as err:
        enumerate_instances("topology", 9)
    assert err.value.code == "BoundTooLarge"
    with pytest.raises(ValidationError) as err:
        enumerate_instances("graph", 2)
    assert err.value.code == "UnknownKind"


def test_ordered_space_stream_is_product_of_posets_and_topologies():
    insts = enumerate_instances("ordered-space", 3)
    assert len(insts) == 19 * 29
    assert insts[0].qoset.leq == labcli.posets(3)[0]


# ---------------------------------------------------------------- suites

def test_roundtrip_suite_all_pass():
    report = run_suite(SuiteSpec("thm-3.3-roundtrip", 3))
    assert report.instances == 29
    assert report.failures == 0 and report.passes == 29


def test_count_crosscheck_suite():
    report = run_suite(SuiteSpec("count-crosscheck", 4))
    assert report.instances == 5 and report.failures == 0


def test_unknown_suite():
    with pytest.raises(ValidationError) as err:
        run_suite(SuiteSpec("thm-0.0", 2))
    assert err.value.code == "UnknownSuite"


def test_report_hash_is_stable_and_ignores_wall_time():
    a = run_suite(SuiteSpec("thm-3.3-roundtrip", 3))
    b = run_suite(SuiteSpec("thm-3.3-roundtrip", 3))
    assert a.determinism_hash == b.determinism_hash
    assert a.wall_time != b.wall_time or a.wall_time >= 0  # excluded from hash


def test_partitioned_run_is_order_identical():
    for workers in (2, 4, 7):
        a = run_suite(SuiteSpec("thm-4.6", 2), workers=1)
        b = run_suite(SuiteSpec("thm-4.6", 2), workers=workers)
        assert a.determinism_hash == b.determinism_hash


# ---------------------------------------------------------------- faults

def test_fault_injection_produces_stable_counterexamples():
    spec = SuiteSpec("thm-4.6", 3)
    a = run_suite(spec, workers=1, fault="sector-no-separation")
    b = run_suite(spec, workers=4, fault="sector-no-separation")
    assert a.failures == 177
    assert a.determinism_hash == b.determinism_hash
    assert a.counterexamples[0] == b.counterexamples[0]


def test_fan_fault_failure_count():
    report = run_suite(SuiteSpec("thm-5.3", 3), fault="fan-no-separation")
    assert report.failures == 189


def test_fault_must_match_suite():
    with pytest.raises(ValidationError) as err:
        run_suite(SuiteSpec("thm-5.3", 2), fault="sector-no-separation")
    assert err.value.code == "UnknownFault"
    assert set(FAULTS) == {"sector-no-separation", "fan-no-separation"}


# ---------------------------------------------------------------- hunting

def test_hunt_exhausts_on_true_implications():
    for assume, refute in (
        (("semi-qospace",), "up-stable"),
        (("sector-space",), "strongly-convex"),
        (("fan-space",), "hyperconvex"),
    ):
        result = hunt(HypothesisSpec(assume, refute))
        assert "counterexample" not in result
        assert result["exhausted"] == {
            "kind": "ordered-space", "n": 3, "instances": 551
        }


def test_hunt_finds_counterexample():
    result = hunt(HypothesisSpec((), "semi-qospace", n=2))
    assert "counterexample" in result


def test_hunt_rejects_unknown_or_mismatched_tags():
    with pytest.raises(ValidationError) as err:
        hunt(HypothesisSpec((), "open-hearted"))
    assert err.value.code == "UnknownPredicateTag"
    with pytest.raises(ValidationError):
        hunt(HypothesisSpec((), "sober"))  # topology tag, ordered-space kind


# ---------------------------------------------------------------- fixtures

def test_fixture_registry():
    reg = fixtures()
    assert set(reg) == {
        "sierpinski", "m3", "n5", "2x2",
        "ex33-trunc-1", "ex33-trunc-2", "ex33-trunc-3",
    }
    assert reg["sierpinski"]["object"] == SIER
    assert not latid.check_law(reg["m3"]["object"], "distributive")[0]
    assert not latid.check_law(reg["n5"]["object"], "distributive")[0]
    trunc = reg["ex33-trunc-3"]
    assert trunc["object"].n == 5
    assert trunc["banner"] == labcli.TRUNCATION_BANNER


# ---------------------------------------------------------------- CLI

def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def test_cli_check(tmp_path, capsys):
    path = _write(tmp_path, "s.json", encode(SIER))
    assert main(["check", "--class", "t0", "--in", path]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] is True
    path2 = _write(tmp_path, "i.json", encode(Topology(2, (0, 3))))
    assert main(["check", "--class", "t0", "--in", path2]) == 1
    assert main(["check", "--class", "nonsense", "--in", path]) == 2
    # topology tag applied to a qoset record
    qpath = _write(tmp_path, "q.json", encode(Qoset(2, (3, 2))))
    assert main(["check", "--class", "sober", "--in", qpath]) == 2


def test_cli_derive(tmp_path, capsys):
    qpath = _write(tmp_path, "q.json", encode(Qoset(3, (0b111, 0b110, 0b100))))
    assert main(["derive", "--op", "scott", "--in", qpath]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "topology" and doc["n"] == 3
    spath = _write(tmp_path, "s.json", encode(SIER))
    assert main(["derive", "--op", "patch:upsilon", "--in", spath]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "ordered_space"
    assert main(["derive", "--op", "cocompact", "--in", spath]) == 0
    capsys.readouterr()
    assert main(["derive", "--op", "frobnicate", "--in", spath]) == 2


def test_cli_derive_completion_and_uniformity(tmp_path, capsys):
    from ordertop.finstruct import BinaryRelation
    rpath = _write(tmp_path, "r.json", encode(BinaryRelation(2, (3, 2))))
    assert main(["derive", "--op", "completion", "--in", rpath]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["basis"] == [0, 1]
    spath = _write(tmp_path, "s.json", encode(SIER))
    assert main(["derive", "--op", "quasi-uniformity", "--in", spath]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["base"]) == 2


def test_cli_enumerate(tmp_path, capsys):
    assert main(["enumerate", "--kind", "topology", "--n", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert main(["enumerate", "--kind", "topology", "--n", "9"]) == 2
    assert "BoundTooLarge" in capsys.readouterr().err


def test_cli_verify(capsys):
    assert main(["verify", "--suite", "thm-3.3-roundtrip", "--n", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["failures"] == 0 and doc["instances"] == 4
    assert main(["verify", "--suite", "thm-0.0", "--n", "2"]) == 2
    capsys.readouterr()
    assert main([
        "verify", "--suite", "thm-4.6", "--n", "2",
        "--fault", "sector-no-separation", "--verbose",
    ]) == 1
    out = capsys.readouterr().out
    assert json.loads(out.strip().splitlines()[-1])["failures"] > 0


def test_cli_hunt(capsys):
    assert main([
        "hunt", "--assume", "semi-qospace", "--refute", "up-stable", "--n", "3",
    ]) == 0
    assert "exhausted" in capsys.readouterr().out
    assert main(["hunt", "--refute", "semi-qospace", "--n", "2"]) == 1
    assert "counterexample" in capsys.readouterr().out


def test_cli_invariants(tmp_path, capsys):
    path = _write(tmp_path, "s.json", encode(SIER))
    assert main(["invariants", "--in", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"c": 2, "w_open": 2, "w_closed": 2, "w_patch": 2, "d_patch": 2}


def test_cli_convert(tmp_path, capsys):
    rep = json.dumps({"kind": "t0-core-space", "payload": json.loads(encode(SIER))})
    path = _write(tmp_path, "rep.json", rep)
    assert main([
        "convert", "--from", "t0-core-space", "--to", "c-ordered-set",
        "--in", path,
    ]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "c-ordered-set"
    assert main([
        "convert", "--from", "t0-core-space", "--to", "powerset", "--in", path,
    ]) == 2


def test_cli_missing_file(capsys):
    assert main(["check", "--class", "t0", "--in", "/nonexistent.json"]) == 2
