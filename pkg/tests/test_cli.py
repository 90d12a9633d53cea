import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from hbeta import (
    bichar_verify, bialgebra_verify, colie_verify, iso_check, lie_verify, matched_verify, bb3_verify,
    cocycle_verify, VerificationReport,
)
from hbeta.cli import main
from hbeta.document import parse

FIX = Path(__file__).parent.parent / "fixtures"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, json.loads(out) if out else None


def test_verify_lie_sl2():
    code, report = run_json("verify-lie", FIX / "sl2.json")
    assert code == 0 and report["verdict"] == "pass"
    assert report["tool"] == "hbeta" and report["input_digest"].startswith("sha256:")


def test_verify_lie_perturbed_witness():
    code, report = run_json("verify-lie", FIX / "sl2_perturbed.json")
    assert code == 1
    jac = next(c for c in report["checks"] if c["id"] == "jacobi")
    w = next(w for w in jac["witnesses"] if w["at"] == ["h", "e", "f"])
    assert w["residual"] == [["h", "1"]]


def test_iso_check_super():
    code, report = run_json("iso-check", FIX / "super_pair.json")
    assert code == 0


def test_text_report():
    code, out, _ = run("verify-lie", FIX / "sl2_perturbed.json")
    assert code == 1
    assert "FAIL  jacobi" in out and "verdict: FAIL" in out


def test_input_errors_exit_2(tmp_path):
    assert run("verify-lie", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": "Q", "group": [], "defaults_ack": true, "lie_algebras": '
                   '{"L": {"space": "nope", "bracket": []}}}')
    code, out, err = run("verify-lie", bad)
    assert code == 2 and "unknown name" in err
    bad.write_text("{not json")
    code, _, err = run("verify-lie", bad)
    assert code == 2 and "line 1" in err
    assert run("verify-matched", FIX / "super_pair.json", "--entity", "nope")[0] == 2
    assert run("verify-lie", FIX / "color.json")[0] == 2  # ambiguous entity
    assert run("verify-bb3", FIX / "super_pair.json")[0] == 2  # no cobrackets
    assert run("split", FIX / "sl2.json")[0] == 2
    assert run("frobnicate", FIX / "sl2.json")[0] == 2
    assert run("verify-lie", FIX / "sl2.json", "--witness-cap", "0")[0] == 2


def _bialgebra(doc, name):
    L, delta = doc.bialgebras[name]
    report = VerificationReport()
    report.extend(lie_verify(L), "lie: ")
    report.extend(colie_verify(delta, doc.beta), "colie: ")
    return report.extend(bialgebra_verify(L, delta))


# each command's verdict equals the library call's verdict
LIBRARY = [
    (("verify-bichar", "super_pair.json"), lambda d: bichar_verify(d.beta)),
    (("verify-cocycle", "super_pair.json"), lambda d: cocycle_verify(d.cocycles["sigma"])),
    (("verify-lie", "sl2_perturbed.json"), lambda d: lie_verify(d.lie_algebras["sl2_perturbed"])),
    (("verify-colie", "two_dim_bialgebra.json"),
     lambda d: colie_verify(d.cobrackets["b2_delta"], d.beta)),
    (("verify-bialgebra", "two_dim_bialgebra.json"), lambda d: _bialgebra(d, "b2")),
    (("verify-matched", "color.json", "--entity", "strict_diag"),
     lambda d: matched_verify(d.matched_pair("strict_diag"))),
    (("verify-bb3", "bb3_failure.json"), lambda d: bb3_verify(d.cobracked_pair("bb3"))),
    (("iso-check", "color.json", "--entity", "diag_strict"),
     lambda d: iso_check(d.matched_pair("diag_strict"), d.cocycles["sigma"])),
]


@pytest.mark.parametrize("argv,call", LIBRARY, ids=[a[0] for a, _ in LIBRARY])
def test_cli_matches_library(argv, call):
    code, report = run_json(argv[0], FIX / argv[1], *argv[2:])
    lib = call(parse((FIX / argv[1]).read_text())).to_dict()
    assert report["checks"] == lib["checks"]
    assert report["verdict"] == lib["verdict"]
    assert code == (0 if lib["verdict"] == "pass" else 1)


BUILDS = [
    ("build-dcs", "super_pair.json"),
    ("build-beta-commutator", "super_pair.json"),
    ("build-beta-cocommutator", "super_pair.json"),
    ("twist-lie", "color.json", "--entity", "t3"),
    ("twist-algebra", "super_pair.json"),
    ("twist-bichar", "color.json"),
    ("twist-pair", "color.json", "--entity", "strict_diag"),
    ("split", "sl2.json", "--partition", "e"),
    ("split", "color.json", "--entity", "t3", "--partition", "E11,E22,E33"),
]


@pytest.mark.parametrize("argv", BUILDS, ids=lambda a: " ".join(a[:1] + a[2:]))
def test_build_commands_emit_documents(argv, tmp_path):
    out = tmp_path / "out.json"
    code, report = run_json(argv[0], FIX / argv[1], *argv[2:], "--out", out)
    assert code == 0, report
    assert "document" not in report
    built = parse(out.read_text(encoding="utf-8"))
    # the emitted document is itself verifiable
    for L in built.lie_algebras.values():
        assert lie_verify(L)
    for d in built.cobrackets.values():
        assert colie_verify(d, built.beta)
    for name in built.pairs:
        assert matched_verify(built.matched_pair(name))
    code2, embedded = run_json(argv[0], FIX / argv[1], *argv[2:])
    assert parse(json.dumps(embedded["document"]))


def test_build_dcs_bialgebra_blocked_by_bb3():
    code, report = run_json("build-dcs-bialgebra", FIX / "bb3_failure.json")
    assert code == 1
    assert [c["id"] for c in report["checks"]] == ["BB3"]
    assert "document" not in report


def test_build_dcs_refuse_and_force(tmp_path):
    doc = json.loads((FIX / "super_pair.json").read_text())
    doc["actions"]["h_acts"]["table"][1][2][0][1] = "1"  # h |> a2 = a2 breaks BB1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, report = run_json("build-dcs", path)
    assert code == 1 and "document" not in report and report["forced"] is False
    code, report = run_json("build-dcs", path, "--force")
    assert code == 1 and report["forced"] is True and "document" in report
    assert any(c["id"].startswith("dcs: ") and c["status"] == "fail" for c in report["checks"])


def test_twist_pair_super(tmp_path):
    out = tmp_path / "t.json"
    code, _ = run_json("twist-pair", FIX / "super_pair.json", "--out", out)
    assert code == 0
    t = parse(out.read_text())
    assert matched_verify(t.matched_pair("super_twisted"))
    assert t.beta == parse((FIX / "super_pair.json").read_text()).beta


@pytest.mark.parametrize("argv", [
    ("verify-lie", "sl2_perturbed.json"),
    ("verify-matched", "color.json", "--entity", "strict_diag"),
    ("iso-check", "super_pair.json"),
    ("twist-pair", "color.json", "--entity", "diag_strict"),
    ("verify-bb3", "bb3_failure.json"),
])
def test_reports_deterministic_across_runs_and_workers(argv):
    outs = {run(argv[0], FIX / argv[1], *argv[2:], "--format", "json", "--workers", w)[1]
            for w in (1, 1, 2, 4, 7)}
    assert len(outs) == 1


def test_witness_cap_flag():
    code, report = run_json("verify-lie", FIX / "sl2_perturbed.json", "--witness-cap", "2")
    jac = next(c for c in report["checks"] if c["id"] == "jacobi")
    assert len(jac["witnesses"]) == 2 and jac["failures"] == 6


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hbeta.cli", "verify-lie", str(FIX / "sl2.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "verdict: PASS" in proc.stdout


def test_build_dcs_bialgebra(tmp_path):
    out = tmp_path / "b.json"
    code, report = run_json("build-dcs-bialgebra", FIX / "extended_bialgebra.json", "--out", out)
    assert code == 0
    assert report["checks"][-1]["id"] == "LB"
    built = parse(out.read_text())
    (name,) = built.bialgebras
    code, report = run_json("verify-bialgebra", out)
    assert code == 0 and report["verdict"] == "pass"
