import json

import pytest

from dynqg.cli import main
from dynqg.instances import build_instance
from dynqg.specfile import SpecError, dumps, load, loads

INSTANCES = ["sudq2", "frt-su2", "su-q2", "classical"]


@pytest.fixture(scope="module")
def spec(tmp_path_factory):
    path = tmp_path_factory.mktemp("specs") / "sudq2.json"
    assert main(["instance", "sudq2", "--out", str(path)]) == 0
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", INSTANCES)
def test_roundtrip_is_byte_identical(name, tmp_path):
    first = dumps(build_instance(name))
    path = tmp_path / "a.json"
    path.write_text(first)
    assert dumps(load(path)) == first


def test_check_all_passes(spec, capsys):
    code, out, _ = run(capsys, "check", spec, "--suite", "all")
    assert code == 0
    assert out.startswith("all suites sudq2: PASS")


def test_antipode_of_beta(spec, capsys):
    code, out, _ = run(capsys, "map", spec, "--morphism", "antipode", "-e", "beta")
    assert code == 0
    P = load(spec).pres
    # -(1/s(Z[-2,-1])) beta
    assert P.parse(out.strip()) == P.parse("-(1/s(Z[-2,-1]))*beta")


def test_reduce_delta_alpha(spec, capsys):
    code, out, _ = run(capsys, "reduce", spec, "-e", "delta*alpha")
    assert code == 0
    P = load(spec).pres
    assert P.parse(out.strip()) == P.parse("1 + (1/s(Z[-1,0]))*gamma*beta")


def test_map_delta_and_theta_json(spec, capsys):
    code, out, _ = run(capsys, "map", spec, "--morphism", "delta", "-e", "alpha", "--format", "json")
    assert code == 0
    assert json.loads(out)["image"] == "(alpha (x) alpha) + (beta (x) gamma)"
    code, out, _ = run(capsys, "map", spec, "--morphism", "theta:0", "-e", "delta")
    assert code == 0 and out.strip() == "<-1>"
    code, out, _ = run(capsys, "map", spec, "--morphism", "epsilon", "-e", "beta*gamma")
    assert code == 0


def test_json_report_shape(spec, capsys):
    code, out, _ = run(capsys, "check", spec, "--suite", "confluence", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] is True
    assert {"suite", "ok", "elapsed_s", "checks"} <= set(doc)
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_tampered_spec_fails_with_witness(spec, tmp_path, capsys):
    doc = json.loads(spec.read_text())
    doc["hopf"]["antipode"]["beta"] = "2*(" + doc["hopf"]["antipode"]["beta"] + ")"
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", broken, "--suite", "hopf", "--format", "json")
    assert code == 1
    rep = json.loads(out)
    bad = [c for c in rep["checks"] if c["status"] == "fail"]
    assert bad and all(c.get("witness") for c in bad)


def test_base_change_writes_loadable_spec(spec, tmp_path, capsys):
    out_path = tmp_path / "frt.json"
    code, out, _ = run(capsys, "base-change", spec, "--hom", "pi-q-m", "--param", "q=2/3", "--out", out_path)
    assert code == 0
    assert load(out_path).base.name == build_instance("frt-su2").base.name


def test_web_verify(capsys):
    code, out, _ = run(capsys, "web-verify")
    assert code == 0 and "PASS" in out.splitlines()[0]


@pytest.mark.parametrize("argv", [
    ["reduce", "{spec}", "-e", "alpha (x) gamma"],
    ["reduce", "{spec}", "-e", "alpha +* beta"],
    ["reduce", "{spec}", "-e", "omega"],
    ["map", "{spec}", "--morphism", "theta:x", "-e", "alpha"],
    ["map", "{spec}", "--morphism", "frobnicate", "-e", "alpha"],
    ["base-change", "{spec}", "--hom", "pi-q-m", "--out", "{tmp}/x.json"],
    ["base-change", "{classical}", "--hom", "pi-1", "--out", "{tmp}/x.json"],
    ["instance", "su-q2", "--param", "q=1", "--out", "{tmp}/x.json"],
    ["instance", "su-q2", "--param", "p=2", "--out", "{tmp}/x.json"],
    ["check", "{tmp}/missing.json"],
    ["check", "{garbage}"],
])
def test_errors_exit_2(argv, spec, tmp_path, capsys):
    classical = tmp_path / "classical.json"
    classical.write_text(dumps(build_instance("classical")))
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    args = [a.format(spec=spec, tmp=tmp_path, classical=classical, garbage=garbage) for a in argv]
    code, _, err = run(capsys, *args)
    assert code == 2
    assert err.startswith("dynqg: error:")


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check"])
    assert exc.value.code == 2


def test_malformed_documents():
    with pytest.raises(SpecError):
        loads('{"format": "other"}')
    with pytest.raises(SpecError):
        loads('{"format": "dynqg-spec/1", "base": {}}')
