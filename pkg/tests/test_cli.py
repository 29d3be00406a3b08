"""CLI: JSON round trips, exit codes and byte-identical reruns."""

import json
import subprocess
import sys

from goppa_levels import SCHEMA_VERSION
from goppa_levels.cli import run


def call(args, capsys):
    status = run(args)
    out = capsys.readouterr()
    return status, out.out, out.err


def ok(args, capsys):
    status, out, err = call(args, capsys)
    assert status == 0, err
    return json.loads(out)


STRUCT = ["--field", "7", "--n", "5", "--d", "2", "--alphas", "2,3", "--scalars", "1,1,1,1"]


def test_gen_matrix_example(capsys):
    obj = ok(["gen-matrix", *STRUCT], capsys)
    assert obj["entries"] == [[0, 1, 1, 1, 1], [0, 0, 1, 2, 3], [1, 0, 1, 4, 2]]
    assert (obj["rows"], obj["cols"], obj["field"]) == (3, 5, "7")


def test_parity_matrix(capsys):
    obj = ok(["parity-matrix", *STRUCT], capsys)
    assert obj["entries"] == [[0, 6], [1, 0], [4, 4], [3, 6], [6, 4]]


def test_xi_example(capsys):
    obj = ok(["xi", "--g", "0", "--n", "10", "--d", "4"], capsys)
    assert obj["xi"] == 9 and obj["unsafe"] is True
    obj = ok(["xi", "--g", "0", "--n", "10", "--sweep"], capsys)
    assert [r["d"] for r in obj["reports"]] == list(range(10))


def test_encode_zero_message(capsys):
    obj = ok(["encode", *STRUCT, "--message", "0,0,0"], capsys)
    assert obj["word"] == [0, 0, 0, 0, 0]


def test_round_trip_chain(tmp_path, capsys):
    s = tmp_path / "s.json"
    c = tmp_path / "c.json"
    assert run(["construct", *STRUCT, "--scalars", "1,6,3,4", "--out", str(s)]) == 0
    assert run(["construct", "--structure", str(s), "--code", "--out", str(c)]) == 0
    capsys.readouterr()
    word = ok(["encode", "--structure", str(s), "--message", "0,0,1"], capsys)
    assert word["word"] == [1, 0, 3, 2, 2]  # l_j * t^2 at inf, 0, 1, 2, 3
    back = ok(["recover-scalars", "--code", str(c), "--alphas", "2,3", "--d", "2"], capsys)
    assert back == json.loads(s.read_text())
    d = tmp_path / "d.json"
    assert run(["dual", "--structure", str(s), "--out", str(d)]) == 0
    dc = tmp_path / "dc.json"
    assert run(["construct", "--structure", str(d), "--code", "--out", str(dc)]) == 0
    capsys.readouterr()
    dual_code = ok(["dual", "--code", str(c)], capsys)
    assert dual_code == json.loads(dc.read_text())
    # closed form and minors agree through the CLI as well
    assert ok(["pluecker", "--structure", str(s)], capsys) == ok(["pluecker", "--code", str(c)], capsys)


def test_pluecker_pinned(capsys):
    obj = ok(["pluecker", *STRUCT], capsys)
    assert obj["coords"] == [1, 4, 3, 6, 4, 6, 4, 5, 6, 4]


def test_tensor_and_canonical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(["construct", "--field", "7", "--n", "4", "--d", "1", "--alphas", "3", "--scalars", "1,3,2",
         "--out", str(a)])
    run(["construct", "--field", "7", "--n", "4", "--d", "1", "--alphas", "3", "--scalars", "1,3,2",
         "--out", str(b)])
    capsys.readouterr()
    sq = ok(["tensor", "--left", str(a), "--right", str(b)], capsys)
    can = ok(["canonical-diff", "--field", "7", "--n", "4", "--alphas", "3"], capsys)
    assert sq == can and can["scalars"] == [1, 2, 4]
    check = ok(["selfdual-check", "--structure", str(a)], capsys)
    assert check["self_dual"] and check["direct"]


def test_classical_normalize(tmp_path, capsys):
    raw = {"type": "raw_level_structure", "field": "7", "points": ["inf", 0, 1, 2, 3],
           "divisor": [[5, 2]], "scalars": [1, 1, 1, 1, 1]}
    p = tmp_path / "raw.json"
    p.write_text(json.dumps(raw))
    obj = ok(["classical-normalize", "--raw", str(p)], capsys)
    assert obj["type"] == "level_structure" and obj["d"] == 2 and obj["alphas"] == [2, 3]


def test_ratfun_path(capsys):
    args = ["--field", "ratfun(2)", "--n", "4", "--d", "1", "--alphas", "z", "--scalars", "1,1,z"]
    obj = ok(["dual", *args, "--check"], capsys)
    assert obj["annihilation"] and obj["dual_code_matches"]
    assert obj["d"] == 1
    g = ok(["construct", *args], capsys)
    assert g["alphas"] == [{"num": [0, 1], "den": [1]}]


def test_extension_field_elements(capsys):
    obj = ok(["construct", "--field", "9", "--n", "5", "--d", "2", "--alphas", "[[0,1],[1,1]]"], capsys)
    assert obj["field"] == "3^2/1,0,1" and obj["alphas"] == [[0, 1], [1, 1]]


def test_not_in_fiber_exit_2(tmp_path, capsys):
    code = {"type": "code", "field": "7", "n": 5, "k": 3,
            "generator": {"field": "7", "rows": 3, "cols": 5,
                          "entries": [[1, 0, 0, 1, 1], [0, 1, 0, 2, 5], [0, 0, 1, 3, 3]]}}
    p = tmp_path / "c.json"
    p.write_text(json.dumps(code))
    status, out, _ = call(["recover-scalars", "--code", str(p), "--alphas", "2,3", "--d", "2"], capsys)
    assert status == 2 and json.loads(out)["error"] in ("NotInFiber", "ZeroCoordinateObstruction")


def test_usage_errors_exit_1(capsys):
    assert call(["bogus"], capsys)[0] == 1
    assert call(["gen-matrix", "--field", "7", "--unknown"], capsys)[0] == 1
    assert call(["gen-matrix", "--field", "7"], capsys)[0] == 1
    assert call(["gen-matrix", "--field", "6", "--n", "5", "--d", "2", "--alphas", "2,3"], capsys)[0] == 1
    assert call(["construct", *STRUCT[:-2], "--scalars", "1,0,1,1"], capsys)[0] == 1
    assert call(["audit", "delsarte", "--field", "7"], capsys)[0] == 1
    assert call(["xi", "--g", "0"], capsys)[0] == 1


def test_audit_exit_codes(capsys):
    status, out, _ = call(["audit", "injectivity", "--field", "7", "--n", "5", "--d", "2"], capsys)
    assert status == 0 and json.loads(out)["clean"]
    status, out, _ = call(["audit", "injectivity", "--field", "7", "--n", "4", "--d", "0"], capsys)
    assert status == 2 and json.loads(out)["collision_groups"] > 0
    status, out, _ = call(["audit", "selfdual", "--field", "7", "--n", "4", "--d", "1"], capsys)
    assert status == 0
    status, out, _ = call(["audit", "census", "--field", "7", "--n", "4", "--d", "1"], capsys)
    assert status == 0 and json.loads(out)["grassmannian_size"] == 2850
    status, out, _ = call(["audit", "identities", "--field", "8", "--n", "5", "--d", "2"], capsys)
    assert status == 0 and json.loads(out)["structures"] == 72030


def test_reruns_are_byte_identical(capsys):
    args = ["audit", "delsarte", "--field", "8", "--n-max", "4", "--samples", "40", "--seed", "3"]
    first = call(args, capsys)
    second = call(args, capsys)
    assert first == second and first[0] == 0
    a = call(["--seed", "3", *args[:-2]], capsys)
    assert a[1] == first[1]


def test_global_out_flag(tmp_path, capsys):
    p = tmp_path / "x.json"
    assert run(["--out", str(p), "xi", "--g", "0", "--n", "10", "--d", "1"]) == 0
    assert json.loads(p.read_text())["xi"] == 0


def test_version(capsys):
    assert run(["--version"]) == 0
    assert SCHEMA_VERSION in capsys.readouterr().out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "goppa_levels", "xi", "--g", "0", "--n", "6", "--d", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["xi"] == 1
