import io
import json
import subprocess
import sys

import pytest

from fabkit.algebra import FabFiber, Frame, ProjectivePoint, frame_conjugate, standard_frame
from fabkit.classes import ClassVector, VirtualBundleClass
from fabkit.cli import run
from fabkit.exact import Matrix
from fabkit.homotopy import AbelianGroup


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def std23(tmp_path):
    return write(tmp_path / "standard_2_3.json", standard_frame(2, 3).to_json())


def test_pi_examples():
    assert cli("pi", "gr", "--k", "2", "--l", "3", "--r", "4")[:2] == (0, "Z\n")
    assert cli("pi", "gr", "--k", "4", "--l", "6", "--r", "3")[1] == "Z/2\n"
    assert cli("pi", "fr", "--k", "3", "--l", "4", "--r", "5")[1] == "Z/3\n"
    code, out, _ = cli("pi", "gr", "--k", "4", "--l", "6", "--r", "3", "--json")
    assert code == 0 and AbelianGroup.from_json(json.loads(out)) == AbelianGroup.cyclic(2)
    # --json before the subcommand works too
    assert json.loads(cli("--json", "pi", "gr", "--k", "2", "--l", "3", "--r", "4")[1]) == {"rank": 1, "torsion": []}


def test_pi_unstable_exits_one():
    code, out, err = cli("pi", "gr", "--k", "2", "--l", "3", "--r", "9")
    assert code == 1 and out == "" and "stable range" in err


def test_usage_errors_exit_two(tmp_path):
    assert cli("bogus")[0] == 2
    assert cli("pi", "gr", "--k", "2")[0] == 2
    assert cli("frame", "verify")[0] == 2
    assert cli("frame", "verify", "--in", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli("frame", "verify", "--in", str(bad))[0] == 2
    assert cli("class", "fab-product")[0] == 2


def test_induced_and_oracle():
    code, out, _ = cli("induced", "--k", "2", "--l", "3", "--m", "4", "--n", "9", "--r", "4")
    assert code == 0 and "factor: 1" in out and "isomorphism: true" in out
    code, out, _ = cli("induced", "--k", "2", "--l", "2", "--m", "4", "--n", "4", "--r", "3", "--json")
    report = json.loads(out)
    assert report["image_generator"] == 0 and report["image_order"] == 1 and report["kind"] == "zero"
    assert cli("oracle", "--k", "4", "--l", "6", "--r", "2")[1] == "pi_4 = Z\npi_3 = Z/2\n"
    data = json.loads(cli("oracle", "--k", "5", "--l", "5", "--r", "3", "--json")[1])
    assert AbelianGroup.from_json(data["pi_odd"]) == AbelianGroup.cyclic(5)


def test_frame_commands(tmp_path, std23):
    assert cli("frame", "verify", "--in", std23)[:2] == (0, "valid\n")
    code, out, _ = cli("frame", "standard", "--k", "2", "--l", "3")
    assert code == 0 and Frame.from_json(out) == standard_frame(2, 3)
    assert out == cli("frame", "standard", "--k", "2", "--l", "3")[1]
    code, out, _ = cli("frame", "conjugator", "--in", std23)
    assert Matrix.from_json(out) == Matrix.identity(6)


def test_frame_verify_invalid(tmp_path):
    obj = standard_frame(2, 2).to_json()
    obj["generators"][0], obj["generators"][3] = obj["generators"][3], obj["generators"][0]
    path = write(tmp_path / "bad.json", obj)
    code, out, err = cli("frame", "verify", "--in", path)
    assert code == 1 and "relation failed" in err
    code, out, _ = cli("frame", "verify", "--in", path, "--json")
    assert code == 0 and json.loads(out)["valid"] is False


def test_conjugator_round_trip(tmp_path):
    g = Matrix.from_rows([[1, 1, 0, 0], [0, 1, 0, 0], [0, 2, 1, 0], [1, 0, 0, 1]])
    frame = frame_conjugate(standard_frame(2, 2), g)
    path = write(tmp_path / "f.json", frame.to_json())
    conj = Matrix.from_json(cli("frame", "conjugator", "--in", path)[1])
    assert frame_conjugate(standard_frame(2, 2), conj) == frame


def test_centralizer_and_fab(tmp_path, std23):
    code, out, _ = cli("centralizer", "--in", std23)
    comp = Frame.from_json(out)
    assert comp.k == 3 and comp.n == 6
    code, out, _ = cli("fab", "make", "--in", std23)
    fiber = FabFiber.from_json(out)
    fiber_path = write(tmp_path / "fiber.json", fiber.to_json())
    one_five = write(tmp_path / "s15.json", standard_frame(1, 5).to_json())
    code, out, _ = cli("fab", "product", "--in", fiber_path, "--in2", one_five)
    assert code == 0 and (json.loads(out)["k"], json.loads(out)["l"]) == (2, 15)
    s32 = write(tmp_path / "s32.json", standard_frame(3, 2).to_json())
    assert cli("fab", "product", "--in", std23, "--in2", s32)[0] == 1
    s22 = write(tmp_path / "s22.json", standard_frame(2, 2).to_json())
    code, _, err = cli("fab", "make", "--in", s22)
    assert code == 1 and "not floating" in err


def test_segre(tmp_path):
    p = write(tmp_path / "p.json", ProjectivePoint([1, 0]).to_json())
    q = write(tmp_path / "q.json", ProjectivePoint([0, 1]).to_json())
    assert cli("segre", "--p", p, "--q", q)[1] == "[0:1:0:0]\n"
    out = cli("segre", "--p", p, "--q", q, "--json")[1]
    assert ProjectivePoint.from_json(out) == ProjectivePoint([0, 1, 0, 0])


def test_class_symbolic_product():
    code, out, _ = cli("class", "fab-product", "--symbolic", "--N", "5")
    assert code == 0
    assert "c4 = c4(A) - 5*c2(A)*c2(B) + c4(B)" in out
    assert "c5 = c5(A) - 11*c3(A)*c2(B) - 11*c2(A)*c3(B) + c5(B)" in out
    code, out, _ = cli("class", "fab-product", "--symbolic", "--N", "5", "--json")
    vec = ClassVector.from_json(out)
    assert str(vec[4]) == "c4(A) - 5*c2(A)*c2(B) + c4(B)"


def test_class_numeric_commands(tmp_path):
    c = write(tmp_path / "c.json", ClassVector("chern", 2, (0, 2)).to_json())
    out = ClassVector.from_json(cli("class", "chern2newton", "--in", c, "--json")[1])
    assert out.values == (0, -4)
    s = write(tmp_path / "s.json", out.to_json())
    back = ClassVector.from_json(cli("class", "newton2chern", "--in", s, "--json")[1])
    assert back.values == (0, 2)

    x = write(tmp_path / "x.json", VirtualBundleClass.from_newton(2, [1, 2, 3]).to_json())
    t = write(tmp_path / "t.json", VirtualBundleClass.trivial(3, 3).to_json())
    out = ClassVector.from_json(cli("class", "tensor", "--in", x, "--in2", t, "--json")[1])
    assert out.dim0 == 6 and out.values == (3, 6, 9)

    a = write(tmp_path / "a.json", ClassVector("newton", 1, (0, 3, -1)).to_json())
    inv = ClassVector.from_json(cli("class", "fab-inverse", "--in", a, "--json")[1])
    inv_path = write(tmp_path / "inv.json", inv.to_json())
    prod = ClassVector.from_json(cli("class", "fab-product", "--in", a, "--in2", inv_path, "--json")[1])
    assert all(v == 0 for v in prod.values)

    xk = write(tmp_path / "xk.json", VirtualBundleClass.from_newton(2, [2, 4]).to_json())
    xm = write(tmp_path / "xm.json", VirtualBundleClass.from_newton(3, [3, 6]).to_json())
    eta = ClassVector.from_json(cli("class", "bezout", "--in", xk, "--in2", xm, "--json")[1])
    assert eta.dim0 == 1 and eta.values == (1, 2)
    bad = write(tmp_path / "bad.json", VirtualBundleClass.from_newton(3, [3, 7]).to_json())
    assert cli("class", "bezout", "--in", xk, "--in2", bad)[0] == 1


def test_module_entry_point(std23):
    proc = subprocess.run(
        [sys.executable, "-m", "fabkit", "frame", "verify", "--in", std23], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "valid\n"
