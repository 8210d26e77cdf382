import io
import json
import subprocess
import sys

import pytest

from massform.cli import run

G18 = "custom(6; (1 2 3), (4 5 6), (2 3)(5 6))"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_check_d4_wreath():
    data = call_json("check", "--group", "wr(S2,S2)", "--counting", "wreath(perm,perm)")
    assert data["formula_exists"] is True
    assert data["polynomial"] == [8, 16, 16]
    assert data["group"] == {"expr": "wr(S2,S2)", "order": 8, "degree": 4}
    assert data["modulus"] == 8
    assert [r["residue"] for r in data["results"]] == [1, 3, 5, 7]
    assert all(r["total"] == [8, 16, 16] for r in data["results"])


def _type_coeffs(data, key):
    (result,) = data["results"]
    strata = {s["key"]: s["coeffs"] for s in result["strata"]}
    return strata.get(key, [])


def test_g18_type_by_residue():
    t = "1^3 2^1 1^1"
    hit = call_json("mass", "--group", G18, "--counting", "perm", "--residue", "5", "--by", "type")
    assert _type_coeffs(hit, t) == [0, 0, 36]
    miss = call_json("mass", "--group", G18, "--counting", "perm", "--residue", "1", "--by", "type")
    assert _type_coeffs(miss, t) in ([], [0])


def test_reference_sn():
    data = call_json("reference", "sn", "--n", "4")
    assert data["coefficients"] == [1, 1, 2, 1]
    assert data["scaled"] == [24, 24, 48, 24]


@pytest.mark.parametrize("argv, code", [
    (["mass", "--group", "wr(S2", "--counting", "perm"], 2),
    (["mass", "--group", "S3", "--counting", "wreath(perm"], 2),
    (["mass", "--group", "S4", "--counting", "wreath(perm,perm)"], 3),
    (["mass", "--group", "wr(S3,S2)", "--counting", "signed"], 3),
    (["mass", "--group", "S8", "--counting", "perm", "--max-order", "1000"], 4),
    (["mass", "--group", "S3", "--counting", "perm", "--residue", "3"], 5),
    (["mass", "--group", G18, "--counting", "perm", "--residue", "2"], 5),
])
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_output_is_byte_deterministic():
    argv = ["mass", "--group", "wr(S2,S2)", "--counting", "perm", "--residue", "3", "--by", "image"]
    assert call(*argv)[1] == call(*argv)[1]
    argv = ["check", "--group", "S4", "--counting", "perm", "--by", "type"]
    assert call(*argv)[1] == call(*argv)[1]


@pytest.mark.parametrize("group, counting, by", [
    ("S4", "perm", "type"),
    ("wr(S2,S2)", "wreath(perm,perm)", "wreath-type"),
    ("x(S2,S3)", "sum(perm,perm)", "product-type"),
    ("wr(S2,S2)", "perm", "image"),
    (G18, "perm", "type"),
])
def test_strata_sum_to_total(group, counting, by):
    for residue in ("1", "7" if group != "wr(S2,S2)" else "3"):
        data = call_json("mass", "--group", group, "--counting", counting,
                         "--residue", residue, "--by", by)
        (result,) = data["results"]
        width = max(len(s["coeffs"]) for s in result["strata"])
        summed = [sum(s["coeffs"][i] if i < len(s["coeffs"]) else 0 for s in result["strata"])
                  for i in range(width)]
        assert summed == result["total"]
        plain = call_json("mass", "--group", group, "--counting", counting, "--residue", residue)
        assert plain["results"][0]["total"] == result["total"]
        assert "strata" not in plain["results"][0]


def test_env_cap(monkeypatch):
    monkeypatch.setenv("MASSFORM_MAX_ORDER", "100")
    assert call("mass", "--group", "S5", "--counting", "perm")[0] == 4
    assert call("mass", "--group", "S5", "--counting", "perm", "--max-order", "200")[0] == 0


def test_catalog_and_names():
    data = call_json("catalog")
    names = [e["name"] for e in data["catalog"]]
    assert "D4" in names and "G18" in names
    by_name = call_json("check", "--group", "D4", "--counting", "perm")
    assert by_name["polynomial"] == [8, 8, 16, 8]
    assert by_name["group"]["expr"] == "wr(S2,S2)"
    assert any("121/8" in w for w in by_name["warnings"])


def test_rational():
    assert call_json("rational", "--group", "S5")["rational"] is True
    c3 = call_json("rational", "--group", "custom(3; (1 2 3))")
    assert c3["rational"] is False and c3["witness"]["power"] == 2


def test_ambient():
    d4 = "custom(4; (1 2 3 4), (1 3))"
    data = call_json("ambient", "--group", "custom(4; (1 2 3 4))", "--target", d4, "--in", "S4")
    assert (data["j"], data["k"], data["copies"]) == (8, 4, 2)
    assert call("ambient", "--group", "S4", "--target", d4, "--in", "S4")[0] == 0
    assert call("ambient", "--group", "S3", "--target", d4, "--in", "S4")[0] == 1


def test_evaluate_and_text_format():
    data = call_json("check", "--group", "D4", "--counting", "perm", "--evaluate", "2",
                     "--evaluate", "3")
    ev = {e["q"]: e for e in data["evaluations"]}
    assert ev[2]["value"] == "17" and ev[2]["tame"] is False
    assert ev[3]["tame"] is True
    code, out, _ = call("check", "--group", "D4", "--counting", "wreath(perm,perm)",
                        "--format", "text")
    assert code == 0
    assert "formula   8 + 16x + 16x^2" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "massform", "reference", "sn", "--n", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coefficients"] == [1, 1, 1]
