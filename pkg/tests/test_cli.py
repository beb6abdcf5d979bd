import json

import pytest

from abelian_codes.cli import run


def capture(capsys, argv):
    status = run(argv)
    return status, capsys.readouterr().out


def test_classify_md_output(capsys):
    status, out = capture(capsys, ["classify", "--group", "9,3", "--field", "2"])
    assert status == 0
    assert "class_count: 4" in out
    assert "tau: 3" in out
    assert "thm56_match: no" in out
    assert "group: 3,9" in out  # normalized form echoed


def test_classify_json_schema(capsys):
    status, out = capture(
        capsys, ["classify", "--group", "9,3", "--field", "2", "--format", "json"])
    assert status == 0
    data = json.loads(out)
    assert list(data) == ["group", "field", "codes", "classes", "class_count",
                          "tau", "homocyclic", "thm56_match"]
    assert len(data["codes"]) == 8 and data["class_count"] == 4
    assert sum(c["size"] for c in data["classes"]) == 8


def test_classify_trivial_group(capsys):
    status, out = capture(
        capsys, ["classify", "--group", "1", "--field", "2", "--format", "json"])
    assert status == 0
    data = json.loads(out)
    assert data["class_count"] == 1 and data["tau"] == 1


def test_classify_with_distributions_csv(capsys):
    status, out = capture(capsys, [
        "classify", "--group", "3,3", "--field", "2", "--format", "csv",
        "--with-distributions",
    ])
    assert status == 0
    assert out.startswith("section,idempotent_ref,")
    assert 'summary,"3,3",2,2,2,True,True' in out


def test_output_is_deterministic(capsys):
    argv = ["classify", "--group", "9,3", "--field", "2", "--format", "json",
            "--with-distributions"]
    _, first = capture(capsys, argv)
    _, second = capture(capsys, argv)
    assert first == second


def test_domain_error_record_and_exit_code(capsys):
    status, out = capture(capsys, ["classify", "--group", "4,2", "--field", "2"])
    assert status == 1
    record = json.loads(out)
    assert record["error_code"] == "CharDividesOrder"
    assert record["message"]
    assert isinstance(record["context"], dict)


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["classify", "--group", "9,3"])  # missing --field
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["classify", "--group", "foo", "--field", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["classify", "--group", "9,3", "--field", "2^x"])
    assert exc.value.code == 2


def test_non_prime_field_is_a_domain_error(capsys):
    status, out = capture(capsys, ["classify", "--group", "9,3", "--field", "4"])
    assert status == 1
    assert json.loads(out)["error_code"] == "NonPrimeP"


def test_idempotents_dump(capsys):
    status, out = capture(
        capsys, ["idempotents", "--group", "9,3", "--field", "2",
                 "--format", "json"])
    assert status == 0
    data = json.loads(out)
    assert len(data["idempotents"]) == 8
    for entry in data["idempotents"]:
        assert list(entry) == ["orbit_rep", "phi_subgroup", "support_size",
                               "coeffs"]
        total = sum(run_len for _, run_len in entry["coeffs"])
        assert total == 27
        ones = sum(run_len for value, run_len in entry["coeffs"] if value == 1)
        assert ones == entry["support_size"]


def test_subgroups_listing(capsys):
    status, out = capture(
        capsys, ["subgroups", "--group", "9,3", "--field", "2",
                 "--format", "json"])
    assert status == 0
    data = json.loads(out)
    assert len(data["subgroups"]) == 10
    assert sum(1 for s in data["subgroups"] if s["cocyclic"]) == 7
    orders = sorted(s["order"] for s in data["subgroups"])
    assert orders == [1, 3, 3, 3, 3, 9, 9, 9, 9, 27]


def test_sweep_json(capsys):
    status, out = capture(
        capsys, ["sweep", "--max-order", "15", "--field", "2",
                 "--format", "json"])
    assert status == 0
    data = json.loads(out)
    specs = [r["group"] for r in data["rows"]]
    assert specs == ["1", "3", "5", "7", "3,3", "9", "11", "13", "15"]
    for row in data["rows"]:
        assert set(row) == {"group", "class_count", "tau", "homocyclic",
                            "thm56_match"}
        assert row["thm56_match"] == (row["class_count"] == row["tau"])


def test_verify_exit_codes(capsys):
    status, out = capture(capsys, ["verify", "--group", "9,3", "--field", "2"])
    assert status == 0
    assert "all rows pass: yes" in out
    status, out = capture(capsys, ["verify", "--group", "3,15", "--field", "2"])
    assert status == 1
    record = json.loads(out)
    assert record["error_code"] == "DomainError"


def test_verify_hypothesis_failure_record(capsys):
    status, out = capture(capsys, ["verify", "--group", "49,7", "--field", "2"])
    assert status == 1
    record = json.loads(out)
    assert record["error_code"] == "HypothesisFails"


def test_field_extension_spec(capsys):
    status, out = capture(
        capsys, ["subgroups", "--group", "3", "--field", "2^2",
                 "--format", "json"])
    assert status == 0
    assert json.loads(out)["field"] == "2^2"
