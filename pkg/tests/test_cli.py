import json

from quartic_galois.cli import main

FERMAT = "X^4+Y^4+Z^4+W^4"
FORM1 = "X^4+Y^4+Z^4+W^4+Y^2*Z*W"
FORM2 = "X^4+Y^4+Z^4+Z*W^3+W^4"
SIGMA1 = "i 0 0 0  0 1 0 0  0 0 1 0  0 0 0 1"
SIGMA12 = "i 0 0 0  0 i 0 0  0 0 1 0  0 0 0 1"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    payload = json.loads(out) if out.strip() else {}
    return code, payload, err


def test_smooth_exit_codes(capsys):
    code, out, _ = run(capsys, "smooth", FERMAT)
    assert code == 0 and "smooth: yes" in out
    code, out, _ = run(capsys, "smooth", "X^4+Y^4+Z^4")
    assert code == 2 and "smooth: no" in out
    code, _, err = run(capsys, "smooth", "X^4 + garbage")
    assert code == 1 and "error" in err


def test_galois_test_verdicts(capsys):
    code, payload, _ = run_json(capsys, "galois", "test", FORM2,
                                "--point", "0:1:0:0")
    assert code == 0 and payload["outer_galois_point"] is True
    assert payload["generator"][5] == "i"
    code, payload, _ = run_json(capsys, "galois", "test", FERMAT,
                                "--point", "1:1:0:0")
    assert code == 2 and payload["outer_galois_point"] is False


def test_galois_test_inner_point_error(capsys):
    code, _, err = run(capsys, "galois", "test", "X^3*Y+Y^4+Z^4+W^4",
                       "--point", "1:0:0:0")
    assert code == 1 and "inner" in err


def test_galois_find_fermat(capsys):
    code, payload, _ = run_json(capsys, "galois", "find", FERMAT)
    assert code == 0
    assert payload["completeness"] == "proved-complete"
    assert [p["point"] for p in payload["points"]] == [
        "0:0:0:1", "0:0:1:0", "0:1:0:0", "1:0:0:0"]
    assert payload["singular_k3"] == {
        "picard_number": 20,
        "transcendental_gram": [8, 0, 0, 8],
    }


def test_galois_find_singular_rejected(capsys):
    code, _, err = run(capsys, "galois", "find", "X^4+Y^4+Z^4")
    assert code == 1 and "singular" in err


def test_auto_character(capsys):
    identity = " ".join(["1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1"])
    code, payload, _ = run_json(capsys, "auto", "character", FERMAT,
                                "--matrix", identity)
    assert code == 0 and payload["character_value"] == "1"
    code, payload, _ = run_json(capsys, "auto", "character", FORM1,
                                "--matrix", SIGMA1)
    assert payload["character_value"] == "i"


def test_auto_classify(capsys):
    code, payload, _ = run_json(capsys, "auto", "classify", FORM1,
                                "--matrix", SIGMA1)
    assert code == 0
    assert payload["type_tuple"] == [1, 0, 0, 3]
    assert payload["character"] == "purely-ns-4"
    code, payload, _ = run_json(capsys, "auto", "classify", FORM2,
                                "--matrix", SIGMA12)
    assert payload["type_tuple"] == [10, 4, 8]


def test_auto_fixed_locus(capsys):
    code, payload, _ = run_json(capsys, "auto", "fixed-locus", FORM2,
                                "--matrix", SIGMA12)
    assert code == 0
    assert payload["n"] == 8 and payload["curves"] == []


def test_auto_unnormalized_matrix(capsys):
    bad = " ".join(["2 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1"])
    code, _, err = run(capsys, "auto", "character", FERMAT, "--matrix", bad)
    assert code == 1 and "rescale" in err


def test_lattice_reduce(capsys):
    code, payload, _ = run_json(capsys, "lattice", "reduce", "8", "0", "8")
    assert code == 0 and payload["reduced"] == [8, 0, 0, 8]
    code, payload, _ = run_json(capsys, "lattice", "reduce", "8", "8", "16")
    assert payload["reduced"] == [8, 0, 0, 8]


def test_lattice_compare(capsys):
    code, payload, _ = run_json(capsys, "lattice", "compare",
                                "8", "0", "8", "2", "0", "32")
    assert code == 2 and payload["isomorphic"] is False
    code, payload, _ = run_json(capsys, "lattice", "compare",
                                "8", "0", "8", "8", "8", "16")
    assert code == 0 and payload["isomorphic"] is True


def test_lattice_rejects_odd(capsys):
    code, _, err = run(capsys, "lattice", "reduce", "7", "0", "8")
    assert code == 1 and "even" in err


def test_moduli_dim(capsys):
    code, payload, _ = run_json(capsys, "moduli", "dim", "--count", "7",
                                "--matrix", SIGMA1,
                                "--matrix", "1 0 0 0  0 i 0 0  0 0 1 0  0 0 0 1")
    assert code == 0
    assert payload["centralizer_dimension"] == 6
    assert payload["dimension"] == 1


def test_moduli_monomials(capsys):
    code, payload, _ = run_json(
        capsys, "moduli", "dim",
        "--monomials", "X^4 Y^4 Z^4 ZW^3 Z^2W^2 Z^3W W^4",
        "--matrix", SIGMA1,
        "--matrix", "1 0 0 0  0 i 0 0  0 0 1 0  0 0 0 1")
    assert payload["parameters"] == 7 and payload["dimension"] == 1


def test_moduli_npns(capsys):
    code, payload, _ = run_json(capsys, "moduli", "npns", "--l", "4")
    assert code == 0 and payload["dimension"] == 2


def test_demo_passes(capsys):
    code, out, _ = run(capsys, "demo")
    assert code == 0
    assert "FAIL" not in out
    assert "all checks passed" in out


def test_surface_from_file(tmp_path, capsys):
    path = tmp_path / "surface.txt"
    path.write_text(FERMAT + "\n")
    code, payload, _ = run_json(capsys, "smooth", f"@{path}")
    assert code == 0 and payload["smooth"] is True


def test_json_output_deterministic(capsys):
    _, first, _ = run(capsys, "--format", "json", "galois", "find", FORM2)
    _, second, _ = run(capsys, "--format", "json", "galois", "find", FORM2)
    assert first == second
    parsed = json.loads(first)
    assert parsed["completeness"] == "proved-complete"


def test_usage_error_exit_code(capsys):
    assert main(["galois"]) == 1
    capsys.readouterr()
    assert main(["no-such-command"]) == 1
    capsys.readouterr()


def test_auto_classify_symplectic(capsys):
    sympl = "i 0 0 0  0 -i 0 0  0 0 1 0  0 0 0 1"
    code, payload, _ = run_json(capsys, "auto", "classify", FERMAT,
                                "--matrix", sympl)
    assert code == 0
    assert payload["character"] == "symplectic"
    assert payload["type_tuple"] is None
    assert payload["n"] == 4


def test_galois_find_with_candidate(capsys):
    code, payload, _ = run_json(capsys, "galois", "find", FERMAT,
                                "--candidate", "1:1:1:1")
    assert code == 0 and len(payload["points"]) == 4


def test_demo_seed_variation(capsys):
    code, out, _ = run(capsys, "--seed", "3", "demo")
    assert code == 0 and "FAIL" not in out
