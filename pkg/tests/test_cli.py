import json

import numpy as np
import pytest

from qsymlie import cli
from qsymlie import generators as g
from qsymlie.linalg import matrix_to_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestDecompose:
    def test_three_qutrits_text(self, capsys):
        code, out, _ = run(capsys, "decompose", "--d", "3", "--n", "3")
        assert code == 0
        assert "(3, 0, 0)    10     1" in out
        assert "(2, 1, 0)     8     2" in out
        assert "(1, 1, 1)     1     1" in out
        assert "sum k*dim = 27 = d^n: OK" in out

    def test_three_qubits_json(self, capsys):
        code, out, _ = run(capsys, "decompose", "--d", "2", "--n", "3", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["irreps"] == [
            {"iweight": [3, 0], "dim": 4, "multiplicity": 1},
            {"iweight": [2, 1], "dim": 2, "multiplicity": 2},
        ]
        assert obj["ok"] is True

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "decompose", "--d", "3", "--n", "4", "--format", "json")
        _, second, _ = run(capsys, "decompose", "--d", "3", "--n", "4", "--format", "json")
        assert first == second

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["decompose", "--d", "3"])
        assert exc.value.code == 1

    def test_invalid_d(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["decompose", "--d", "1", "--n", "3"])
        assert exc.value.code == 1


class TestCenter:
    def test_qutrits(self, capsys):
        code, out, _ = run(capsys, "center", "--d", "3", "--n", "3")
        assert code == 0
        assert "f(n=3, d=3) = 3" in out
        assert "dimension 3: OK" in out

    def test_seven_qubits(self, capsys):
        code, out, _ = run(capsys, "center", "--d", "2", "--n", "7")
        assert code == 0
        assert "f(n=7, d=2) = 4" in out

    def test_d4(self, capsys):
        code, out, _ = run(capsys, "center", "--d", "4", "--n", "4", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["center_dim"] == 5
        assert obj["verified"] is True

    def test_large_space_skips_materialization(self, capsys):
        code, out, _ = run(capsys, "center", "--d", "3", "--n", "8", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["center_dim"] == 10
        assert "materialized_dim" not in obj


class TestSpectrum:
    def test_four_qubits(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--d", "2", "--n", "4", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        rows = {tuple(b["block_label"]): b for b in obj["blocks"]}
        assert rows[(4, 0)]["block_dim"] == 5
        assert rows[(3, 1)]["block_dim"] == 9
        assert rows[(2, 2)]["block_dim"] == 2
        assert [b["c2_cluster_index"] for b in obj["blocks"]] == [0, 1, 2]

    def test_three_qutrits_text(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--d", "3", "--n", "3")
        assert code == 0
        assert "(3, 0, 0)" in out and "10" in out


class TestClosure:
    def test_qubit_preset(self, capsys):
        code, out, _ = run(
            capsys, "closure", "--preset", "qubits:n=3", "--format", "json", "--tol", "1e-7"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["total_dim"] == 19
        assert obj["subspace_controllable"] is True
        assert obj["saturated"] is True

    def test_lemma2_preset(self, capsys):
        code, out, _ = run(capsys, "closure", "--preset", "lemma2:2,1,(1,3)", "--format", "json")
        assert code == 0
        assert json.loads(out)["total_dim"] == 8

    def test_unsaturated_exit_code(self, capsys):
        code, out, _ = run(
            capsys, "closure", "--preset", "qubits:n=3", "--max-dim", "5", "--format", "json"
        )
        assert code == 2
        obj = json.loads(out)
        assert obj["saturated"] is False and obj["dim_reached"] == 5

    def test_preset_and_spec_mutually_exclusive(self, capsys):
        code, _, err = run(capsys, "closure", "--preset", "qubits:n=2", "--spec", "x.json")
        assert code == 1
        assert "exactly one" in err

    def test_unknown_preset(self, capsys):
        code, _, err = run(capsys, "closure", "--preset", "bogus")
        assert code == 1

    def test_spec_file_terms(self, capsys, tmp_path):
        # three-qubit generators as F-combinations: local x, y, z and z (x) z
        spec = {
            "d": 2,
            "n": 3,
            "hamiltonians": [
                [{"multi_index": [2, 1, 0, 0], "coeff_re": 1.0}],
                [{"multi_index": [2, 0, 1, 0], "coeff_re": 1.0}],
                [{"multi_index": [2, 0, 0, 1], "coeff_re": 1.0}],
                [{"multi_index": [1, 0, 0, 2], "coeff_re": 1.0}],
            ],
        }
        path = tmp_path / "gens.json"
        path.write_text(json.dumps(spec))
        code, out, _ = run(
            capsys, "closure", "--spec", str(path), "--format", "json", "--tol", "1e-7"
        )
        assert code == 0
        obj = json.loads(out)
        # same algebra as the qubits:n=3 preset
        assert obj["total_dim"] == 19 and obj["subspace_controllable"] is True

    def test_spec_file_matrix_form(self, capsys, tmp_path):
        sx, sy, sz = g.pauli_matrices()
        spec = {
            "d": 2,
            "n": 2,
            "hamiltonians": [
                matrix_to_json(g.collective(sx, 2)),
                matrix_to_json(g.collective(sy, 2)),
                matrix_to_json(g.collective(sz, 2)),
                matrix_to_json(np.kron(sz, sz)),
            ],
        }
        path = tmp_path / "gens.json"
        path.write_text(json.dumps(spec))
        code, out, _ = run(capsys, "closure", "--spec", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out)["total_dim"] == 9

    def test_spec_file_rejects_non_invariant_matrix(self, capsys, tmp_path):
        bad = np.zeros((4, 4), dtype=complex)
        bad[0, 1] = bad[1, 0] = 1.0  # Hermitian but not permutation invariant
        spec = {"d": 2, "n": 2, "hamiltonians": [matrix_to_json(bad)]}
        path = tmp_path / "gens.json"
        path.write_text(json.dumps(spec))
        code, _, err = run(capsys, "closure", "--spec", str(path))
        assert code == 1
        assert "commute" in err

    def test_spec_file_rejects_non_hermitian(self, capsys, tmp_path):
        bad = np.zeros((2, 2), dtype=complex)
        bad[0, 1] = 1.0
        spec = {"d": 2, "n": 1, "hamiltonians": [matrix_to_json(bad)]}
        path = tmp_path / "gens.json"
        path.write_text(json.dumps(spec))
        code, _, err = run(capsys, "closure", "--spec", str(path))
        assert code == 1
        assert "Hermitian" in err


class TestDegeneracy:
    def test_pair(self, capsys):
        code, out, _ = run(capsys, "degeneracy", "5", "2", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj == {"seed": [5, 2], "c2": 60, "matches": [[2, 5], [5, 2]]}

    def test_text(self, capsys):
        code, out, _ = run(capsys, "degeneracy", "0", "0")
        assert code == 0
        assert "c2(0,0) = 0" in out and "(0,0)" in out

    def test_negative_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["degeneracy", "--", "-1", "2"])
        assert exc.value.code == 1


class TestOutputFile:
    def test_out_flag(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "decompose", "--d", "2", "--n", "2", "--format", "json", "--out", str(path)
        )
        assert code == 0 and out == ""
        obj = json.loads(path.read_text())
        assert obj["checks"]["d_pow_n"] == 4
