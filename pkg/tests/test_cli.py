"""Command-line surface: formats and exit codes."""

from fractions import Fraction as F

from bermoments.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bernoulli(capsys):
    code, out, _ = run(capsys, "bernoulli", "--count", "4")
    assert code == 0
    assert out.splitlines() == ["1", "-1/2", "1/6", "0"]


def test_theta(capsys):
    code, out, _ = run(capsys, "theta", "--order", "4")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[2] == ["2", "-1/24"]
    assert rows[4] == ["4", "1/2880"]


def test_apoly_monomials(capsys):
    code, out, _ = run(capsys, "apoly", "--k", "2")
    assert code == 0
    assert out.splitlines() == ["x^2 nu^0 -> 1", "x^0 nu^1 -> -1/12"]


def test_apoly_evaluation(capsys):
    code, out, _ = run(capsys, "apoly", "--k", "2", "--x", "1/2", "--nu", "3")
    assert code == 0
    assert out.strip() == "0"


def test_apoly_needs_both_arguments(capsys):
    code, _, err = run(capsys, "apoly", "--k", "2", "--x", "1/2")
    assert code == 2
    assert "both" in err


def test_spectrum_qh(capsys):
    code, out, _ = run(capsys, "spectrum", "qh", "--weights", "1/3,1/2")
    assert code == 0
    assert out == "n 1\nalpha -1/6 mult 1\nalpha 1/6 mult 1\n"


def test_spectrum_tpqr_flags_non_hyperbolic(capsys):
    code, out, _ = run(capsys, "spectrum", "tpqr", "--p", "2", "--q", "2", "--r", "2")
    assert code == 0
    assert out.startswith("# non-hyperbolic")
    code, out, _ = run(capsys, "spectrum", "tpqr", "--p", "2", "--q", "3", "--r", "7")
    assert code == 0
    assert not out.startswith("#")


def test_spectrum_curve(capsys):
    code, out, _ = run(capsys, "spectrum", "curve", "--puiseux", "2:3")
    assert code == 0
    assert out == "n 1\nalpha -1/6 mult 1\nalpha 1/6 mult 1\n"


def test_spectrum_curve_invalid_pairs(capsys):
    code, _, err = run(capsys, "spectrum", "curve", "--puiseux", "2:3,2:5")
    assert code == 2
    assert "determinant" in err


def test_gamma_with_weights_and_mode(capsys):
    code, out, _ = run(capsys, "gamma", "--weights", "1/3,1/2", "--mode", "S", "--kmax", "2")
    assert code == 0
    assert out.splitlines() == ["0\t2", "1\t0", "2\t1/405"]


def test_gamma_with_spectrum_file(tmp_path, capsys):
    path = tmp_path / "cusp.spectrum"
    path.write_text("n 1\nalpha -1/6 mult 1\nalpha 1/6 mult 1\n")
    code, out, _ = run(capsys, "gamma", "--spectrum-file", str(path), "--nu", "2", "--kmax", "1")
    assert code == 0
    assert out.splitlines() == ["0\t2", "1\t-5/18"]


def test_gamma_needs_exactly_one_parameter_source(capsys):
    code, _, err = run(capsys, "gamma", "--weights", "1/2", "--kmax", "2")
    assert code == 2
    code, _, err = run(
        capsys, "gamma", "--weights", "1/2", "--nu", "1", "--mode", "S", "--kmax", "2"
    )
    assert code == 2


def test_gamma_missing_file(capsys):
    code, _, err = run(capsys, "gamma", "--spectrum-file", "/nonexistent", "--nu", "1", "--kmax", "1")
    assert code == 2
    assert "error" in err


def test_check_passing(capsys):
    code, out, _ = run(capsys, "check", "--mode", "S", "--weights", "1/3,1/2", "--kmax", "10")
    assert code == 0
    assert out.splitlines()[-1] == "overall\tpass"


def test_check_exit_one_on_failure(tmp_path, capsys):
    path = tmp_path / "lopsided.spectrum"
    path.write_text(
        "n 2\nalpha 0 mult 5\nalpha 1/2 mult 2\nalpha 1 mult 5\n"
    )
    code, out, _ = run(capsys, "check", "--mode", "W", "--spectrum-file", str(path), "--kmax", "6")
    assert code == 1
    assert out.splitlines()[-1] == "overall\tfail"


def test_check_deterministic_output(capsys):
    args = ("check", "--mode", "W", "--tpqr", "2,3,7", "--kmax", "8")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_trace_format(capsys):
    code, out, _ = run(capsys, "trace", "--tpqr", "2,3,7", "--nu", "1", "--kmax", "5")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert [r[0] for r in rows] == ["1", "2", "3", "4", "5"]
    assert abs(float(rows[4][1]) - 1.0) < 0.01


def test_nu_threshold(capsys):
    code, out, _ = run(
        capsys, "nu-threshold", "--weights", "1/3,1/2", "--k", "1", "--nu-hi", "1", "--steps", "20"
    )
    assert code == 0
    estimate = F(out.strip())
    assert F(1, 3) <= estimate <= F(1, 3) + F(1, 2**20)


def test_manifold_chi(capsys):
    code, out, _ = run(capsys, "manifold", "--chi", "2,20,2", "--nu", "2", "--kmax", "2")
    assert code == 0
    assert out.splitlines() == ["0\t24", "1\t0", "2\t12/5"]


def test_manifold_chi_needs_arguments(capsys):
    code, _, err = run(capsys, "manifold", "--chi", "2,20,2")
    assert code == 2


def test_manifold_chern_builtin(capsys):
    code, out, _ = run(capsys, "manifold", "chern", "--builtin", "k3", "--nu", "2", "--kmax", "1")
    assert code == 0
    assert out.splitlines() == ["0\t24", "1\t0"]


def test_manifold_chern_file(tmp_path, capsys):
    path = tmp_path / "p2.chern"
    path.write_text("# projective plane\nn 2\npartition 2 value 3\npartition 1,1 value 9\n")
    code, out, _ = run(capsys, "manifold", "chern", "--file", str(path), "--nu", "0", "--kmax", "1")
    assert code == 0
    assert out.splitlines() == ["0\t3", "1\t2"]


def test_manifold_chern_requires_one_source(capsys):
    code, _, err = run(capsys, "manifold", "chern", "--nu", "2", "--kmax", "1")
    assert code == 2
    code, _, err = run(
        capsys,
        "manifold", "chern", "--builtin", "k3", "--file", "x", "--nu", "2", "--kmax", "1",
    )
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert main(["spectrum", "qh"]) == 2
    capsys.readouterr()
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
