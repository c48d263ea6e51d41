import csv
import io

import numpy as np
import pytest

from stokes2.cli import main, sweep_grid
from stokes2.solution import wall_velocity
from stokes2.spectrum import critical_frequency, index_transition_frequency


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def read_csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_spectrum_index_one(capsys):
    code, out, _ = run(capsys, "spectrum", "--omega1", "0.3")
    assert code == 0 and "kappa                       1" in out
    res = float(out.strip().splitlines()[-1].split()[-1])
    assert res < 1e-12


def test_spectrum_index_zero(capsys):
    code, out, _ = run(capsys, "spectrum", "--omega1", "1.0")
    assert code == 0 and "no discrete zero" in out


@pytest.mark.parametrize("argv", [["spectrum", "--omega1", "-1"], ["spectrum", "--omega1", "abc"],
                                  ["sweep", "--from", "1", "--to", "2", "--steps", "1", "--quantity", "wall"],
                                  ["profile", "--omega1", "1"], ["bogus"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_sweep_to_must_exceed_from(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--from", "2", "--to", "1", "--steps", "3", "--quantity", "wall"])
    assert exc.value.code == 2


def test_near_critical_exit_code(capsys):
    code, _, err = run(capsys, "validate", "--omega1", repr(critical_frequency()))
    assert code == 3 and "critical" in err
    code, _, _ = run(capsys, "spectrum", "--omega1", repr(index_transition_frequency() + 1e-7))
    assert code == 3


def test_sweep_grid_drops_band():
    wc = critical_frequency()
    grid, dropped = sweep_grid(wc - 1e-7, wc + 1.0, 3)
    assert dropped.size == 1 and grid.size == 2


def test_wall_sweep_endpoints(capsys, tmp_path):
    out = tmp_path / "wall.csv"
    code, _, _ = run(capsys, "sweep", "--from", "1e-4", "--to", "100", "--steps", "12", "--log",
                     "--quantity", "wall", "--out", str(out))
    rows = read_csv(out.read_text())
    assert code == 0 and rows[0] == ["omega1", "kappa", "amplitude", "phase"]
    amp = [float(r[2]) for r in rows[1:]]
    assert abs(amp[0] - 1) < 0.01 and abs(amp[-1] - 0.5) < 0.01
    assert {r[1] for r in rows[1:]} == {"0", "1"}


def test_force_sweep_phase(capsys):
    code, out, _ = run(capsys, "sweep", "--from", "1e-6", "--to", "1", "--steps", "3", "--log", "--quantity", "force")
    rows = read_csv(out)
    assert abs(float(rows[1][3]) + np.pi / 4) < 2e-3


def test_dissipation_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--from", "1e-4", "--to", "1", "--steps", "2", "--quantity", "dissipation")
    rows = read_csv(out)
    assert rows[0] == ["omega1", "kappa", "power"]
    assert float(rows[1][2]) == pytest.approx(0.005, rel=0.05)


def test_sweep_parallel_is_ordered_and_identical(capsys):
    argv = ["sweep", "--from", "0.1", "--to", "3", "--steps", "7", "--quantity", "force"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "3")
    assert serial == parallel


def test_csv_bit_stable(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        run(capsys, "profile", "--omega1", "0.3", "--xmax", "5", "--points", "11", "--out", str(p))
    assert a.read_bytes() == b.read_bytes()
    data = a.read_bytes()
    assert b"\r" not in data and data.endswith(b"\n")
    first = read_csv(data.decode())[1]
    assert all(format(float(v), ".17g") == v for v in first)


def test_profile_first_row_is_wall_velocity(capsys):
    code, out, _ = run(capsys, "profile", "--omega1", "0.3", "--xmax", "50", "--points", "101", "--time", "0.5")
    rows = read_csv(out)
    assert rows[0] == ["x1", "re_U", "im_U", "abs_U", "U_t"]
    W = wall_velocity(0.3).W
    assert abs(complex(float(rows[1][1]), float(rows[1][2])) - W) < 1e-6
    assert float(rows[-1][3]) < 1e-6
    assert float(rows[1][4]) == pytest.approx(np.real(np.exp(-0.15j) * W), abs=1e-6)


def test_profile_landau(capsys):
    _, out, _ = run(capsys, "profile", "--omega1", "0.001", "--xmax", "20", "--points", "41")
    rows = np.array(read_csv(out)[1:], dtype=float)
    U = rows[:, 1] + 1j * rows[:, 2]
    ref = np.exp(-rows[:, 0] * np.sqrt(1e-3) * (1 - 1j))
    assert np.max(np.abs(U - ref)) < 0.05


def test_dimensional_flags(capsys):
    base = ["sweep", "--from", "0.5", "--to", "1", "--steps", "2", "--quantity", "force"]
    _, plain, _ = run(capsys, *base)
    _, dim, _ = run(capsys, *base, "--dimensional", "--n", "2.5e25", "--T", "300", "--m", "6.6e-26",
                    "--tau", "1e-9", "--u0", "1")
    assert float(read_csv(dim)[1][2]) != float(read_csv(plain)[1][2])
    with pytest.raises(SystemExit) as exc:
        main(base + ["--dimensional", "--n", "1e25"])
    assert exc.value.code == 2


def test_wall_formula_variants(capsys):
    base = ["sweep", "--from", "0.01", "--to", "0.02", "--steps", "2", "--quantity", "wall"]
    amps = {}
    for f in ("exact", "small", "small-printed"):
        _, out, _ = run(capsys, *base, "--formula", f)
        amps[f] = float(read_csv(out)[1][2])
    assert abs(amps["small"] - amps["exact"]) < abs(amps["small-printed"] - amps["exact"])


@pytest.mark.parametrize("w", ["1.0", "0.3"])
def test_validate_passes(capsys, w):
    code, out, _ = run(capsys, "validate", "--omega1", w)
    assert code == 0 and "FAIL" not in out
    if w == "0.3":
        assert "a0_two_forms" in out


def test_validate_failure_exit_code(capsys, monkeypatch):
    import stokes2.cli as cli

    monkeypatch.setitem(cli.TOLERANCES, "wall_bc", 0.0)
    code, out, _ = run(capsys, "validate", "--omega1", "1.0", "--no-oracle")
    assert code == 4 and "FAIL  wall_bc" in out


def test_io_error_exit_code(capsys, tmp_path):
    code, _, err = run(capsys, "profile", "--omega1", "1", "--xmax", "1", "--points", "3",
                       "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 1 and "error" in err
