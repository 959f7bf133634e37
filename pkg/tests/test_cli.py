import json

from vdwsurf.cli import (
    EXIT_CONFIG,
    EXIT_IO,
    EXIT_OK,
    EXIT_QUADRATURE,
    EXIT_VALIDATION,
    main,
)


def write_config(tmp_path, name="run.json", **overrides):
    cfg = {
        "system": {"upper": "vacuum", "lower": "sapphire-ir", "omega_max": 3.0},
        "atom_a": {"omega0": 1.0},
        "atom_b": {"omega0": 0.9, "gamma": 0.001},
        "scan": {"omega_min": 0.7, "omega_max": 1.3, "n_points": 400},
    }
    cfg.update(overrides)
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return path


def test_spectrum_csv(tmp_path):
    cfg = write_config(tmp_path)
    out = tmp_path / "spec.csv"
    assert main(["spectrum", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "omega_over_ref,u_resonant,u_resonant_no_lf,g,g_no_lf"
    assert len(lines) == 401


def test_spectrum_points_override(tmp_path):
    cfg = write_config(tmp_path)
    out = tmp_path / "two.csv"
    assert main(["spectrum", "--config", str(cfg), "--points", "2", "--out", str(out)]) == EXIT_OK
    assert len(out.read_text().splitlines()) == 3


def test_spectrum_deterministic_bytes(tmp_path):
    cfg = write_config(tmp_path)
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["spectrum", "--config", str(cfg), "--out", str(out1)])
    main(["spectrum", "--config", str(cfg), "--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()


def test_spectrum_offresonant_column(tmp_path):
    cfg = write_config(
        tmp_path,
        scan={
            "omega_min": 0.8,
            "omega_max": 1.0,
            "n_points": 3,
            "include_offresonant": True,
        },
    )
    out = tmp_path / "off.csv"
    assert main(["spectrum", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0].endswith(",u_offresonant")
    assert len(lines[1].split(",")) == 6


def test_spectrum_json_format(tmp_path):
    cfg = write_config(tmp_path, output={"path": "ignored.json", "format": "json"})
    out = tmp_path / "spec.json"
    assert main(["spectrum", "--config", str(cfg), "--points", "5", "--out", str(out)]) == EXIT_OK
    rows = json.loads(out.read_text())
    assert len(rows) == 5 and set(rows[0]) == {
        "omega_over_ref",
        "u_resonant",
        "u_resonant_no_lf",
        "g",
        "g_no_lf",
    }


def test_enhancement_values(tmp_path):
    cfg = write_config(tmp_path, scan={"omega_min": 0.7, "omega_max": 1.3, "n_points": 2000})
    out = tmp_path / "enh.csv"
    assert main(["enhancement", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "omega_over_ref,g,g_no_lf"
    rows = [tuple(float(c) for c in line.split(",")) for line in lines[1:]]
    g_max = max(r[1] for r in rows)
    assert abs(g_max / 2947.6 - 1.0) < 0.02
    # the grid row nearest the cavity mode carries its enhancement
    near_cavity = min(rows, key=lambda r: abs(r[0] - 1.038953727971774))
    assert abs(near_cavity[1] / 1217.9 - 1.0) < 0.02


def test_enhancement_vacuum_all_ones(tmp_path):
    cfg = write_config(
        tmp_path,
        system={"upper": "vacuum", "lower": "vacuum"},
        scan={"omega_min": 0.7, "omega_max": 1.3, "n_points": 50},
    )
    out = tmp_path / "enh.csv"
    main(["enhancement", "--config", str(cfg), "--out", str(out)])
    for line in out.read_text().splitlines()[1:]:
        assert line.split(",")[1] == "1"


def test_peaks_classification(tmp_path):
    cfg = write_config(tmp_path, scan={"omega_min": 0.7, "omega_max": 1.3, "n_points": 2000})
    out = tmp_path / "peaks.json"
    assert main(["peaks", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
    peaks = json.loads(out.read_text())
    kinds = [p["kind"] for p in peaks]
    assert kinds.count("surface_mode") == 1
    assert kinds.count("cavity_mode") == 1
    assert kinds.count("atomic_resonance") == 1


def test_peaks_empty_when_no_feature_in_window(tmp_path):
    cfg = write_config(
        tmp_path,
        system={"upper": "vacuum", "lower": "vacuum"},
        atom_b={"omega0": 5.0, "gamma": 0.001},
    )
    out = tmp_path / "peaks.json"
    assert main(["peaks", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text()) == []


def test_validate_pass(tmp_path):
    cfg = write_config(tmp_path)
    out = tmp_path / "val.csv"
    assert main(["validate", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "scale,component,ratio_re,ratio_im"
    final = [line for line in lines[1:] if line.startswith("0.001,")]
    assert final
    for line in final:
        _, _, re_s, im_s = line.split(",")
        assert abs(complex(float(re_s), float(im_s)) - 1.0) < 0.01


def test_validate_vacuum_pass(tmp_path):
    cfg = write_config(tmp_path, system={"upper": "vacuum", "lower": "vacuum"})
    assert main(["validate", "--config", str(cfg), "--out", str(tmp_path / "v.csv")]) == EXIT_OK


def test_validate_fails_at_large_scale(tmp_path, capsys):
    cfg = write_config(tmp_path, validate={"scales": [1.0]})
    rc = main(["validate", "--config", str(cfg), "--out", str(tmp_path / "v.csv")])
    assert rc == EXIT_VALIDATION
    assert "FAILED" in capsys.readouterr().err


def test_quadrature_failure_exit_code(tmp_path):
    cfg = write_config(tmp_path, quadrature={"rel_tol": 1e-13, "max_panels": 2})
    rc = main(["validate", "--config", str(cfg), "--out", str(tmp_path / "v.csv")])
    assert rc == EXIT_QUADRATURE


def test_config_error_exit_and_message(tmp_path, capsys):
    cfg = write_config(tmp_path, system={"upper": "vacuum", "lower": "sapphirr"})
    rc = main(["spectrum", "--config", str(cfg), "--out", str(tmp_path / "x.csv")])
    assert rc == EXIT_CONFIG
    err = capsys.readouterr().err
    assert "config.system.lower" in err and "sapphirr" in err


def test_missing_config_file(tmp_path):
    assert main(["spectrum", "--config", str(tmp_path / "nope.json")]) == EXIT_CONFIG


def test_bad_points_override(tmp_path):
    cfg = write_config(tmp_path)
    assert main(["spectrum", "--config", str(cfg), "--points", "1"]) == EXIT_CONFIG


def test_io_error_exit_code(tmp_path):
    cfg = write_config(tmp_path)
    out = tmp_path / "no_such_dir" / "x.csv"
    assert main(["spectrum", "--config", str(cfg), "--out", str(out)]) == EXIT_IO


def test_bundled_config_runs(tmp_path):
    out = tmp_path / "fig2.csv"
    assert main(["spectrum", "--config", "fig2", "--points", "50", "--out", str(out)]) == EXIT_OK
    assert len(out.read_text().splitlines()) == 51


def test_numeric_format_is_12_significant_digits(tmp_path):
    cfg = write_config(tmp_path)
    out = tmp_path / "fmt.csv"
    main(["spectrum", "--config", str(cfg), "--points", "2", "--out", str(out)])
    first_row = out.read_text().splitlines()[1].split(",")
    for cell in first_row:
        mantissa = cell.replace("-", "").replace(".", "").split("e")[0].lstrip("0")
        assert len(mantissa) <= 12
