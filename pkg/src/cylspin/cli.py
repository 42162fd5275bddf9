"""cylspin command-line interface.

Subcommands::

    cylspin modes      --config FILE [--set key=value ...] [--out DIR]
    cylspin dispersion ...
    cylspin rotation   ...
    cylspin density    ...
    cylspin validate   ...

Configuration is a flat key=value text file ('#' comments); --set overrides
win over the file, which wins over the built-in defaults (the defaults
reproduce the R=6, dv=0.02 figure configuration).  Every output is CSV with
a '#'-prefixed header embedding the fully resolved configuration, numbers
printed at 17 significant digits, and no timestamps, so identical
configurations produce byte-identical files; run provenance that may vary
(clock, command line) goes to the run_info.txt sidecar instead.

Exit codes: 0 success, 1 configuration error, 2 solver non-convergence,
3 validation failures.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, CutoffError, CylspinError, SolverError
from .model import ModeSpec, OperatingPoint, make_params, validate_regime
from .scalar_modes import (ScalarMode, characteristic_residual,
                           dispersion_curve, energy_shift,
                           mode_from_wavenumbers, radial_profile,
                           rotation_rate_fw, solve_scalar_modes, soi_shift)
from .dirac_modes import (form_equivalence, solve_dirac_pair,
                          solve_first_order)
from .specfun import bessel_j, bessel_j_deriv, bessel_k, bessel_k_deriv
from .wavefield import (GridSpec, sample_bispinor_density, sample_eigenstate,
                        sample_rotating_superposition)

SOLVERS = ("fw", "dirac", "dirac-firstorder", "all")

DEFAULTS: dict[str, object] = {
    # potential / operating point
    "compton_ratio": 30.0,
    "v0": 0.02,
    "dv": 0.02,
    "gamma_z": 1.0,
    "vz_over_c": 0.5,
    # solver selection and mode labels
    "solver": "all",
    "m_values": "0,1,2,3",
    "m_ell": 1,
    "sigma": 1,
    "radial_index": 0,
    "use_full_dirac": False,
    # sweeps
    "r_values": "3,4,5,6,8,10",
    "n_energy": 101,
    "exaggeration": 1.0,
    "relativistic": False,
    # density grids
    "density_kind": "superposition",
    "geometry": "polar",
    "grid_n": 256,
    "grid_extent": 2.0,
    "grid_rho": 0.6,
    "z_over_a": 0.0,
    "write_pgm": False,
    # validation
    "equivalence_samples": 1000,
    "equivalence_tol": 1e-10,
    "normalization_tol": 1e-8,
    "seed": 7,
}


def _coerce(key: str, raw: str):
    if key not in DEFAULTS:
        raise ConfigurationError(f"unknown configuration key {key!r}")
    default = DEFAULTS[key]
    if isinstance(default, bool):
        low = raw.strip().lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ConfigurationError(f"{key}: expected a boolean, got {raw!r}")
    if isinstance(default, int):
        return int(raw)
    if isinstance(default, float):
        return float(raw)
    return raw.strip()


def load_config(path: str | None, overrides: list[str]) -> dict:
    cfg = dict(DEFAULTS)
    if path is not None:
        p = Path(path)
        if not p.is_file():
            raise ConfigurationError(f"config file not found: {path}")
        for lineno, line in enumerate(p.read_text().splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigurationError(f"{path}:{lineno}: expected key = value")
            key, raw = (part.strip() for part in line.split("=", 1))
            cfg[key] = _coerce(key, raw)
    for item in overrides:
        if "=" not in item:
            raise ConfigurationError(f"--set expects key=value, got {item!r}")
        key, raw = (part.strip() for part in item.split("=", 1))
        cfg[key] = _coerce(key, raw)
    if cfg["solver"] not in SOLVERS:
        raise ConfigurationError(f"solver must be one of {SOLVERS}, got {cfg['solver']!r}")
    return cfg


def _int_list(cfg: dict, key: str) -> list[int]:
    items = [s for s in str(cfg[key]).replace(" ", "").split(",") if s]
    if not items:
        raise ConfigurationError(f"empty sweep: {key}")
    return [int(s) for s in items]


def _float_list(cfg: dict, key: str) -> list[float]:
    items = [s for s in str(cfg[key]).replace(" ", "").split(",") if s]
    if not items:
        raise ConfigurationError(f"empty sweep: {key}")
    return [float(s) for s in items]


def _params_op(cfg: dict):
    params = make_params(cfg["compton_ratio"], cfg["v0"], cfg["dv"], cfg["gamma_z"])
    op = OperatingPoint(cfg["vz_over_c"])
    return params, op


def fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _header(cfg: dict, extra: dict | None = None) -> list[str]:
    lines = ["# cylspin output"]
    for key in sorted(cfg):
        lines.append(f"# config {key} = {fmt(cfg[key])}")
    for key in sorted(extra or {}):
        lines.append(f"# {key} = {fmt(extra[key])}")
    return lines


def write_csv(path: Path, header: list[str], columns: list[str], rows) -> None:
    with open(path, "w", newline="\n") as fh:
        for line in header:
            fh.write(line + "\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(fmt(v) for v in row) + "\n")


def write_pgm(path: Path, samples: np.ndarray) -> None:
    """8-bit ASCII PGM, samples scaled to the grid maximum."""
    peak = float(samples.max())
    scaled = np.zeros_like(samples, dtype=int) if peak <= 0 else \
        np.rint(samples / peak * 255.0).astype(int)
    with open(path, "w", newline="\n") as fh:
        fh.write(f"P2\n{samples.shape[1]} {samples.shape[0]}\n255\n")
        for row in scaled:
            fh.write(" ".join(str(v) for v in row) + "\n")


def _sidecar(outdir: Path, argv: list[str]) -> None:
    with open(outdir / "run_info.txt", "w", newline="\n") as fh:
        fh.write(f"timestamp: {time.strftime('%Y-%m-%dT%H:%M:%S%z')}\n")
        fh.write(f"argv: {' '.join(argv)}\n")


# ---------------------------------------------------------------- commands

def cmd_modes(cfg: dict, outdir: Path) -> int:
    params, op = _params_op(cfg)
    solver = cfg["solver"]
    columns = ["m_ell", "sigma", "n", "u", "w", "norm_a2", "residual"]
    if solver in ("fw", "all"):
        columns += ["dE", "dBeta_a", "dBetaRotFW_a"]
    if solver in ("dirac", "dirac-firstorder", "all"):
        columns += ["u_plus", "u_minus", "dBetaRotDirac_a", "dBetaRotFirst_a"]
    if solver == "all":
        columns += ["relDiffFWDirac"]
    columns += ["warnings"]

    rows = []
    for m in _int_list(cfg, "m_values"):
        modes = solve_scalar_modes(params, m)
        pair_cache = {}
        first_cache = {}
        for mode in modes:
            if m >= 1 and solver in ("dirac", "dirac-firstorder", "all"):
                try:
                    pair_cache[mode.radial_index] = solve_dirac_pair(
                        params, m, mode.radial_index, op, use_full=cfg["use_full_dirac"])
                    first_cache[mode.radial_index] = solve_first_order(
                        params, m, mode.radial_index, op)
                except CutoffError:
                    pass
        for sigma in (+1, -1):
            for mode in modes:
                spec = ModeSpec(m_ell=m, sigma=sigma, radial_index=mode.radial_index)
                resid = characteristic_residual(mode.u, m, params.R)
                row = [m, sigma, mode.radial_index, mode.u, mode.w, mode.norm_a2, resid]
                if solver in ("fw", "all"):
                    shift = soi_shift(mode, spec, params, op)
                    row += [shift.dE, shift.dBeta_a, shift.dBetaRot_a]
                if solver in ("dirac", "dirac-firstorder", "all"):
                    pair = pair_cache.get(mode.radial_index)
                    first = first_cache.get(mode.radial_index)
                    row += [
                        pair.u_plus if pair else math.nan,
                        pair.u_minus if pair else math.nan,
                        pair.dBetaRot_a if pair else math.nan,
                        first.dBetaRot_a if first else math.nan,
                    ]
                if solver == "all":
                    pair = pair_cache.get(mode.radial_index)
                    if pair and m >= 1:
                        fw = rotation_rate_fw(mode, params, op)
                        row += [abs(fw - pair.dBetaRot_a) / abs(pair.dBetaRot_a)]
                    else:
                        row += [math.nan]
                warnings = validate_regime(params, op, mode.u)
                row += ["; ".join(w.message for w in warnings) or "ok"]
                rows.append(row)
    write_csv(outdir / "modes.csv", _header(cfg, {"R": params.R, "R_gamma": params.R_gamma}),
              columns, rows)
    return 0


def _energy_window(mode: ScalarMode, params, relativistic: bool, n: int):
    """Sample energies from just above branch onset up to beta*a = 2R."""
    c2 = params.compton_ratio ** 2
    if relativistic:
        e_lo = math.sqrt(1.0 + mode.u ** 2 / c2) - 1.0 - params.v0
        e_hi = math.sqrt(1.0 + (mode.u ** 2 + 4.0 * params.R ** 2) / c2) - 1.0 - params.v0
    else:
        e_lo = mode.u ** 2 / (2.0 * c2) - params.v0
        e_hi = (mode.u ** 2 + 4.0 * params.R ** 2) / (2.0 * c2) - params.v0
    pad = (e_hi - e_lo) * 1e-6
    return np.linspace(e_lo + pad, e_hi, n)


def cmd_dispersion(cfg: dict, outdir: Path) -> int:
    params, op = _params_op(cfg)
    solver = cfg["solver"]
    relativistic = cfg["relativistic"]
    n_energy = int(cfg["n_energy"])
    if n_energy < 2:
        raise ConfigurationError(f"n_energy must be >= 2, got {n_energy}")
    exag = float(cfg["exaggeration"])
    for m in _int_list(cfg, "m_values"):
        modes = solve_scalar_modes(params, m)
        if not modes:
            # below cutoff: header-only file so the absence is explicit
            write_csv(outdir / f"dispersion_m{m}.csv",
                      _header(cfg, {"R": params.R, "note": "below cutoff"}),
                      ["E", "beta_a_unperturbed", "beta_a_fw", "beta_a_fw_display"],
                      [])
            continue
        for mode in modes:
            sigmas = (+1, -1) if m >= 1 else (+1,)
            for sigma in sigmas:
                spec = ModeSpec(m_ell=m, sigma=sigma, radial_index=mode.radial_index)
                energies = _energy_window(mode, params, relativistic, n_energy)
                base = dispersion_curve(mode, params, energies, relativistic)
                dE = energy_shift(mode, spec, params)
                fw = dispersion_curve(mode, params, energies - dE, relativistic)
                disp = dispersion_curve(mode, params, energies - exag * dE, relativistic)
                columns = ["E", "beta_a_unperturbed", "beta_a_fw", "beta_a_fw_display"]
                series = [energies,
                          [p.beta_a for p in base],
                          [p.beta_a for p in fw],
                          [p.beta_a for p in disp]]
                if m >= 1 and solver in ("dirac", "dirac-firstorder", "all"):
                    try:
                        pair = solve_dirac_pair(params, m, mode.radial_index, op,
                                                use_full=cfg["use_full_dirac"])
                        u_s = pair.u_plus if sigma > 0 else pair.u_minus
                        dmode = mode_from_wavenumbers(
                            m, mode.radial_index, u_s,
                            math.sqrt(params.R_gamma ** 2 - u_s ** 2))
                        dcurve = dispersion_curve(dmode, params, energies, relativistic)
                        columns += ["beta_a_dirac", "gap_fw_dirac"]
                        series += [[p.beta_a for p in dcurve],
                                   [abs(a.beta_a - b.beta_a) for a, b in zip(fw, dcurve)]]
                    except CutoffError:
                        pass
                rows = list(zip(*series))
                tag = f"m{m}_n{mode.radial_index}"
                if m >= 1:
                    tag += "_par" if sigma > 0 else "_anti"
                write_csv(outdir / f"dispersion_{tag}.csv",
                          _header(cfg, {"R": params.R, "u": mode.u, "sigma": sigma,
                                        "dE_shift": dE,
                                        "energy_convention": "total-minus-rest (mc^2 units)"}),
                          columns, rows)
    return 0


def cmd_rotation(cfg: dict, outdir: Path) -> int:
    dv = float(cfg["dv"])
    m_ell = int(cfg["m_ell"])
    n = int(cfg["radial_index"])
    op = OperatingPoint(cfg["vz_over_c"])
    rows = []
    for big_r in _float_list(cfg, "r_values"):
        c = big_r / math.sqrt(2.0 * dv)
        params = make_params(c, cfg["v0"], dv, cfg["gamma_z"])
        modes = solve_scalar_modes(params, abs(m_ell))
        if n >= len(modes):
            raise CutoffError(f"no radial index {n} at R={big_r} for |m_ell|={abs(m_ell)}")
        fw = rotation_rate_fw(modes[n], params, op)
        pair = solve_dirac_pair(params, m_ell, n, op, use_full=cfg["use_full_dirac"])
        first = solve_first_order(params, m_ell, n, op)
        rows.append([
            big_r, c, fw, pair.dBetaRot_a, first.dBetaRot_a,
            abs(fw - pair.dBetaRot_a) / abs(pair.dBetaRot_a),
            abs(first.dBetaRot_a - pair.dBetaRot_a) / abs(pair.dBetaRot_a),
        ])
    write_csv(outdir / "rotation_vs_R.csv",
              _header(cfg, {"sweep": "compton_ratio varies, dv fixed",
                            "m_ell": m_ell, "radial_index": n}),
              ["R", "compton_ratio", "dBetaRotFW_a", "dBetaRotDirac_a",
               "dBetaRotFirst_a", "relDiffFWDirac", "relDiffFirstDirac"],
              rows)
    return 0


def cmd_density(cfg: dict, outdir: Path) -> int:
    params, op = _params_op(cfg)
    kind = str(cfg["density_kind"])
    m_ell = int(cfg["m_ell"])
    sigma = int(cfg["sigma"])
    n = int(cfg["radial_index"])
    spec = ModeSpec(m_ell=m_ell, sigma=sigma, radial_index=n)
    grid = GridSpec(geometry=str(cfg["geometry"]), n0=int(cfg["grid_n"]),
                    n1=int(cfg["grid_n"]), extent=float(cfg["grid_extent"]),
                    rho=float(cfg["grid_rho"]))
    modes = solve_scalar_modes(params, abs(m_ell))
    if n >= len(modes):
        raise CutoffError(f"no radial index {n} for |m_ell|={abs(m_ell)}")
    mode = modes[n]

    if kind == "eigenstate":
        fieldgrid = sample_eigenstate(mode, spec, grid)
    elif kind == "superposition":
        solver = cfg["solver"]
        if solver == "dirac":
            rot = solve_dirac_pair(params, m_ell, n, op, cfg["use_full_dirac"]).dBetaRot_a
            source = "dirac"
        elif solver == "dirac-firstorder":
            rot = solve_first_order(params, m_ell, n, op).dBetaRot_a
            source = "dirac-firstorder"
        else:
            rot = rotation_rate_fw(mode, params, op)
            source = "fw"
        fieldgrid = sample_rotating_superposition(mode, sigma, rot, grid,
                                                  z_over_a=float(cfg["z_over_a"]))
        fieldgrid.metadata["rotation_source"] = source
    elif kind == "bispinor":
        pair = solve_dirac_pair(params, m_ell, n, op, cfg["use_full_dirac"])
        fieldgrid = sample_bispinor_density(pair, spec, params, op, grid,
                                            z_over_a=float(cfg["z_over_a"]))
    else:
        raise ConfigurationError(
            f"density_kind must be eigenstate|superposition|bispinor, got {kind!r}")

    meta = {f"grid_{k}": v for k, v in (
        ("geometry", fieldgrid.geometry),
        ("axis0_start", float(fieldgrid.axis0[0])),
        ("axis0_stop", float(fieldgrid.axis0[-1])),
        ("axis0_n", len(fieldgrid.axis0)),
        ("axis1_start", float(fieldgrid.axis1[0])),
        ("axis1_stop", float(fieldgrid.axis1[-1])),
        ("axis1_n", len(fieldgrid.axis1)),
    )}
    for k, v in sorted(fieldgrid.metadata.items()):
        if v is not None and not isinstance(v, (list, tuple, np.ndarray)):
            meta[f"field_{k}"] = v
    header = _header(cfg, meta)
    path = outdir / "density.csv"
    with open(path, "w", newline="\n") as fh:
        for line in header:
            fh.write(line + "\n")
        fh.write("# rows = axis0, columns = axis1\n")
        for row in fieldgrid.samples:
            fh.write(",".join(fmt(float(v)) for v in row) + "\n")
    if cfg["write_pgm"]:
        write_pgm(outdir / "density.pgm", fieldgrid.samples)
    return 0


def _validate_rows(cfg: dict):
    """Run the invariant suites; yields (suite, check, status, detail)."""
    from scipy.integrate import quad

    params, op = _params_op(cfg)
    rng = np.random.default_rng(int(cfg["seed"]))
    rows = []

    # characteristic-form equivalence sweep
    n_samples = int(cfg["equivalence_samples"])
    tol = float(cfg["equivalence_tol"])
    worst = 0.0
    drawn = 0
    while drawn < n_samples:
        u = rng.uniform(0.1, 12.0)
        w = rng.uniform(0.1, 12.0)
        eps = rng.uniform(0.0, 0.05)
        m_ell = int(rng.integers(-5, 6))
        if m_ell == 0:
            continue
        sigma = +1 if rng.integers(0, 2) else -1
        try:
            r_signed, r_unified = form_equivalence(u, w, eps, m_ell, sigma)
        except CylspinError:
            continue
        drawn += 1
        scale = max(abs(r_signed), abs(r_unified), 1.0)
        worst = max(worst, abs(r_signed - sigma * r_unified) / scale)
    rows.append(("form-equivalence", f"{n_samples} random tuples",
                 "PASS" if worst <= tol else "FAIL",
                 f"max relative discrepancy {worst:.3e} vs tol {tol:.3e}"))

    # recurrence and derivative identities on a spot grid
    worst_rec = 0.0
    worst_der = 0.0
    for n in range(1, 8):
        for x in (0.37, 1.7, 4.2, 9.3, 21.0):
            jm, j0, jp = bessel_j(n - 1, x), bessel_j(n, x), bessel_j(n + 1, x)
            scale = max(abs(jm), abs(jp), 1e-30)
            worst_rec = max(worst_rec, abs(jm + jp - 2 * n / x * j0) / scale)
            km, k0, kp = bessel_k(n - 1, x), bessel_k(n, x), bessel_k(n + 1, x)
            worst_rec = max(worst_rec, abs(kp - km - 2 * n / x * k0) / max(kp, km))
            worst_der = max(worst_der, abs(bessel_j_deriv(n, x) - (jm - n / x * j0))
                            / max(abs(jm), abs(j0), 1e-30))
            worst_der = max(worst_der, abs(bessel_k_deriv(n, x) + km + n / x * k0)
                            / max(km, k0))
    rows.append(("specfun", "recurrence identities",
                 "PASS" if worst_rec <= 1e-10 else "FAIL", f"max residual {worst_rec:.3e}"))
    rows.append(("specfun", "derivative identities",
                 "PASS" if worst_der <= 1e-10 else "FAIL", f"max residual {worst_der:.3e}"))

    # solved modes: residuals, normalization quadrature, boundary matching
    ntol = float(cfg["normalization_tol"])
    for m in _int_list(cfg, "m_values"):
        modes = solve_scalar_modes(params, m)
        for mode in modes:
            resid = abs(characteristic_residual(mode.u, m, params.R))
            ok = resid <= 1e-10 * (1.0 + mode.u)
            rows.append(("scalar-modes", f"residual m={m} n={mode.radial_index}",
                         "PASS" if ok else "FAIL", f"|F(u)| = {resid:.3e}"))
            integral = 2.0 * math.pi * (
                quad(lambda r: radial_profile(mode, r) ** 2 * r, 0.0, 1.0,
                     epsabs=1e-13, epsrel=1e-12)[0]
                + quad(lambda r: radial_profile(mode, r) ** 2 * r, 1.0, np.inf,
                       epsabs=1e-13, epsrel=1e-12)[0])
            ok = abs(integral - 1.0) <= ntol
            rows.append(("normalization", f"quadrature m={m} n={mode.radial_index}",
                         "PASS" if ok else "FAIL",
                         f"|integral - 1| = {abs(integral - 1.0):.3e} vs tol {ntol:.3e}"))
            lo = radial_profile(mode, 1.0 - 1e-7)
            hi = radial_profile(mode, 1.0 + 1e-7)
            ok = abs(hi - lo) <= 1e-5 * abs(lo)
            rows.append(("boundary", f"continuity m={m} n={mode.radial_index}",
                         "PASS" if ok else "FAIL", f"jump {abs(hi - lo):.3e}"))
            for w in validate_regime(params, op, mode.u):
                rows.append(("regime", f"{w.check} m={m} n={mode.radial_index}",
                             "INFO", w.message))

    # sign and ordering invariants
    for m in _int_list(cfg, "m_values"):
        if m < 1:
            continue
        modes = solve_scalar_modes(params, m)
        for mode in modes:
            for sigma in (+1, -1):
                for mell in (m, -m):
                    spec = ModeSpec(m_ell=mell, sigma=sigma, radial_index=mode.radial_index)
                    dE = energy_shift(mode, spec, params)
                    ok = dE * sigma * mell > 0
                    rows.append(("signs", f"dE sign m_ell={mell} sigma={sigma} n={mode.radial_index}",
                                 "PASS" if ok else "FAIL", f"dE = {dE:.3e}"))
            fw = rotation_rate_fw(mode, params, op)
            rows.append(("signs", f"rotation m={m} n={mode.radial_index}",
                         "PASS" if fw < 0 else "FAIL", f"dBetaRot_a = {fw:.3e}"))
            try:
                pair = solve_dirac_pair(params, m, mode.radial_index, op)
            except CutoffError:
                continue
            ok = pair.u_plus > pair.u_minus and pair.dBetaRot_a < 0
            rows.append(("signs", f"pair ordering m={m} n={mode.radial_index}",
                         "PASS" if ok else "FAIL",
                         f"u+ = {pair.u_plus:.12g}, u- = {pair.u_minus:.12g}, "
                         f"dBetaRot_a = {pair.dBetaRot_a:.3e}"))
    return rows


def cmd_validate(cfg: dict, outdir: Path) -> int:
    rows = _validate_rows(cfg)
    write_csv(outdir / "validation_report.csv", _header(cfg),
              ["suite", "check", "status", "detail"], rows)
    failures = sum(1 for r in rows if r[2] == "FAIL")
    for suite, check, status, detail in rows:
        if status == "FAIL":
            print(f"FAIL [{suite}] {check}: {detail}", file=sys.stderr)
    print(f"validate: {len(rows)} checks, {failures} failures")
    return 3 if failures else 0


COMMANDS = {
    "modes": cmd_modes,
    "dispersion": cmd_dispersion,
    "rotation": cmd_rotation,
    "density": cmd_density,
    "validate": cmd_validate,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = argparse.ArgumentParser(
        prog="cylspin",
        description="Spin-orbit-split bound modes of a cylindrical step potential")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", default=None, help="flat key=value config file")
    parser.add_argument("--set", dest="overrides", action="append", default=[],
                        metavar="KEY=VALUE", help="override one config key")
    parser.add_argument("--out", default="cylspin_out", help="output directory")
    args = parser.parse_args(argv)

    try:
        cfg = load_config(args.config, args.overrides)
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        _sidecar(outdir, ["cylspin"] + argv)
        return COMMANDS[args.command](cfg, outdir)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except SolverError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
