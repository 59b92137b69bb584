"""Command-line front end: configuration, scenarios and CSV/JSON export.

Every scenario returns a :class:`Table`; writing it is the only side
effect.  Identical configurations give byte-identical files (the
``verify`` report excepted, since it records runtimes).

Exit codes: 0 success, 2 domain error, 3 tolerance error or failed
verification, 4 I/O error, 5 configuration error.
"""
from __future__ import annotations

import argparse
import contextlib
import hashlib
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field, fields
from typing import Any

import numpy as np

from . import acceptance, airy, borel, eikonal, goos
from . import field as fieldmod
from .eikonal import MediumConfig
from .errors import DomainError, EvanescentError, ResolutionError, ToleranceError
from .profiles import parse_profile

SCENARIOS = ("field-map", "airy-sectors", "stokes-demo", "goos-scan", "classify-map", "verify")
EXIT_OK, EXIT_DOMAIN, EXIT_TOLERANCE, EXIT_IO, EXIT_CONFIG = 0, 2, 3, 4, 5
TOLERANCES = ("grazing", "stability", "crit")


class ConfigError(EvanescentError):
    """Unreadable or inconsistent run configuration."""


@dataclass
class GridSpec:
    x0: float = -5.0
    x1: float = 5.0
    nx: int = 101
    y0: float = -2.0
    y1: float = 2.0
    ny: int = 80

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        try:
            xs, ys = text.split(",")
            x0, x1, nx = xs.split(":")
            y0, y1, ny = ys.split(":")
            g = cls(float(x0), float(x1), int(nx), float(y0), float(y1), int(ny))
        except ValueError as exc:
            raise ConfigError(f"grid must look like x0:x1:nx,y0:y1:ny, got '{text}'") from exc
        if g.nx < 2 or g.ny < 2:
            raise ConfigError("grid counts must be at least 2")
        return g

    def text(self) -> str:
        return f"{self.x0:g}:{self.x1:g}:{self.nx},{self.y0:g}:{self.y1:g}:{self.ny}"

    def axes(self, scale: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
        return (np.linspace(self.x0, self.x1, self.nx) * scale,
                np.linspace(self.y0, self.y1, self.ny) * scale)


@dataclass
class RunConfig:
    scenario: str = "field-map"
    n: float = 1.5
    theta_i: float = math.pi / 3
    k: float = 100.0
    grid: GridSpec = field(default_factory=GridSpec)
    profile: str = "const"
    out: str | None = None
    format: str = "csv"
    units: str = "lambda"
    tol: dict = field(default_factory=dict)
    radius: float = 8.0
    samples: int = 0
    order: int = 6
    helmholtz: bool = False

    def medium(self) -> MediumConfig:
        return MediumConfig(self.n, self.theta_i, self.k)

    def canonical(self) -> dict:
        d = asdict(self)
        d["grid"] = self.grid.text()
        d.pop("out")
        return d

    def digest(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


@dataclass
class Table:
    columns: list
    rows: list
    metadata: dict = field(default_factory=dict)


# --------------------------------------------------------------------------
# configuration

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="evanescent", description="Evanescent waves at total internal reflection.")
    p.add_argument("--config", help="JSON file with any of the options below; flags override it")
    p.add_argument("--scenario", choices=SCENARIOS)
    p.add_argument("--n", type=float, help="refractive index of the denser medium (> 1)")
    th = p.add_mutually_exclusive_group()
    th.add_argument("--theta-i", type=float, dest="theta_i", help="incidence angle in radians")
    th.add_argument("--theta-i-deg", type=float, dest="theta_i_deg", help="incidence angle in degrees")
    p.add_argument("--k", type=float, help="free-space wavenumber")
    p.add_argument("--grid", help="x0:x1:nx,y0:y1:ny (write --grid=-5:5:101,... when x0 is negative)")
    p.add_argument("--profile", help="const[:c] | gaussian:x0,sigma | raised-cosine:x0,width[,strip]")
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--units", choices=("lambda", "raw"))
    p.add_argument("--tol", action="append", metavar="NAME=VALUE",
                   help=f"tolerance override, NAME in {{{', '.join(TOLERANCES)}}}")
    p.add_argument("--radius", type=float, help="|z| for airy-sectors and stokes-demo")
    p.add_argument("--samples", type=int, help="sample count of one-dimensional sweeps")
    p.add_argument("--order", type=int, help="truncation order of the asymptotic series")
    p.add_argument("--helmholtz", action="store_true", default=None,
                   help="field-map: also report the Helmholtz residual (needs spacing <= lambda/10)")
    return p


def _parse_tol(items) -> dict:
    out = {}
    for item in items:
        name, sep, value = str(item).partition("=")
        if not sep:
            raise ConfigError(f"--tol expects NAME=VALUE, got '{item}'")
        out[name.strip()] = value
    return out


def resolve_config(argv=None) -> RunConfig:
    """Defaults, then the JSON file, then explicit flags."""
    args = build_parser().parse_args(argv)
    merged: dict[str, Any] = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
        merged.update({k.replace("-", "_"): v for k, v in data.items()})
    for key, value in vars(args).items():
        if key != "config" and value is not None:
            if key in ("theta_i", "theta_i_deg"):
                merged.pop("theta_i", None)
                merged.pop("theta_i_deg", None)
            merged[key] = value

    known = {f.name for f in fields(RunConfig)} | {"theta_i_deg"}
    unknown = set(merged) - known
    if unknown:
        raise ConfigError(f"unknown configuration keys: {', '.join(sorted(unknown))}")
    if "theta_i" in merged and "theta_i_deg" in merged:
        raise ConfigError("give theta_i or theta_i_deg, not both")
    if "theta_i_deg" in merged:
        merged["theta_i"] = math.radians(float(merged.pop("theta_i_deg")))
    if "grid" in merged:
        g = merged["grid"]
        merged["grid"] = GridSpec.parse(g) if isinstance(g, str) else GridSpec(**g)
    if "tol" in merged:
        t = merged["tol"]
        tol = _parse_tol(t) if isinstance(t, list) else dict(t)
        bad = set(tol) - set(TOLERANCES)
        if bad:
            raise ConfigError(f"unknown tolerance names: {', '.join(sorted(bad))}")
        try:
            merged["tol"] = {k: float(v) for k, v in sorted(tol.items())}
        except ValueError as exc:
            raise ConfigError(f"tolerance values must be numbers: {exc}") from exc
    try:
        cfg = RunConfig(**merged)
        cfg.n, cfg.theta_i, cfg.k = float(cfg.n), float(cfg.theta_i), float(cfg.k)
        cfg.radius, cfg.samples, cfg.order = float(cfg.radius), int(cfg.samples), int(cfg.order)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    if cfg.scenario not in SCENARIOS:
        raise ConfigError(f"unknown scenario '{cfg.scenario}'")
    if cfg.format not in ("csv", "json") or cfg.units not in ("lambda", "raw"):
        raise ConfigError("format must be csv|json and units lambda|raw")
    return cfg


# --------------------------------------------------------------------------
# scenarios

def _length_scale(cfg: RunConfig, medium: MediumConfig) -> float:
    return medium.wavelength if cfg.units == "lambda" else 1.0


@contextlib.contextmanager
def _tolerances(cfg: RunConfig):
    """Apply ``--tol`` overrides for the duration of one run."""
    saved = (eikonal._CRIT_TOL, borel.STABILITY_TOL)
    try:
        if "crit" in cfg.tol:
            eikonal._CRIT_TOL = cfg.tol["crit"]
        if "stability" in cfg.tol:
            borel.STABILITY_TOL = cfg.tol["stability"]
        yield
    finally:
        eikonal._CRIT_TOL, borel.STABILITY_TOL = saved


def scenario_field_map(cfg: RunConfig) -> Table:
    med = cfg.medium()
    scale = _length_scale(cfg, med)
    f1 = parse_profile(cfg.profile)
    x, y = cfg.grid.axes(scale)
    grid = fieldmod.sample_field(med, f1, x, y, grazing_tol=cfg.tol.get("grazing", fieldmod.GRAZING_TOL))
    rows = []
    for j, yy in enumerate(grid.y):
        for i, xx in enumerate(grid.x):
            p = grid.psi[j, i]
            rows.append([xx / scale, yy / scale, grid.region[j, i], p.real, p.imag, abs(p)])
    meta = dict(grid.metadata)
    if cfg.helmholtz:
        dx, dy = grid.spacing
        if max(dx, dy) > med.wavelength / 10:
            raise ResolutionError(f"Helmholtz check needs spacing <= lambda/10; grid has "
                                  f"{max(dx, dy) / med.wavelength:.3g} lambda")
        up = grid.y[grid.y > 0]
        if up.size >= 3:
            meta["helmholtz_residual_illuminated"] = fieldmod.helmholtz_residual(med, f1, grid.x, up)
        down = grid.y[grid.y < 0]
        if down.size >= 3 and med.supercritical:
            meta["helmholtz_residual_shadow"] = fieldmod.helmholtz_residual(med, f1, grid.x, down,
                                                                            form="shadow")
    return Table(["x", "y", "region", "psi_re", "psi_im", "psi_abs"], rows, meta)


def _phases(count: int) -> np.ndarray:
    return np.arange(count) * (2.0 * math.pi / count)


def _sector_label(ph: float) -> str:
    try:
        rep = airy.sector_of(ph)
    except DomainError:
        return "stokes-ray"
    lo, hi = rep.sector
    return f"{lo:.6f}:{hi:.6f}"


def scenario_airy_sectors(cfg: RunConfig) -> Table:
    count = cfg.samples or 360
    rows = []
    for ph in _phases(count):
        z = cfg.radius * complex(math.cos(ph), math.sin(ph))
        ex = airy.ai_exact(z)
        label = _sector_label(ph)
        if label == "stokes-ray":
            asym = complex(math.nan, math.nan)
        else:
            asym = airy.ai_asymptotic(z, cfg.order)
        err = abs(asym - ex) / abs(ex)
        rows.append([ph, label, ex.real, ex.imag, asym.real, asym.imag, err])
    return Table(["phase", "sector", "ai_exact_re", "ai_exact_im", "ai_asymptotic_re", "ai_asymptotic_im",
                  "rel_err"], rows, {"radius": cfg.radius, "order": cfg.order})


def scenario_stokes_demo(cfg: RunConfig) -> Table:
    """Switched against unswitched asymptotics around the circle, plus the Borel jump on the Stokes ray."""
    count = cfg.samples or 180
    rows = []
    for ph in _phases(count):
        z = cfg.radius * complex(math.cos(ph), math.sin(ph))
        ex = airy.ai_exact(z)
        label = _sector_label(ph)
        sw = complex(math.nan, math.nan) if label == "stokes-ray" else airy.ai_asymptotic(z, cfg.order)
        un = airy.ai_unswitched(z, cfg.order, ph)
        rows.append([ph, label, ex.real, ex.imag, sw.real, sw.imag, un.real, un.imag,
                     abs(sw - ex) / abs(ex), abs(un - ex) / abs(ex)])
    model = borel.LateTermModel.from_singulant(-(4.0 / 3.0) * cfg.radius**1.5)
    below, above = borel.lateral_tails(model, 2 * model.s_max + 4)
    pred = borel.stokes_discontinuity(model)
    meta = {
        "radius": cfg.radius, "order": cfg.order,
        "stokes_ray_phase": 2.0 * math.pi / 3.0,
        "borel_jump_measured": [(above - below).real, (above - below).imag],
        "borel_jump_predicted": [pred.real, pred.imag],
        "lambda0_monodromy_jump": [0.0, borel.monodromy_jump(0, 1.0, 1).imag],
    }
    return Table(["phase", "sector", "ai_exact_re", "ai_exact_im", "switched_re", "switched_im",
                  "unswitched_re", "unswitched_im", "switched_rel_err", "unswitched_rel_err"], rows, meta)


def scenario_goos_scan(cfg: RunConfig) -> Table:
    base = cfg.medium()
    scale = _length_scale(cfg, base)
    count = cfg.samples or 50
    tc = base.theta_crit
    rows = []
    for th in np.linspace(tc + 0.01, math.pi / 2 - 0.01, count):
        r = goos.shift(base.replace(theta_i=float(th)))
        rows.append([float(th), fieldmod.reflection_phase(base.replace(theta_i=float(th))),
                     r.d_delta, r.X_bar / scale, r.D / scale])
    return Table(["theta_i", "delta", "dDelta_dTheta", "X_bar", "D"], rows,
                 {"n": base.n, "k": base.k, "theta_crit": tc, "length_unit": cfg.units})


def scenario_classify_map(cfg: RunConfig) -> Table:
    med = cfg.medium()
    scale = _length_scale(cfg, med)
    x, y = cfg.grid.axes(scale)
    rows = []
    for yy in y:
        v = float(eikonal.v_field(med, float(yy)))
        for xx in x:
            J = eikonal.gradient_closed_form(med, float(xx), float(yy) if yy != 0 else 1e-12).J
            kind = eikonal.classify_point(med, float(xx), float(yy)).value
            rows.append([xx / scale, yy / scale, v, J, eikonal.discriminant(v, J), kind])
    return Table(["x", "y", "v", "jacobian", "discriminant", "type"], rows,
                 {"n": med.n, "theta_i": med.theta_i})


def scenario_verify(cfg: RunConfig) -> Table:
    results = acceptance.run_all(verbose=False)
    rows = [[r.number, r.name, "pass" if r.passed else "fail", r.seconds, r.detail] for r in results]
    meta = {"passed": sum(r.passed for r in results), "total": len(results)}
    return Table(["criterion", "name", "status", "seconds", "detail"], rows, meta)


RUNNERS = {
    "field-map": scenario_field_map,
    "airy-sectors": scenario_airy_sectors,
    "stokes-demo": scenario_stokes_demo,
    "goos-scan": scenario_goos_scan,
    "classify-map": scenario_classify_map,
    "verify": scenario_verify,
}


# --------------------------------------------------------------------------
# output

def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.17g" % v
    s = str(v)
    if any(c in s for c in ',"\n'):
        s = '"' + s.replace('"', '""') + '"'
    return s


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else None
    if isinstance(v, complex):
        return [_jsonable(v.real), _jsonable(v.imag)]
    return str(v)


def render(table: Table, cfg: RunConfig) -> str:
    meta = {"scenario": cfg.scenario, "config_sha256": cfg.digest(), "config": cfg.canonical(),
            **table.metadata}
    if cfg.format == "json":
        doc = {"metadata": _jsonable(meta), "columns": table.columns,
               "rows": [_jsonable(r) for r in table.rows]}
        return json.dumps(doc, sort_keys=False, indent=1) + "\n"
    buf = io.StringIO()
    for key, val in meta.items():
        buf.write(f"# {key}: {json.dumps(_jsonable(val), sort_keys=True)}\n")
    buf.write(",".join(table.columns) + "\n")
    for r in table.rows:
        buf.write(",".join(_cell(v) for v in r) + "\n")
    return buf.getvalue()


def write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def run(cfg: RunConfig) -> int:
    with _tolerances(cfg):
        table = RUNNERS[cfg.scenario](cfg)
    write_output(render(table, cfg), cfg.out)
    if cfg.scenario == "verify" and table.metadata["passed"] < table.metadata["total"]:
        return EXIT_TOLERANCE
    return EXIT_OK


def main(argv=None) -> int:
    try:
        cfg = resolve_config(argv)
        return run(cfg)
    except ConfigError as exc:
        print(f"evanescent: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ToleranceError as exc:
        print(f"evanescent: tolerance error [{type(exc).__module__}.{type(exc).__name__}]: {exc}",
              file=sys.stderr)
        return EXIT_TOLERANCE
    except DomainError as exc:
        print(f"evanescent: domain error [{type(exc).__module__}.{type(exc).__name__}]: {exc}",
              file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"evanescent: io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
