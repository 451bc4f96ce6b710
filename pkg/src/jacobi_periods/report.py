"""Suite configuration, grid sampling and machine-readable reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, PoleProximityError, TruncationError
from .group import point
from .numerics import TruncationPolicy
from .relations import build_catalogue

SCHEMA_VERSION = 1

DEFAULT_TOLERANCES = {
    "MORDELL_1": 1e-8, "MORDELL_2": 1e-8, "MORDELL_3": 1e-8, "MORDELL_4": 1e-8,
    "GENERIC_T": 1e-7, "GENERIC_HECKE3": 1e-7,
    "PR_1": 1e-7, "PR_2": 1e-7, "PR_3": 1e-7, "PR_4": 1e-7, "PR_5": 1e-7, "PR_6": 1e-8,
    "RR_T": 1e-7, "RR_ST": 1e-7,
    "ZW_1": 1e-7, "ZW_2": 1e-7, "ZW_3": 1e-7, "ZW_4": 1e-7,
    "AP_1": 1e-6, "AP_2": 1e-6, "AP_3": 1e-6,
    "PROPMOD_1": 1e-7, "PROPMOD_2": 1e-7,
}


@dataclass
class SuiteConfig:
    relations: list[str]
    v_range: tuple[float, float] = (0.5, 2.0)
    re_tau_range: tuple[float, float] = (-0.45, 0.45)
    z_box: float = 1.0
    count: int = 20
    seed: int = 7
    tolerances: dict = field(default_factory=dict)
    abs_tol: float = 1e-12

    @classmethod
    def from_json(cls, path) -> "SuiteConfig":
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        return cls.from_dict(raw)

    @classmethod
    def from_dict(cls, raw: dict) -> "SuiteConfig":
        if not raw.get("relations"):
            raise ConfigError("config must name at least one relation")
        cat = build_catalogue()
        for tag in raw["relations"]:
            if tag not in cat:
                raise ConfigError(f"unknown relation tag {tag!r}")
        grid = raw.get("grid", {})
        count = int(grid.get("count", 20))
        if count < 1:
            raise ConfigError("grid count must be >= 1")
        return cls(
            relations=list(raw["relations"]),
            v_range=tuple(grid.get("v_range", (0.5, 2.0))),
            re_tau_range=tuple(grid.get("re_tau_range", (-0.45, 0.45))),
            z_box=float(grid.get("z_box", 1.0)),
            count=count,
            seed=int(grid.get("seed", 7)),
            tolerances=dict(raw.get("tolerances", {})),
            abs_tol=float(raw.get("abs_tol", 1e-12)),
        )

    def sample_points(self, arity: int):
        """Deterministic grid: Re tau uniform, v log-uniform, z in the box."""
        rng = np.random.default_rng(self.seed)
        pts = []
        for _ in range(self.count):
            u = rng.uniform(*self.re_tau_range)
            v = float(np.exp(rng.uniform(np.log(self.v_range[0]),
                                         np.log(self.v_range[1]))))
            zs = [complex(rng.uniform(-self.z_box, self.z_box) * 0.5,
                          rng.uniform(-self.z_box, self.z_box) * 0.25)
                  for _ in range(arity)]
            pts.append(point(complex(u, v), *zs))
        return pts

    def tolerance_for(self, tag: str) -> float:
        return float(self.tolerances.get(tag, DEFAULT_TOLERANCES.get(tag, 1e-6)))


def run_suite(config: SuiteConfig) -> dict:
    """Evaluate every configured relation on its grid; per-entry errors are
    recorded, never fatal."""
    cat = build_catalogue()
    pol = TruncationPolicy(abs_tol=config.abs_tol)
    entries = []
    n_pass = n_fail = n_skip = 0
    for tag in config.relations:
        rel = cat[tag]
        tol = config.tolerance_for(tag)
        for p in config.sample_points(rel.arity):
            t0 = time.monotonic()
            entry = {
                "tag": tag,
                "point": {"tau": [p.tau.real, p.tau.imag],
                          "z": [[z.real, z.imag] for z in p.zvec]},
                "tolerance": tol,
                "abs_tol": config.abs_tol,
            }
            try:
                resid = rel.residual(p, pol)
                entry["residual"] = resid
                entry["pass"] = bool(resid < tol)
                if entry["pass"]:
                    n_pass += 1
                else:
                    n_fail += 1
            except PoleProximityError as exc:
                entry["skipped"] = f"pole: {exc}"
                n_skip += 1
            except TruncationError as exc:
                entry["skipped"] = f"truncation: {exc}"
                n_skip += 1
            entry["wall_time"] = time.monotonic() - t0
            entries.append(entry)
    return {
        "schema": SCHEMA_VERSION,
        "seed": config.seed,
        "entries": entries,
        "summary": {"pass": n_pass, "fail": n_fail, "skipped": n_skip},
    }


def report_exit_code(report: dict) -> int:
    return 0 if report["summary"]["fail"] == 0 else 1
