"""Run configuration shared by the CLI and the verification suites."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

import numpy as np

from .grids import Grid
from .trend import TrendPolicy
from .weight_functions import Weight

FORMATS = ("json", "csv")
BATTERIES = ("standard",)


@dataclass(frozen=True)
class RunConfig:
    """Effective run parameters; echoed into every report."""

    t_min: float = 1e-3
    t_max: float = 1e9
    grid_n: int = 4096
    knot_augmented: bool = True
    J: int = 512
    margin: float = 0.05
    L_max: int = 16
    C_max: int = 16
    H_max: float = 1024.0
    fmt: str = "json"
    battery: str = "standard"
    safety: float = 0.5
    cond_n: int = 2048

    def __post_init__(self) -> None:
        if not (0.0 < self.t_min < self.t_max):
            raise ValueError("need 0 < t_min < t_max")
        if self.grid_n < 16 or self.cond_n < 16:
            raise ValueError("grid_n and cond_n need at least 16 points")
        if self.J < 8:
            raise ValueError("J must be at least 8")
        if min(self.L_max, self.C_max, self.H_max) < 1:
            raise ValueError("ladder bounds must be at least 1")
        if not (0.0 < self.margin < 1.0) or not (0.0 < self.safety <= 1.0):
            raise ValueError("margin in (0,1), safety in (0,1]")
        if self.fmt not in FORMATS:
            raise ValueError(f"fmt must be one of {FORMATS}")
        if self.battery not in BATTERIES:
            raise ValueError(f"battery must be one of {BATTERIES}")

    def grid(self, *sources: Weight) -> Grid:
        g = Grid.geometric(self.t_min, self.t_max, self.grid_n)
        if self.knot_augmented:
            for u in sources:
                if u.knots_log is not None:
                    kn = u.knots_log
                    g = g.augment(kn[kn >= np.log(self.t_min)])
        return g

    def policy(self) -> TrendPolicy:
        return TrendPolicy(margin=self.margin, ratio_margin=self.margin / 2.0)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def with_overrides(self, **kw) -> "RunConfig":
        return dataclasses.replace(self, **{k: v for k, v in kw.items() if v is not None})


def from_json(path: str) -> RunConfig:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    allowed = {f.name for f in dataclasses.fields(RunConfig)}
    bad = sorted(set(data) - allowed)
    if bad:
        raise ValueError(f"unknown config keys: {', '.join(bad)}")
    return RunConfig(**data)
