"""Run configuration: flags > BNM_* environment > JSON config file > defaults."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Mapping

from .core import ValidationError
from .criteria import DEFAULT_INTERPRETATION, INTERPRETATIONS
from .permgroup import DEFAULT_BOCHERT_DEPTH, DEFAULT_BSGS_DEGREE_BOUND, DEFAULT_PAIR_ORBIT_BOUND
from .tableaux import DEFAULT_ENUMERATION_BOUND

ENV_PREFIX = "BNM_"


@dataclass(frozen=True)
class Config:
    enumeration_bound: int = DEFAULT_ENUMERATION_BOUND
    degree_bound: int = DEFAULT_BSGS_DEGREE_BOUND
    bochert_depth: int = DEFAULT_BOCHERT_DEPTH
    pair_orbit_bound: int = DEFAULT_PAIR_ORBIT_BOUND
    interpretation: str = DEFAULT_INTERPRETATION
    jobs: int = 0  # 0: available parallelism

    def __post_init__(self):
        for f in fields(self):
            if f.type == "int" or f.type is int:
                value = getattr(self, f.name)
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    raise ValidationError(f"config {f.name} must be a nonnegative integer, got {value!r}")
        if self.interpretation not in INTERPRETATIONS:
            raise ValidationError(
                f"config interpretation must be one of {INTERPRETATIONS}, got {self.interpretation!r}"
            )

    @property
    def workers(self) -> int:
        if self.jobs:
            return self.jobs
        if hasattr(os, "sched_getaffinity"):
            return len(os.sched_getaffinity(0))
        return os.cpu_count() or 1

    def to_record(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _coerce(name: str, value: Any) -> Any:
    kind = {f.name: f.type for f in fields(Config)}[name]
    if kind in ("int", int):
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ValidationError(f"config {name} must be an integer, got {value!r}") from None
    return str(value)


def _from_mapping(source: Mapping[str, Any], label: str) -> dict:
    known = {f.name for f in fields(Config)}
    out = {}
    for key, value in source.items():
        if key not in known:
            raise ValidationError(f"{label}: unknown config key {key!r}")
        out[key] = _coerce(key, value)
    return out


def load_config(
    flags: Mapping[str, Any] | None = None,
    env: Mapping[str, str] | None = None,
    config_file: str | Path | None = None,
) -> Config:
    """Merge the layers; ``None`` flag values count as unset."""
    merged: dict[str, Any] = {}
    if config_file is not None:
        try:
            data = json.loads(Path(config_file).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ValidationError(f"cannot read config file {config_file}: {exc}") from None
        if not isinstance(data, dict):
            raise ValidationError(f"config file {config_file} must hold a JSON object")
        merged.update(_from_mapping(data, str(config_file)))
    env = os.environ if env is None else env
    known = {f.name for f in fields(Config)}
    env_values = {
        k[len(ENV_PREFIX):].lower(): v
        for k, v in env.items()
        if k.startswith(ENV_PREFIX) and k[len(ENV_PREFIX):].lower() in known
    }
    merged.update(_from_mapping(env_values, "environment"))
    if flags:
        merged.update(_from_mapping({k: v for k, v in flags.items() if v is not None}, "flags"))
    return replace(Config(), **merged)
