"""JSON run-configuration parsing and validation.

A run file is a single JSON object with a required ``walk`` section and
optional ``lattice``, ``ensemble``, ``sweep`` and ``reverse`` sections.
Every violation is reported with the offending key path; JSON syntax
errors keep their line/column anchors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional

from .coin import CoinParams
from .errors import ConfigError
from .operators import KickParams
from .protocols import COMPOSED, DIRECT, EnsembleSpec, WalkConfig
from .states import MomentumLattice

SWEEP_PARAMETERS = ("noise_eps", "kick", "coin_alpha")


@dataclass(frozen=True)
class SweepSpec:
    parameter: str
    values: tuple


@dataclass(frozen=True)
class ReverseSpec:
    j_forward: int
    method: str = COMPOSED


@dataclass(frozen=True)
class RunSpec:
    walk: WalkConfig
    lattice: Optional[MomentumLattice] = None
    ensemble: Optional[EnsembleSpec] = None
    sweep: Optional[SweepSpec] = None
    reverse: Optional[ReverseSpec] = None


def _expect_mapping(value, path):
    if not isinstance(value, dict):
        raise ConfigError(f"{path}: expected an object, got {type(value).__name__}")
    return value


def _check_keys(mapping, allowed, path):
    unknown = set(mapping) - set(allowed)
    if unknown:
        raise ConfigError(
            f"{path}: unknown key(s) {sorted(unknown)}; allowed: {sorted(allowed)}"
        )


def _number(mapping, key, path, default=None, lo=None, hi=None,
            lo_strict=False):
    if key not in mapping:
        if default is None:
            raise ConfigError(f"{path}.{key}: required")
        return default
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}.{key}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"{path}.{key}: must be finite, got {value!r}")
    if lo is not None and (value <= lo if lo_strict else value < lo):
        bound = f"> {lo}" if lo_strict else f">= {lo}"
        raise ConfigError(f"{path}.{key}: must be {bound}, got {value!r}")
    if hi is not None and value > hi:
        bounds = f"lie in [{lo}, {hi}]" if lo is not None else f"be <= {hi}"
        raise ConfigError(f"{path}.{key}: must {bounds}, got {value!r}")
    return value


def _integer(mapping, key, path, default=None, lo=None, hi=None):
    if key not in mapping:
        if default is None:
            raise ConfigError(f"{path}.{key}: required")
        return default
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}.{key}: expected an integer, got {value!r}")
    if lo is not None and value < lo:
        raise ConfigError(f"{path}.{key}: must be >= {lo}, got {value}")
    if hi is not None and value > hi:
        raise ConfigError(f"{path}.{key}: must be <= {hi}, got {value}")
    return value


def _choice(mapping, key, path, choices, default=None):
    if key not in mapping:
        if default is None:
            raise ConfigError(f"{path}.{key}: required")
        return default
    value = mapping[key]
    if value not in choices:
        raise ConfigError(f"{path}.{key}: must be one of {list(choices)}, got {value!r}")
    return value


def _parse_coin(data, path, default: CoinParams) -> CoinParams:
    if data is None:
        return default
    data = _expect_mapping(data, path)
    _check_keys(data, ("alpha", "chi"), path)
    return CoinParams(
        alpha=_number(data, "alpha", path, default.alpha),
        chi=_number(data, "chi", path, default.chi),
    )


def _parse_kick(data, path, default: KickParams) -> KickParams:
    if data is None:
        return default
    data = _expect_mapping(data, path)
    _check_keys(data, ("k1", "k2", "tau"), path)
    return KickParams(
        k1=_number(data, "k1", path, default.k1),
        k2=_number(data, "k2", path, default.k2),
        tau=_number(data, "tau", path, default.tau, lo=0.0, lo_strict=True),
    )


def _parse_walk(data) -> WalkConfig:
    path = "walk"
    data = _expect_mapping(data, path)
    _check_keys(data, ("steps", "shift_mode", "q", "kick", "first_coin",
                       "step_coin", "noise_eps", "phi", "seed"), path)
    defaults = WalkConfig(steps=0)
    return WalkConfig(
        steps=_integer(data, "steps", path, lo=0),
        shift_mode=_choice(data, "shift_mode", path, ("ideal", "ratchet"),
                           defaults.shift_mode),
        q=_integer(data, "q", path, defaults.q, lo=1),
        kick=_parse_kick(data.get("kick"), "walk.kick", defaults.kick),
        first_coin=_parse_coin(data.get("first_coin"), "walk.first_coin",
                               defaults.first_coin),
        step_coin=_parse_coin(data.get("step_coin"), "walk.step_coin",
                              defaults.step_coin),
        noise_eps=_number(data, "noise_eps", path, defaults.noise_eps,
                          lo=0.0, hi=1.0),
        phi=_number(data, "phi", path, defaults.phi),
        seed=_integer(data, "seed", path, defaults.seed, lo=0, hi=2 ** 64 - 1),
    )


def _parse_lattice(data) -> Optional[MomentumLattice]:
    if data is None:
        return None
    path = "lattice"
    data = _expect_mapping(data, path)
    _check_keys(data, ("n_min", "n_max"), path)
    n_min = _integer(data, "n_min", path)
    n_max = _integer(data, "n_max", path)
    try:
        return MomentumLattice(n_min, n_max)
    except ValueError as err:
        raise ConfigError(f"lattice: {err}") from err


def _parse_ensemble(data) -> Optional[EnsembleSpec]:
    if data is None:
        return None
    path = "ensemble"
    data = _expect_mapping(data, path)
    _check_keys(data, ("n_samples", "sigma_beta", "thermal_fraction",
                       "thermal_sigma"), path)
    defaults = EnsembleSpec()
    return EnsembleSpec(
        n_samples=_integer(data, "n_samples", path, defaults.n_samples, lo=1),
        sigma_beta=_number(data, "sigma_beta", path, defaults.sigma_beta, lo=0.0),
        thermal_fraction=_number(data, "thermal_fraction", path,
                                 defaults.thermal_fraction, lo=0.0, hi=1.0),
        thermal_sigma=_number(data, "thermal_sigma", path,
                              defaults.thermal_sigma, lo=0.0, lo_strict=True),
    )


def _parse_sweep(data) -> Optional[SweepSpec]:
    if data is None:
        return None
    path = "sweep"
    data = _expect_mapping(data, path)
    _check_keys(data, ("parameter", "values"), path)
    parameter = _choice(data, "parameter", path, SWEEP_PARAMETERS)
    raw = data.get("values")
    if not isinstance(raw, list) or not raw:
        raise ConfigError(f"{path}.values: expected a non-empty list")
    values = []
    for i, entry in enumerate(raw):
        entry_path = f"{path}.values[{i}]"
        if parameter == "kick":
            if (not isinstance(entry, list) or len(entry) != 2
                    or any(isinstance(v, bool) or not isinstance(v, (int, float))
                           for v in entry)):
                raise ConfigError(f"{entry_path}: expected a [k1, k2] pair")
            values.append((float(entry[0]), float(entry[1])))
            continue
        if isinstance(entry, bool) or not isinstance(entry, (int, float)):
            raise ConfigError(f"{entry_path}: expected a number, got {entry!r}")
        value = float(entry)
        if parameter == "noise_eps" and not 0.0 <= value <= 1.0:
            raise ConfigError(f"{entry_path}: noise_eps must lie in [0, 1], got {value}")
        values.append(value)
    return SweepSpec(parameter=parameter, values=tuple(values))


def _parse_reverse(data) -> Optional[ReverseSpec]:
    if data is None:
        return None
    path = "reverse"
    data = _expect_mapping(data, path)
    _check_keys(data, ("j_forward", "method"), path)
    return ReverseSpec(
        j_forward=_integer(data, "j_forward", path, lo=1),
        method=_choice(data, "method", path, (COMPOSED, DIRECT), COMPOSED),
    )


def parse_run_spec(data: Any) -> RunSpec:
    data = _expect_mapping(data, "config")
    _check_keys(data, ("walk", "lattice", "ensemble", "sweep", "reverse"),
                "config")
    if "walk" not in data:
        raise ConfigError("config.walk: required")
    try:
        return RunSpec(
            walk=_parse_walk(data["walk"]),
            lattice=_parse_lattice(data.get("lattice")),
            ensemble=_parse_ensemble(data.get("ensemble")),
            sweep=_parse_sweep(data.get("sweep")),
            reverse=_parse_reverse(data.get("reverse")),
        )
    except ConfigError:
        raise
    except ValueError as err:
        raise ConfigError(str(err)) from err


def load_run_spec(path) -> RunSpec:
    """Parse and validate a JSON run file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as err:
        raise ConfigError(f"cannot read config file {path}: {err}") from err
    except json.JSONDecodeError as err:
        raise ConfigError(
            f"{path}: invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}"
        ) from err
    return parse_run_spec(data)


def run_spec_to_jsonable(spec: RunSpec) -> dict:
    """Canonical dict echo of a parsed configuration (for manifests)."""
    walk = spec.walk
    out: dict[str, Any] = {
        "walk": {
            "steps": walk.steps,
            "shift_mode": walk.shift_mode,
            "q": walk.q,
            "kick": {"k1": walk.kick.k1, "k2": walk.kick.k2, "tau": walk.kick.tau},
            "first_coin": {"alpha": walk.first_coin.alpha, "chi": walk.first_coin.chi},
            "step_coin": {"alpha": walk.step_coin.alpha, "chi": walk.step_coin.chi},
            "noise_eps": walk.noise_eps,
            "phi": walk.phi,
            "seed": walk.seed,
        }
    }
    if spec.lattice is not None:
        out["lattice"] = {"n_min": spec.lattice.n_min, "n_max": spec.lattice.n_max}
    if spec.ensemble is not None:
        ens = spec.ensemble
        out["ensemble"] = {
            "n_samples": ens.n_samples,
            "sigma_beta": ens.sigma_beta,
            "thermal_fraction": ens.thermal_fraction,
            "thermal_sigma": ens.thermal_sigma,
        }
    if spec.sweep is not None:
        out["sweep"] = {
            "parameter": spec.sweep.parameter,
            "values": [list(v) if isinstance(v, tuple) else v
                       for v in spec.sweep.values],
        }
    if spec.reverse is not None:
        out["reverse"] = {"j_forward": spec.reverse.j_forward,
                          "method": spec.reverse.method}
    return out
