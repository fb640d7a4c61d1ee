"""
Scenario configuration loader.

Reads the TOML scenario format: a ``[scenario]`` table with the horizon,
``[inputs]`` trajectories, one table per model family holding its parameters,
and ``[policies.<name>]`` intervention stacks. Every value that can change over
time is either a number (held constant) or an inline ramp table. Unknown keys
are rejected so that a misspelt namespace never binds silently.
"""

import hashlib
from pathlib import Path
from typing import Any

import toml
from pydantic import ValidationError

from powershift.exceptions import ConfigParseError, ConfigValidationError
from powershift.models import FAMILIES, parameter_names
from powershift.schemas.policy import BASELINE_POLICY, PolicySpec
from powershift.schemas.scenario import INPUT_NAMES, Ramp, Scenario

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "scenarios" / "reference.toml"

SCENARIO_KEYS = {"horizon", "families"}
TOP_LEVEL_KEYS = {"scenario", "inputs", "policies", *FAMILIES}


def _first_error(exc: ValidationError) -> str:
    error = exc.errors()[0]
    location = ".".join(str(part) for part in error["loc"])
    return f"{location}: {error['msg']}" if location else error["msg"]


def _reject_unknown(keys, allowed, namespace: str | None = None) -> None:
    unknown = sorted(set(keys) - set(allowed))
    if unknown:
        name = f"{namespace}.{unknown[0]}" if namespace else unknown[0]
        raise ConfigValidationError(f"Unknown config key '{name}'", key=name)


def _to_ramp(value: Any, key: str) -> Ramp:
    if isinstance(value, bool):
        raise ConfigValidationError(f"'{key}' must be a number or a ramp table", key=key)
    if isinstance(value, (int, float)):
        return Ramp.constant(float(value))
    if isinstance(value, dict):
        try:
            return Ramp(**value)
        except ValidationError as exc:
            raise ConfigValidationError(f"Invalid ramp '{key}': {_first_error(exc)}", key=key) from exc
    raise ConfigValidationError(f"'{key}' must be a number or a ramp table", key=key)


def _parse_policies(table: dict) -> list[PolicySpec]:
    policies = []
    for name, fields in table.items():
        key = f"policies.{name}"
        if not isinstance(fields, dict):
            raise ConfigValidationError(f"'{key}' must be a table", key=key)
        _reject_unknown(fields, set(PolicySpec.model_fields) - {"name"}, key)
        try:
            policies.append(PolicySpec(name=name, **fields))
        except ValidationError as exc:
            raise ConfigValidationError(f"Invalid policy '{name}': {_first_error(exc)}", key=key) from exc

    if all(policy.name != BASELINE_POLICY for policy in policies):
        policies.insert(0, PolicySpec(name=BASELINE_POLICY))
    return policies


def build_scenario(data: dict) -> Scenario:
    """Validate an already-parsed config mapping into a Scenario."""
    _reject_unknown(data, TOP_LEVEL_KEYS)

    header = data.get("scenario", {})
    _reject_unknown(header, SCENARIO_KEYS, "scenario")
    if "horizon" not in header:
        raise ConfigValidationError("Missing required key 'scenario.horizon' (missing horizon)", key="scenario.horizon")

    inputs_table = data.get("inputs", {})
    _reject_unknown(inputs_table, INPUT_NAMES, "inputs")
    inputs = {name: _to_ramp(value, f"inputs.{name}") for name, value in inputs_table.items()}

    parameters = {}
    for family in FAMILIES:
        if family not in data:
            continue
        table = data[family]
        _reject_unknown(table, parameter_names(family), family)
        parameters[family] = {name: _to_ramp(value, f"{family}.{name}") for name, value in table.items()}

    fields: dict[str, Any] = {
        "horizon": header["horizon"],
        "parameters": parameters,
        "inputs": inputs,
        "policies": _parse_policies(data.get("policies", {})),
    }
    if "families" in header:
        fields["families"] = header["families"]

    try:
        return Scenario(**fields)
    except ValidationError as exc:
        error = exc.errors()[0]
        key = ".".join(str(part) for part in error["loc"]) or None
        raise ConfigValidationError(f"Invalid scenario: {_first_error(exc)}", key=key) from exc


class ScenarioConfig:
    """A scenario file: its raw bytes, their digest, and the validated Scenario."""

    def __init__(self, config_path: str | Path | None = None):
        """
        Load a scenario from TOML.

        Args:
            config_path: Path to the scenario file. If None, uses the shipped
                reference scenario.
        """
        self.path = Path(config_path) if config_path is not None else DEFAULT_CONFIG_PATH
        try:
            self.content = self.path.read_bytes()
        except OSError as exc:
            raise ConfigParseError(f"Cannot read config file {self.path}: {exc.strerror}") from exc

        try:
            self.data = toml.loads(self.content.decode("utf-8"))
        except toml.TomlDecodeError as exc:
            raise ConfigParseError(f"Invalid TOML in {self.path}: {exc.msg}", exc.lineno, exc.colno) from exc
        except UnicodeDecodeError as exc:
            raise ConfigParseError(f"Config file {self.path} is not UTF-8") from exc

        self.scenario = build_scenario(self.data)

    @property
    def sha256(self) -> str:
        return hashlib.sha256(self.content).hexdigest()


def parse_config(path: str | Path | None = None) -> Scenario:
    return ScenarioConfig(path).scenario


def default_scenario() -> Scenario:
    """The shipped reference scenario."""
    return parse_config(DEFAULT_CONFIG_PATH)
