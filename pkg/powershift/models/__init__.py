from typing import Annotated, Union

from pydantic import Field, TypeAdapter, ValidationError

from powershift.exceptions import ConfigValidationError, ParamError
from powershift.models.base import ProductionModel
from powershift.models.ces import CES, evaluate_ces
from powershift.models.cobb_douglas import CobbDouglas, evaluate_cobb_douglas
from powershift.models.hybrid import Hybrid, evaluate_hybrid
from powershift.models.leontief import Leontief, evaluate_leontief
from powershift.models.linear import Linear, evaluate_linear
from powershift.models.power import Power, evaluate_power
from powershift.models.quadratic import Quadratic, evaluate_quadratic
from powershift.models.spillover import Spillover, evaluate_spillover
from powershift.models.translog import Translog, evaluate_translog
from powershift.models.von_thunen import VonThunen, evaluate_von_thunen

ModelSpec = Annotated[
    Union[CobbDouglas, Leontief, CES, Linear, Quadratic, Translog, VonThunen, Spillover, Power, Hybrid],
    Field(discriminator="family"),
]

# Canonical family order; also the order of config namespaces and plot legends
FAMILY_MODELS: dict[str, type[ProductionModel]] = {
    "cobb_douglas": CobbDouglas,
    "leontief": Leontief,
    "ces": CES,
    "linear": Linear,
    "quadratic": Quadratic,
    "translog": Translog,
    "vonthunen": VonThunen,
    "spillover": Spillover,
    "power": Power,
    "hybrid": Hybrid,
}

FAMILIES = tuple(FAMILY_MODELS)

_model_spec_adapter = TypeAdapter(ModelSpec)


def get_model_class(family: str) -> type[ProductionModel]:
    """Look up a family by its config namespace."""
    try:
        return FAMILY_MODELS[family]
    except KeyError:
        raise ConfigValidationError(
            f"Unknown model family '{family}'. Known families: {', '.join(FAMILIES)}",
            key=family,
        ) from None


def parameter_names(family: str) -> list[str]:
    """Parameter keys accepted in the family's config namespace."""
    return [name for name in get_model_class(family).model_fields if name != "family"]


def build_model(family: str, **params) -> ProductionModel:
    """Build a family through the tagged union, reporting bad parameters as ParamError."""
    model_class = get_model_class(family)
    try:
        return _model_spec_adapter.validate_python({**params, "family": family})
    except ValidationError as exc:
        raise ParamError(f"Invalid {model_class.label} parameters: {exc}") from exc


__all__ = [
    "ModelSpec",
    "ProductionModel",
    "FAMILY_MODELS",
    "FAMILIES",
    "get_model_class",
    "parameter_names",
    "build_model",
    "CobbDouglas",
    "Leontief",
    "CES",
    "Linear",
    "Quadratic",
    "Translog",
    "VonThunen",
    "Spillover",
    "Power",
    "Hybrid",
    "evaluate_cobb_douglas",
    "evaluate_leontief",
    "evaluate_ces",
    "evaluate_linear",
    "evaluate_quadratic",
    "evaluate_translog",
    "evaluate_von_thunen",
    "evaluate_spillover",
    "evaluate_power",
    "evaluate_hybrid",
]
