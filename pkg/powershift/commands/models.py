"""``models``: the ten families, their config keys with defaults, and their replacement conditions."""

import json

from powershift.models import FAMILY_MODELS, parameter_names
from powershift.models.substitution import assess_replacement, get_replacement_condition


def register(subparsers) -> None:
    parser = subparsers.add_parser("models", help="List model families and their parameters")
    parser.add_argument("--json", action="store_true", help="Print the listing as JSON")
    parser.set_defaults(handler=list_models)


def describe_family(family: str) -> dict:
    model_class = FAMILY_MODELS[family]
    defaults = model_class()
    condition = get_replacement_condition(family)
    assessment = assess_replacement(defaults)
    return {
        "family": family,
        "label": model_class.label,
        "smooth": model_class.smooth,
        "parameters": {name: getattr(defaults, name) for name in parameter_names(family)},
        "replacement": condition.replacement,
        "preventative": condition.preventative,
        "verdict": condition.verdict.value,
        "replacement_holds_at_defaults": assessment.replacement_holds,
        "preventative_holds_at_defaults": assessment.preventative_holds,
    }


def list_models(args) -> int:
    families = [describe_family(family) for family in FAMILY_MODELS]
    if args.json:
        print(json.dumps(families, indent=2, sort_keys=True))
        return 0

    for entry in families:
        smooth = "" if entry["smooth"] else " (non-differentiable)"
        print(f"{entry['family']}: {entry['label']}{smooth}")
        params = ", ".join(f"{name}={value:g}" for name, value in entry["parameters"].items())
        print(f"  parameters: {params}")
        print(f"  replaces humans: {entry['replacement']}")
        print(f"  prevented by: {entry['preventative']}")
    print(f"{len(families)} families")
    return 0
