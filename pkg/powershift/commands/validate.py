"""``validate``: check every analytic marginal product against finite differences."""

import json

from powershift.exceptions import OutputError, ValidationFailed
from powershift.services.manifest import build_manifest, prepare_output_dir, utc_timestamp, write_manifest
from powershift.services.oracle import validate_families

REPORT_FILE = "validation_report.json"


def register(subparsers) -> None:
    parser = subparsers.add_parser("validate", help="Finite-difference check of the analytic factor prices")
    parser.add_argument("--family", help="Validate one family (default: every differentiable family)")
    parser.add_argument("--points", type=int, default=100, help="Sample points per family (default: 100)")
    parser.add_argument("--tol", type=float, default=1e-5, help="Relative error tolerance (default: 1e-5)")
    parser.add_argument("--seed", type=int, default=42, help="Sampling seed (default: 42)")
    parser.add_argument("--out", help="Also write validation_report.json and manifest.json here")
    parser.set_defaults(handler=validate)


def validate(args) -> int:
    started_at = utc_timestamp()
    families = [args.family] if args.family else None
    reports = validate_families(families, n_points=args.points, tol=args.tol, seed=args.seed)

    for report in reports:
        status = "passed" if report.passed else f"FAILED ({len(report.failures)} mismatches)"
        worst = max(report.max_rel_error.values())
        print(f"{report.family:<14}{status:<28}max rel error {worst:.3e}")

    if args.out:
        out_dir = prepare_output_dir(args.out)
        report_path = out_dir / REPORT_FILE
        document = json.dumps([r.model_dump(mode="json") for r in reports], sort_keys=True, indent=2)
        try:
            report_path.write_text(document + "\n", encoding="utf-8", newline="\n")
        except OSError as exc:
            raise OutputError(f"Cannot write {report_path}: {exc.strerror}") from exc
        write_manifest(build_manifest("validate", out_dir, [report_path], None, started_at), out_dir)

    failed = [report.family for report in reports if not report.passed]
    if failed:
        raise ValidationFailed(f"Finite-difference check failed for {', '.join(failed)}")
    print(f"{len(reports)} families passed")
    return 0
