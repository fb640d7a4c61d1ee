import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path

from powershift import __version__
from powershift.exceptions import OutputError
from powershift.logging import get_logger
from powershift.schemas.manifest import EmittedFile, RunManifest

logger = get_logger("manifest")

MANIFEST_NAME = "manifest.json"


def sha256_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with Path(path).open("rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z")


def build_manifest(
    command: str,
    out_dir: str | Path,
    files: list[Path],
    config_sha256: str | None = None,
    started_at: str | None = None,
) -> RunManifest:
    """Hash every emitted file; paths are recorded relative to ``out_dir``."""
    out_dir = Path(out_dir)
    entries = sorted(
        (EmittedFile(path=Path(f).relative_to(out_dir).as_posix(), sha256=sha256_file(f)) for f in files),
        key=lambda entry: entry.path,
    )
    return RunManifest(
        command=command,
        config_sha256=config_sha256,
        tool_version=__version__,
        started_at=started_at or utc_timestamp(),
        files=entries,
    )


def write_manifest(manifest: RunManifest, out_dir: str | Path) -> Path:
    path = Path(out_dir) / MANIFEST_NAME
    document = json.dumps(manifest.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False)
    try:
        path.write_text(document + "\n", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OutputError(f"Cannot write {path}: {exc.strerror}") from exc
    logger.info("Wrote %s (%d files)", path, len(manifest.files))
    return path


def prepare_output_dir(out_dir: str | Path) -> Path:
    path = Path(out_dir)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputError(f"Cannot create output directory {path}: {exc.strerror}") from exc
    return path
