from pydantic import BaseModel, ConfigDict


class EmittedFile(BaseModel):
    model_config = ConfigDict(frozen=True)

    path: str
    sha256: str


class RunManifest(BaseModel):
    """Provenance of one command run, written as ``manifest.json``."""

    model_config = ConfigDict(frozen=True)

    command: str
    config_sha256: str | None
    tool_version: str
    started_at: str
    files: list[EmittedFile]
