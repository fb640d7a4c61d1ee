from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    threads: int = 0  # 0 lets the executor decide
    log_level: str = "INFO"

    model_config = SettingsConfigDict(
        env_prefix="POWERSHIFT_",
        env_file=".env",
        extra="ignore",  # Ignore extra fields from environment
    )

    def get_worker_count(self) -> int | None:
        """Worker cap for thread pools, or None for the executor default."""
        return self.threads if self.threads > 0 else None


settings = Settings()
