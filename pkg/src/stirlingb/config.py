"""Configuration management for stirlingb."""

import json
import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from stirlingb.core.errors import DomainError
from stirlingb.core.guards import SizeGuards

CONFIG_NAMES = ["stirlingb.json", ".stirlingb.json"]
MAX_OBJECTS_ENV = "STIRLINGB_MAX_OBJECTS"


class GuardConfig(BaseModel):
    """Enumeration size limits."""

    max_perm_n: int = Field(default=12, description="Largest n for enumerating B_n")
    max_partition_n: int = Field(default=10, description="Largest n for type-B set partitions")
    max_plain_n: int = Field(default=10, description="Largest n for enumerating S_n")
    max_word_n: int = Field(default=10, description="Largest n for second-kind RG-words")
    max_objects: Optional[int] = Field(
        default=None, description="Object-count budget replacing every n-limit when set"
    )

    @field_validator("max_perm_n", "max_partition_n", "max_plain_n", "max_word_n", "max_objects")
    @classmethod
    def validate_non_negative(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 0:
            raise ValueError("Guard limits must be non-negative")
        return v


class VerifyConfig(BaseModel):
    """Identity sweep defaults."""

    jobs: int = Field(default=1, description="Worker processes for enumeration sweeps")
    default_max_n: int = Field(default=5, description="Sweep bound on n when --max-n is omitted")
    default_max_m: int = Field(default=4, description="Sweep bound on m when --max-m is omitted")

    @field_validator("jobs")
    @classmethod
    def validate_jobs(cls, v: int) -> int:
        if v < 1:
            raise ValueError("jobs must be at least 1")
        return v

    @field_validator("default_max_n", "default_max_m")
    @classmethod
    def validate_bounds(cls, v: int) -> int:
        if v < 0:
            raise ValueError("Sweep bounds must be non-negative")
        return v


class OutputConfig(BaseModel):
    """Rendering of tables and reports."""

    format: str = Field(default="json", description="Table format (json, csv)")
    report_dir: str = Field(default="./reports", description="Directory for HTML reports")
    report_filename: str = Field(default="verify_report.html", description="HTML report filename")
    title: str = Field(default="q-Stirling identity verification", description="Report title")

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        allowed = {"json", "csv"}
        if v.lower() not in allowed:
            raise ValueError(f"Format must be one of: {allowed}")
        return v.lower()


class StirlingConfig(BaseModel):
    """Main configuration for stirlingb."""

    guards: GuardConfig = Field(default_factory=GuardConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @classmethod
    def from_file(cls, path: Path | str) -> "StirlingConfig":
        """Load configuration from a JSON file."""
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {path}")

        with open(path, "r") as f:
            data = json.load(f)

        return cls.model_validate(data)

    @classmethod
    def find_and_load(cls, start_dir: Path | str | None = None) -> "StirlingConfig":
        """Find and load a configuration file, searching up the directory tree.

        Falls back to the defaults when no file is found.
        """
        if start_dir is None:
            start_dir = Path.cwd()
        else:
            start_dir = Path(start_dir)

        current = start_dir.resolve()
        while True:
            for name in CONFIG_NAMES:
                config_path = current / name
                if config_path.exists():
                    return cls.from_file(config_path)
            if current == current.parent:
                break
            current = current.parent

        return cls()

    def to_file(self, path: Path | str) -> None:
        """Save configuration to a JSON file."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w") as f:
            json.dump(self.model_dump(), f, indent=2)

    def size_guards(self, environ: Optional[dict[str, str]] = None) -> SizeGuards:
        """Build the size guards, applying the STIRLINGB_MAX_OBJECTS override.

        Raises:
            DomainError: If the environment variable is not an integer.
        """
        environ = os.environ if environ is None else environ
        guards = SizeGuards(
            max_perm_n=self.guards.max_perm_n,
            max_plain_n=self.guards.max_plain_n,
            max_partition_n=self.guards.max_partition_n,
            max_word_n=self.guards.max_word_n,
            max_objects=self.guards.max_objects,
        )
        raw = environ.get(MAX_OBJECTS_ENV)
        if raw is None or not raw.strip():
            return guards
        try:
            budget = int(raw.strip())
        except ValueError as e:
            raise DomainError(f"{MAX_OBJECTS_ENV} must be an integer, got {raw!r}") from e
        if budget < 0:
            raise DomainError(f"{MAX_OBJECTS_ENV} must be non-negative, got {budget}")
        return guards.with_max_objects(budget)

    def report_path(self, base_dir: Path | str | None = None) -> Path:
        """Absolute path of the HTML report."""
        base_dir = Path.cwd() if base_dir is None else Path(base_dir)
        return (base_dir / self.output.report_dir / self.output.report_filename).resolve()


def get_default_config() -> StirlingConfig:
    """Return a default configuration."""
    return StirlingConfig()


def create_example_config(output_path: Path | str) -> Path:
    """Create an example configuration file."""
    output_path = Path(output_path)
    config = get_default_config()
    config.verify.jobs = 2
    config.to_file(output_path)
    return output_path
