"""Runtime settings helpers."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

Sign = Literal["+", "-"]


class SearchSettings(BaseModel):
    """Bounds for the deterministic rational point searches."""

    height_bound: int = Field(
        default=50,
        ge=1,
        description="Largest height max(|p|, q) of the X-coordinates tried.",
    )
    sign: Sign = Field(
        default="+",
        description="Fiber branch used for every point of a progression.",
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="Process workers for grid search (1 keeps it in-process).",
    )


class SeriesSettings(BaseModel):
    """Truncation for q-expansions."""

    order: int = Field(default=20, ge=2, description="Highest q-exponent compared.")


class EngineSettings(BaseModel):
    """Aggregate configuration for the library and CLI."""

    search: SearchSettings = Field(default_factory=SearchSettings)
    series: SeriesSettings = Field(default_factory=SeriesSettings)
    order_cap: int = Field(
        default=12,
        ge=1,
        description="Orders above this are reported as 'larger or infinite'.",
    )
    log_level: str = Field(default="INFO")


def load_env_file(path: str | Path = ".env") -> bool:
    """Read ``path`` into the environment, falling back to dotenv's own lookup.

    Variables already set in the environment win.
    """
    env_path = Path(path)
    if env_path.exists():
        return load_dotenv(env_path, override=False)
    return load_dotenv(override=False)


def load_settings(env_prefix: str = "CONIC_AP_") -> EngineSettings:
    """Return settings sourced from environment variables / .env."""
    load_env_file()

    search: dict[str, object] = {}
    series: dict[str, object] = {}
    top: dict[str, object] = {}

    height = _optional_int(f"{env_prefix}HEIGHT")
    if height is not None:
        search["height_bound"] = height
    sign = _optional_env(f"{env_prefix}SIGN")
    if sign is not None:
        search["sign"] = sign
    workers = _optional_int(f"{env_prefix}WORKERS")
    if workers is not None:
        search["workers"] = workers
    order = _optional_int(f"{env_prefix}ORDER")
    if order is not None:
        series["order"] = order
    order_cap = _optional_int(f"{env_prefix}ORDER_CAP")
    if order_cap is not None:
        top["order_cap"] = order_cap
    log_level = _optional_env(f"{env_prefix}LOG_LEVEL")
    if log_level is not None:
        top["log_level"] = log_level.upper()

    try:
        return EngineSettings(
            search=SearchSettings(**search),
            series=SeriesSettings(**series),
            **top,
        )
    except ValidationError as exc:
        raise RuntimeError(f"Invalid {env_prefix}* settings: {exc}") from exc


def _optional_int(name: str) -> int | None:
    value = _optional_env(name)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError as exc:
        raise RuntimeError(f"{name} must be an integer.") from exc


def _optional_env(name: str) -> str | None:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return None
    return value.strip()
