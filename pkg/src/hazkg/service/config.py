"""Service configuration.

The config file is plain ``key = value`` lines with ``#`` comments
(documented in docs/config.md). Relative paths are resolved against the
config file's own directory. Validation fails fast: the chosen LLM mode
must be exactly one of stub/remote with its required parameters, and
every configured file must exist before the server accepts traffic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path


class ConfigError(ValueError):
    """Config file is malformed or fails startup validation."""


@dataclass
class ServiceConfig:
    listen_host: str = "127.0.0.1"
    listen_port: int = 8080
    corpus_dir: str | None = None
    snapshot: str | None = None
    llm_mode: str = "stub"
    stub_script: str | None = None
    llm_endpoint: str | None = None
    llm_model: str | None = None
    llm_key_env: str = ""
    embedding_mode: str = "offline"
    embedding_endpoint: str | None = None
    embedding_model: str | None = None
    embedding_key_env: str = ""
    exemplars: str | None = None
    row_cap: int = 10_000
    time_cap_seconds: float = 2.0
    cors_allow: list[str] = field(default_factory=list)
    trace_log: str | None = None
    few_shot_k: int = 4


_INT_KEYS = {"listen_port", "row_cap", "few_shot_k"}
_FLOAT_KEYS = {"time_cap_seconds"}
_PATH_KEYS = {"corpus_dir", "snapshot", "stub_script", "exemplars", "trace_log"}
_LIST_KEYS = {"cors_allow"}


def load_config(path: str | os.PathLike) -> ServiceConfig:
    base = Path(path).resolve().parent
    config = ServiceConfig()
    valid_keys = set(ServiceConfig.__dataclass_fields__)
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in valid_keys:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if value == "":
            continue
        try:
            if key in _INT_KEYS:
                setattr(config, key, int(value))
            elif key in _FLOAT_KEYS:
                setattr(config, key, float(value))
            elif key in _LIST_KEYS:
                setattr(config, key, [item.strip() for item in value.split(",") if item.strip()])
            elif key in _PATH_KEYS:
                setattr(config, key, str((base / value).resolve()) if not os.path.isabs(value) else value)
            else:
                setattr(config, key, value)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return config


def validate_for_serve(config: ServiceConfig) -> None:
    """Startup checks for the serve path; raises ConfigError on the first problem."""
    if config.llm_mode not in ("stub", "remote"):
        raise ConfigError(f"llm_mode must be 'stub' or 'remote', got {config.llm_mode!r}")
    if config.llm_mode == "stub":
        if not config.stub_script:
            raise ConfigError("llm_mode=stub requires stub_script")
        if config.llm_endpoint:
            raise ConfigError("llm_mode=stub must not set llm_endpoint (exactly one mode)")
    else:
        if not config.llm_endpoint or not config.llm_model:
            raise ConfigError("llm_mode=remote requires llm_endpoint and llm_model")
        if config.stub_script:
            raise ConfigError("llm_mode=remote must not set stub_script (exactly one mode)")
    if config.embedding_mode not in ("offline", "remote"):
        raise ConfigError(f"embedding_mode must be 'offline' or 'remote', got {config.embedding_mode!r}")
    if config.embedding_mode == "remote" and not (config.embedding_endpoint and config.embedding_model):
        raise ConfigError("embedding_mode=remote requires embedding_endpoint and embedding_model")
    if not config.snapshot:
        raise ConfigError("serve requires a snapshot path")
    if not config.exemplars:
        raise ConfigError("serve requires an exemplars path")
    for key in ("snapshot", "stub_script", "exemplars"):
        value = getattr(config, key)
        if value and not Path(value).exists():
            raise FileNotFoundError(f"{key} path does not exist: {value}")
