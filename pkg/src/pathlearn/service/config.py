"""Runtime configuration with CLI > environment > config-file precedence."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path

_ENV_KEYS = {
    "llm_mode": "LLM_MODE",
    "llm_endpoint": "LLM_ENDPOINT",
    "llm_model": "LLM_MODEL",
    "llm_api_key": "LLM_API_KEY",
    "llm_timeout_s": "LLM_TIMEOUT_S",
    "ingest_mode": "INGEST_MODE",
    "corpus_path": "CORPUS_PATH",
    "fixtures_dir": "FIXTURES_DIR",
    "store_path": "STORE_PATH",
    "cache_dir": "CACHE_DIR",
    "static_dir": "STATIC_DIR",
    "port": "PORT",
}


@dataclass
class AppConfig:
    llm_mode: str = "mock"
    llm_endpoint: str = ""
    llm_model: str = ""
    llm_api_key: str = ""
    llm_timeout_s: float = 60.0
    ingest_mode: str = "fixture"
    corpus_path: str = "fixtures/corpus.json"
    fixtures_dir: str = "fixtures/llm"
    store_path: str = ":memory:"
    cache_dir: str = ""
    static_dir: str = ""
    port: int = 8000
    dedup_threshold: float = 0.6

    def validate(self) -> "AppConfig":
        if self.llm_mode not in ("mock", "live"):
            raise ValueError("llm_mode must be 'mock' or 'live'")
        if self.ingest_mode not in ("fixture", "live"):
            raise ValueError("ingest_mode must be 'fixture' or 'live'")
        if self.llm_mode == "live" and not self.llm_endpoint:
            raise ValueError("live llm_mode needs LLM_ENDPOINT")
        return self


def load_config(
    cli_overrides: dict | None = None,
    config_file: Path | str | None = None,
    env: dict | None = None,
) -> AppConfig:
    env = env if env is not None else dict(os.environ)
    values: dict = {}

    if config_file:
        values.update(json.loads(Path(config_file).read_text(encoding="utf-8")))

    for field_name, env_key in _ENV_KEYS.items():
        if env_key in env:
            values[field_name] = env[env_key]

    for key, value in (cli_overrides or {}).items():
        if value is not None:
            values[key] = value

    known = {f.name for f in fields(AppConfig)}
    config = AppConfig(**{k: v for k, v in values.items() if k in known})
    config.port = int(config.port)
    config.llm_timeout_s = float(config.llm_timeout_s)
    config.dedup_threshold = float(config.dedup_threshold)
    return config.validate()
