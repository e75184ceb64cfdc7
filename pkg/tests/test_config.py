from __future__ import annotations

import json

import pytest

from pathlearn.service.config import AppConfig, load_config


def test_defaults_are_offline():
    config = load_config(env={})
    assert config.llm_mode == "mock"
    assert config.ingest_mode == "fixture"


def test_cli_beats_env_beats_file(tmp_path):
    config_file = tmp_path / "config.json"
    config_file.write_text(json.dumps({"port": 1111, "llm_model": "file-model"}))
    config = load_config(
        cli_overrides={"port": 3333},
        config_file=config_file,
        env={"PORT": "2222", "LLM_MODEL": "env-model"},
    )
    assert config.port == 3333  # CLI wins
    assert config.llm_model == "env-model"  # env beats file


def test_none_cli_values_do_not_override(tmp_path):
    config = load_config(cli_overrides={"port": None}, env={"PORT": "2222"})
    assert config.port == 2222


def test_spec_named_env_vars_are_read():
    config = load_config(
        env={
            "LLM_MODE": "live",
            "LLM_ENDPOINT": "https://llm.example/v1/chat",
            "LLM_MODEL": "m",
            "LLM_API_KEY": "k",
            "INGEST_MODE": "fixture",
            "CORPUS_PATH": "/tmp/corpus.json",
        }
    )
    assert config.llm_mode == "live"
    assert config.llm_endpoint == "https://llm.example/v1/chat"
    assert config.corpus_path == "/tmp/corpus.json"


def test_live_mode_requires_endpoint():
    with pytest.raises(ValueError):
        load_config(env={"LLM_MODE": "live"})


def test_bad_modes_rejected():
    with pytest.raises(ValueError):
        AppConfig(llm_mode="other").validate()
    with pytest.raises(ValueError):
        AppConfig(ingest_mode="other").validate()
