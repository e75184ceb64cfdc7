"""Command-line entry points: offline planning and the HTTP service."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .engine.planner import plan_pathway
from .errors import PathLearnError
from .ingest.backend import FixtureBackend
from .ingest.corpus import load_corpus
from .ingest.transcripts import TranscriptCache
from .llm.mock import MockProvider
from .llm.provider import HttpProvider
from .models import PlanningPreferences
from .service.config import load_config
from .service.storage import canonical_json


@click.group()
def main():
    """Plan video learning pathways and serve the learning API."""


@main.command()
@click.option("--topic", required=True, help="What the learner wants to study.")
@click.option(
    "--length",
    type=click.Choice(["short", "medium", "long"]),
    default="medium",
    show_default=True,
    help="Preferred video length band.",
)
@click.option(
    "--level",
    type=click.Choice(["beginner", "intermediate", "advanced"]),
    default="beginner",
    show_default=True,
)
@click.option("--concepts", type=click.IntRange(3, 8), default=5, show_default=True)
@click.option(
    "--corpus",
    type=click.Path(exists=True, dir_okay=False),
    default="fixtures/corpus.json",
    show_default=True,
)
@click.option(
    "--mock-llm",
    "mock_llm",
    type=click.Path(exists=True, file_okay=False),
    default="fixtures/llm",
    show_default=True,
    help="Mock reply fixture directory; omit --live to stay offline.",
)
@click.option("--live", is_flag=True, help="Use the live LLM endpoint from env config.")
@click.option("--out", type=click.Path(dir_okay=False), default="pathway.json", show_default=True)
def plan(topic, length, level, concepts, corpus, mock_llm, live, out):
    """Generate a validated pathway document and write it as canonical JSON."""
    prefs = PlanningPreferences(
        topic=topic, video_length=length, experience_level=level, num_concepts=concepts
    )
    if live:
        config = load_config()
        provider = HttpProvider(
            endpoint=config.llm_endpoint,
            model=config.llm_model,
            api_key=config.llm_api_key,
            timeout_s=config.llm_timeout_s,
        )
    else:
        provider = MockProvider(mock_llm)
    backend = FixtureBackend(load_corpus(corpus))
    try:
        pathway, _concept_map, _pool, trace = plan_pathway(
            prefs, provider, backend, TranscriptCache()
        )
    except PathLearnError as exc:
        click.echo(f"planning failed [{exc.code}]: {exc}", err=True)
        sys.exit(1)
    Path(out).write_text(canonical_json(pathway.to_dict()), encoding="utf-8")
    total = sum(len(w.videos) for w in pathway.weeks)
    click.echo(
        f"wrote {pathway.pathway_id} ({len(pathway.weeks)} weeks, {total} videos) to {out}"
    )
    for stage in trace.stages:
        click.echo(
            f"  {stage.name}: {stage.count_in} -> {stage.count_out} "
            f"({stage.duration_ms:.0f} ms)"
        )


@main.command()
@click.option("--port", type=int, default=None)
@click.option("--store", "store_path", type=click.Path(dir_okay=False), default=None)
@click.option("--llm-mode", type=click.Choice(["mock", "live"]), default=None)
@click.option("--ingest-mode", type=click.Choice(["fixture", "live"]), default=None)
@click.option("--corpus", "corpus_path", type=click.Path(dir_okay=False), default=None)
@click.option("--fixtures", "fixtures_dir", type=click.Path(file_okay=False), default=None)
@click.option("--static-dir", type=click.Path(file_okay=False), default=None)
@click.option("--config", "config_file", type=click.Path(dir_okay=False), default=None)
def serve(port, store_path, llm_mode, ingest_mode, corpus_path, fixtures_dir, static_dir, config_file):
    """Run the HTTP API (and the UI bundle when a static dir is configured)."""
    import uvicorn

    from .service.app import create_app

    config = load_config(
        cli_overrides={
            "port": port,
            "store_path": store_path,
            "llm_mode": llm_mode,
            "ingest_mode": ingest_mode,
            "corpus_path": corpus_path,
            "fixtures_dir": fixtures_dir,
            "static_dir": static_dir,
        },
        config_file=config_file,
    )
    uvicorn.run(create_app(config), host="0.0.0.0", port=config.port)


if __name__ == "__main__":
    main()
