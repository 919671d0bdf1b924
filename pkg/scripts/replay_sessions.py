"""Replay the two multi-version corpus sessions and print their transcripts.

    python scripts/replay_sessions.py [--format text|json]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from recipe_regex.cli import CliConfig, DEFAULT_SEED, load_script, replay_session

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
SESSIONS = ["odda_session", "abstar_session"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("text", "json"), default="text")
    args = ap.parse_args()
    for name in SESSIONS:
        versions, seed = load_script([str(CORPUS / name / "session.json")])
        cfg = CliConfig(versions, seed=DEFAULT_SEED if seed is None else seed, format=args.format)
        transcript, results = replay_session(versions, cfg)
        errors = sum(r.status != "ok" for r in results)
        print(f"# session {name}: {len(versions)} versions, {errors} errors, seed {cfg.seed}")
        print(transcript)
        print()


if __name__ == "__main__":
    main()
