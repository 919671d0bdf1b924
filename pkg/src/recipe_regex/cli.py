"""Command-line front end.

    recipe-regex check FILE...        evaluate definition files
    recipe-regex replay SCRIPT|FILE...  evaluate successive versions of a file

Exit status: 0 when every definition built and every test passed, 1 when a
recipe-based error was reported, 2 on a parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .dsl import EvalError, ParseError, eval_file, parse_file
from .span import SourceSpan
from .validation import DEFAULT_GEN_CASES, RecipeError
from .wordgen import GenConfig

DEFAULT_SEED = 1234
SEED_ENV = "RECIPE_REGEX_SEED"


@dataclass
class CliConfig:
    paths: list[str]
    seed: int = DEFAULT_SEED
    max_star_reps: int = 10
    default_gen_cases: int = DEFAULT_GEN_CASES
    format: str = "text"
    quiet: bool = False

    def __post_init__(self) -> None:
        if not self.paths:
            raise ValueError("at least one input path is required")
        for flag in ("seed", "max_star_reps", "default_gen_cases"):
            if getattr(self, flag) < (0 if flag == "seed" else 1):
                raise ValueError(f"--{flag.replace('_', '-')} must be positive")

    @property
    def gen(self) -> GenConfig:
        return GenConfig(seed=self.seed, max_star_reps=self.max_star_reps)


@dataclass
class CheckResult:
    status: str  # ok | recipe-error | parse-error | io-error
    step: Optional[str] = None
    message: Optional[str] = None
    span: Optional[SourceSpan] = None
    source: Optional[str] = None
    reports: list[dict] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return {"ok": 0, "recipe-error": 1}.get(self.status, 2)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "step": self.step,
            "message": self.message,
            "span": self.span.to_dict() if self.span else None,
            "reports": self.reports,
        }


def _report_dict(file: str, r) -> dict:
    rep = r.report
    return {
        "file": file,
        "name": r.name,
        "kind": r.kind,
        "line": r.span.line,
        "checks": {
            "alphabet": rep.alphabet,
            "predicate": rep.predicate,
            "in_lang": rep.in_lang,
            "not_in_lang": rep.not_in_lang,
        },
        "total": rep.total,
    }


def check_files(paths: Sequence[str], cfg: CliConfig) -> CheckResult:
    """Evaluate *paths* in order, stopping at the first error of any kind."""
    reports: list[dict] = []
    for path in paths:
        try:
            source = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            return CheckResult("io-error", message=f"cannot read {path}: {exc}", reports=reports)
        try:
            session = eval_file(parse_file(source, path), cfg.gen, cfg.default_gen_cases)
        except ParseError as exc:
            return CheckResult("parse-error", message=exc.message, span=exc.span, source=source, reports=reports)
        except EvalError as exc:
            return CheckResult("parse-error", message=exc.message, span=exc.span, source=source, reports=reports)
        except RecipeError as exc:
            return CheckResult(
                "recipe-error", exc.step.value, exc.message, exc.span, source=source, reports=reports
            )
        reports += [_report_dict(path, r) for r in session.reports]
    return CheckResult("ok", reports=reports)


def caret_block(source: str, span: SourceSpan) -> str:
    """The span's first source line with a caret underline beneath the expression."""
    lines = source.splitlines() or [""]
    line = lines[span.line - 1] if span.line - 1 < len(lines) else ""
    width = max(1, min(span.length, len(line) - span.column + 1))
    return f"{line}\n{' ' * (span.column - 1)}{'^' * width}"


def format_text(result: CheckResult, quiet: bool = False) -> str:
    out = []
    if result.status == "ok":
        if not quiet:
            for r in result.reports:
                c = r["checks"]
                detail = (
                    f"{r['total']} checks run, {r['total']} passed "
                    f"(alphabet {c['alphabet']}, predicate {c['predicate']}, "
                    f"in-lang {c['in_lang']}, not-in-lang {c['not_in_lang']})"
                )
                if r["kind"] == "predicate":
                    detail = "predicate"
                out.append(f"{r['file']}:{r['line']}: {r['name']} ok: {detail}")
        n = len(result.reports)
        out.append(f"{n} definition{'s' if n != 1 else ''} OK")
        return "\n".join(out)
    if result.span is not None:
        out.append(str(result.span))
        if result.source is not None:
            out.append(caret_block(result.source, result.span))
    if result.status == "recipe-error":
        out.append(result.message)
    else:
        out.append(f"{result.status}: {result.message}")
    return "\n".join(out)


def render(result: CheckResult, cfg: CliConfig) -> str:
    if cfg.format == "json":
        return json.dumps(result.to_json(), ensure_ascii=False)
    return format_text(result, cfg.quiet)


def load_script(paths: Sequence[str]) -> tuple[list[str], Optional[int]]:
    """Resolve a replay script: either a JSON manifest or a literal list of files."""
    if len(paths) == 1 and paths[0].endswith(".json"):
        manifest_path = Path(paths[0])
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        versions = [str(manifest_path.parent / v) for v in manifest["versions"]]
        return versions, manifest.get("seed")
    return list(paths), None


def replay_session(versions: Sequence[str], cfg: CliConfig) -> tuple[str, list[CheckResult]]:
    """Check each file version independently and concatenate the outputs."""
    results = [check_files([v], cfg) for v in versions]
    if cfg.format == "json":
        body = json.dumps(
            [{"version": v, **r.to_json()} for v, r in zip(versions, results)], ensure_ascii=False
        )
        return body, results
    blocks = [f"== {v} ==\n{format_text(r, cfg.quiet)}" for v, r in zip(versions, results)]
    return "\n\n".join(blocks), results


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=None, help=f"RNG seed (default ${SEED_ENV} or {DEFAULT_SEED})")
    common.add_argument("--max-star-reps", type=_positive, default=10)
    common.add_argument("--default-gen-cases", type=_positive, default=DEFAULT_GEN_CASES)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--quiet", action="store_true", help="only print the summary or the error")

    parser = argparse.ArgumentParser(prog="recipe-regex", description="Check regexp definition files.")
    sub = parser.add_subparsers(dest="command", required=True)
    check = sub.add_parser("check", parents=[common], help="evaluate definition files")
    check.add_argument("paths", nargs="+")
    replay = sub.add_parser("replay", parents=[common], help="evaluate successive versions of a file")
    replay.add_argument("paths", nargs="+", help="a JSON session manifest, or file versions in order")
    return parser


def _env_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        return _seed(raw)
    except (ValueError, argparse.ArgumentTypeError):
        raise SystemExit(f"recipe-regex: {SEED_ENV} must be a non-negative integer, got {raw!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    paths = list(args.paths)
    manifest_seed = None
    if args.command == "replay":
        try:
            paths, manifest_seed = load_script(paths)
        except (OSError, ValueError, KeyError) as exc:
            print(f"io-error: cannot load session script: {exc}")
            return 2
    if args.seed is not None:
        seed = args.seed
    elif manifest_seed is not None:
        seed = manifest_seed
    else:
        seed = _env_seed()
    cfg = CliConfig(paths, seed, args.max_star_reps, args.default_gen_cases, args.format, args.quiet)

    if args.command == "check":
        result = check_files(cfg.paths, cfg)
        print(render(result, cfg))
        return result.exit_code
    transcript, results = replay_session(cfg.paths, cfg)
    print(transcript)
    return results[-1].exit_code


if __name__ == "__main__":
    sys.exit(main())
