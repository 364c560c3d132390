"""Command-line front end.

Four subcommands: ``train`` fits one model per confusion set, ``eval``
scores saved models on a test corpus, ``correct`` flags suspicious
occurrences in a document, and ``inspect`` dumps a model's feature
list.  Exit codes: 0 on success, 1 for usage errors, 2 for data errors
(unreadable files, bad formats, version mismatches).

The tag dictionary defaults to ``$CSSC_TAGS`` when set, else to the
dictionary bundled with the package; ``--tags`` overrides both.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .classifiers import (
    ALL_FEATURE_KINDS,
    COLLOCATIONS,
    CONTEXT_WORDS,
    METHODS,
    METRICS,
    TrainConfig,
    TrainedModel,
    TrainingError,
    correct_text,
    train,
)
from .corpus import (
    FormatError,
    TagDictionary,
    default_tag_dictionary_path,
    load_confusion_sets,
    load_tag_dictionary,
    tokenize,
)
from .evaluation import evaluate, render_table
from .modelio import ModelFormatError, load_model, save_model
from .stats import PruneConfig

__all__ = ["main", "build_parser"]

_KIND_NAMES = {CONTEXT_WORDS, COLLOCATIONS}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; this tool reserves 2
    # for data errors, so usage problems exit 1 instead.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_features(value: str) -> frozenset[str]:
    kinds = frozenset(part.strip() for part in value.split(","))
    if not kinds or not kinds <= _KIND_NAMES:
        raise argparse.ArgumentTypeError(
            f"features must be a comma-separated subset of "
            f"{sorted(_KIND_NAMES)}, got {value!r}"
        )
    return kinds


def _parse_methods(value: str) -> list[str]:
    methods = [part.strip() for part in value.split(",")]
    for m in methods:
        if m not in METHODS:
            raise argparse.ArgumentTypeError(
                f"unknown method {m!r}, choose from {', '.join(METHODS)}"
            )
    if len(set(methods)) != len(methods):
        raise argparse.ArgumentTypeError("duplicate method names")
    return methods


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cssc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")

    p_train = sub.add_parser("train", help="train one model per confusion set")
    p_train.add_argument("--corpus", required=True, help="training text file")
    p_train.add_argument(
        "--confusion-sets", required=True, help="confusion-set file, one set per line"
    )
    p_train.add_argument("--tags", help="tag dictionary file")
    p_train.add_argument("--out", required=True, help="directory for model files")
    p_train.add_argument("--k", type=int, default=3, help="context window half-width")
    p_train.add_argument("--ell", type=int, default=2, help="max collocation length")
    p_train.add_argument("--tmin", type=int, default=10, help="minimum occurrence count")
    p_train.add_argument("--alpha", type=float, default=0.05, help="chi-square level")
    p_train.add_argument("--metric", choices=METRICS, default="reliability")
    p_train.add_argument(
        "--features",
        type=_parse_features,
        default=ALL_FEATURE_KINDS,
        help="feature kinds: cwords,collocs (default), cwords or collocs",
    )
    p_train.set_defaults(func=cmd_train)

    p_eval = sub.add_parser("eval", help="score saved models on a test corpus")
    p_eval.add_argument("--models", required=True, help="directory of .model files")
    p_eval.add_argument("--test", required=True, help="test text file")
    p_eval.add_argument(
        "--methods",
        type=_parse_methods,
        default=list(METHODS),
        help="comma-separated subset of " + ",".join(METHODS),
    )
    p_eval.add_argument("--tags", help="tag dictionary file")
    p_eval.add_argument("--tsv", action="store_true", help="tab-separated output")
    p_eval.set_defaults(func=cmd_eval)

    p_correct = sub.add_parser("correct", help="flag suspicious words in a document")
    p_correct.add_argument("--models", required=True, help="directory of .model files")
    p_correct.add_argument("--in", dest="input", required=True, help="document to check")
    p_correct.add_argument("--method", choices=METHODS, default="bayes")
    p_correct.add_argument(
        "--threshold",
        type=float,
        default=0.0,
        help="minimum posterior margin for a suggestion",
    )
    p_correct.add_argument("--tags", help="tag dictionary file")
    p_correct.set_defaults(func=cmd_correct)

    p_inspect = sub.add_parser("inspect", help="print a model's feature list")
    p_inspect.add_argument("--model", required=True, help="model file")
    p_inspect.add_argument("--top", type=int, help="show only the strongest n features")
    p_inspect.set_defaults(func=cmd_inspect)

    return parser


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_tags(arg: str | None) -> TagDictionary:
    path = Path(arg) if arg else default_tag_dictionary_path()
    return load_tag_dictionary(path)


def _model_filename(words: Sequence[str]) -> str:
    return "_".join(words) + ".model"


def _load_models(models_dir: str) -> list[TrainedModel]:
    directory = Path(models_dir)
    if not directory.is_dir():
        raise FormatError(f"{models_dir}: not a directory")
    paths = sorted(directory.glob("*.model"))
    if not paths:
        raise FormatError(f"{models_dir}: no .model files found")
    return [load_model(p) for p in paths]


def cmd_train(args: argparse.Namespace) -> int:
    sentences = tokenize(_read_text(args.corpus))
    csets = load_confusion_sets(args.confusion_sets)
    tags = _load_tags(args.tags)
    try:
        config = TrainConfig(
            k=args.k,
            ell=args.ell,
            prune=PruneConfig(t_min=args.tmin, alpha=args.alpha),
            metric=args.metric,
            feature_kinds=args.features,
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for cset in csets:
        try:
            model = train(sentences, cset, config, tags)
        except TrainingError as exc:
            print(f"cssc: warning: skipping {{{cset.label}}}: {exc}", file=sys.stderr)
            continue
        path = out_dir / _model_filename(cset.words)
        save_model(model, path)
        print(
            f"{cset.label}: {len(model.features)} features "
            f"from {sum(model.totals)} occurrences -> {path}"
        )
    return 0


def _warn_missing_kinds(models: Sequence[TrainedModel], methods: Sequence[str]) -> None:
    needs = {"cwords": CONTEXT_WORDS, "collocs": COLLOCATIONS}
    for model in models:
        for method, kind in needs.items():
            if method in methods and kind not in model.config.feature_kinds:
                print(
                    f"cssc: warning: model {{{model.cset.label}}} was trained "
                    f"without {kind}; method {method} degrades to baseline",
                    file=sys.stderr,
                )


def cmd_eval(args: argparse.Namespace) -> int:
    models = _load_models(args.models)
    sentences = tokenize(_read_text(args.test))
    tags = _load_tags(args.tags)
    _warn_missing_kinds(models, args.methods)
    records = [evaluate(m, sentences, args.methods, tags) for m in models]
    sys.stdout.write(render_table(records, args.methods, tsv=args.tsv))
    return 0


def cmd_correct(args: argparse.Namespace) -> int:
    if args.threshold < 0:
        raise FormatError("threshold must be non-negative")
    models = _load_models(args.models)
    sentences = tokenize(_read_text(args.input))
    tags = _load_tags(args.tags)
    suggestions = correct_text(
        models, sentences, tags, threshold=args.threshold, method=args.method
    )
    for s in suggestions:
        posterior = " ".join(f"{w}={p:.3f}" for w, p in s.posterior.items())
        flag = "\t[word in multiple sets]" if s.shared else ""
        print(f"{s.line}:{s.col}\t{s.original} -> {s.suggested}\t{posterior}{flag}")
    return 0


def cmd_inspect(args: argparse.Namespace) -> int:
    from .features import format_feature_key

    model = load_model(args.model)
    words = model.cset.words
    print("\t".join(["feature", *words, "strength"]))
    features = model.features
    if args.top is not None:
        features = features[: max(args.top, 0)]
    for feature in features:
        counts = "\t".join(str(m) for m in feature.stats.matched)
        print(f"{format_feature_key(feature.key)}\t{counts}\t{feature.strength:.3f}")
    totals = "\t".join(str(t) for t in model.totals)
    print(f"total occurrences\t{totals}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except (FormatError, ModelFormatError, TrainingError) as exc:
        print(f"cssc: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cssc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
