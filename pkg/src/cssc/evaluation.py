"""Scoring trained models against a held-out corpus.

Every occurrence of a confusion-set word in the test corpus is treated
as an ambiguous position; the written word is the ground truth and a
method is correct when it picks it back.  Results render as an aligned
text table or as TSV for scripting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .classifiers import METHODS, TrainedModel, predictor
from .corpus import Sentence, TagDictionary, find_occurrences

__all__ = ["EvalRecord", "evaluate", "render_table"]


@dataclass(frozen=True, slots=True)
class EvalRecord:
    """Per-confusion-set evaluation outcome.

    ``label`` is the most frequent training word.  A record with no
    test occurrences is ``untestable``: it still renders as a row but
    is excluded from all averages.  ``baseline_accuracy`` is always
    populated for testable records because it is the row sort key,
    whether or not the baseline column was requested.
    """

    label: str
    n_train: int
    n_test: int
    n_features: int
    accuracies: Mapping[str, float] = field(default_factory=dict)
    correct: Mapping[str, int] = field(default_factory=dict)
    baseline_accuracy: float = 0.0
    untestable: bool = False


def _validate_methods(methods: Sequence[str]) -> None:
    if not methods:
        raise ValueError("at least one method is required")
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}")
    if len(set(methods)) != len(methods):
        raise ValueError("duplicate method names")


def evaluate(
    model: TrainedModel,
    sentences: Sequence[Sentence],
    methods: Sequence[str],
    tags: TagDictionary,
) -> EvalRecord:
    """Score one model with each requested method on a test corpus."""
    _validate_methods(methods)
    label_index = max(
        range(len(model.totals)), key=lambda i: (model.totals[i], -i)
    )
    label = model.cset.words[label_index]
    n_train = sum(model.totals)
    occurrences = find_occurrences(sentences, model.cset)
    if not occurrences:
        return EvalRecord(
            label=label,
            n_train=n_train,
            n_test=0,
            n_features=len(model.features),
            untestable=True,
        )
    wanted = list(methods)
    scoring = list(dict.fromkeys(wanted + ["baseline"]))
    scorers = {m: predictor(model, m) for m in scoring}
    correct = {m: 0 for m in scoring}
    for occ in occurrences:
        for m, score in scorers.items():
            if score(occ, tags).chosen == occ.observed:
                correct[m] += 1
    n_test = len(occurrences)
    return EvalRecord(
        label=label,
        n_train=n_train,
        n_test=n_test,
        n_features=len(model.features),
        accuracies={m: correct[m] / n_test for m in wanted},
        correct={m: correct[m] for m in wanted},
        baseline_accuracy=correct["baseline"] / n_test,
    )


def _sorted_rows(records: Sequence[EvalRecord]) -> list[EvalRecord]:
    # Best-served-first: descending baseline accuracy, untestable rows
    # at the bottom, label as the deterministic tiebreak.
    return sorted(
        records,
        key=lambda r: (r.untestable, -r.baseline_accuracy, r.label),
    )


def render_table(
    records: Sequence[EvalRecord],
    methods: Sequence[str],
    tsv: bool = False,
) -> str:
    """Format evaluation records, one row per confusion set.

    Accuracies print with three decimals.  The text variant appends the
    average feature-list size over testable sets; the TSV variant is
    header plus data rows only, columns fixed as label, n_train,
    n_test, then the methods in the order given.
    """
    _validate_methods(methods)
    rows = _sorted_rows(records)
    header = ["set", "n_train", "n_test", *methods]

    def cells(record: EvalRecord) -> list[str]:
        out = [record.label, str(record.n_train), str(record.n_test)]
        for m in methods:
            if record.untestable:
                out.append("-")
            else:
                out.append(f"{record.accuracies[m]:.3f}")
        return out

    if tsv:
        lines = ["\t".join(header)]
        lines.extend("\t".join(cells(r)) for r in rows)
        return "\n".join(lines) + "\n"

    table = [header] + [cells(r) for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = [
        "  ".join(
            cell.ljust(w) if i == 0 else cell.rjust(w)
            for i, (cell, w) in enumerate(zip(row, widths))
        ).rstrip()
        for row in table
    ]
    testable = [r for r in rows if not r.untestable]
    if testable:
        avg = sum(r.n_features for r in testable) / len(testable)
        lines.append(f"avg features per set: {avg:.1f}")
    untestable = [r for r in rows if r.untestable]
    if untestable:
        names = ", ".join(r.label for r in untestable)
        lines.append(f"untestable (no test occurrences): {names}")
    return "\n".join(lines) + "\n"
