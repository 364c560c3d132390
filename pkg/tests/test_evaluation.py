"""Evaluation records and table rendering."""

from __future__ import annotations

import pytest

from cssc.classifiers import TrainConfig, train
from cssc.corpus import ConfusionSet
from cssc.evaluation import EvalRecord, evaluate, render_table

from .helpers import make_sentence, make_tags

PP = ConfusionSet(("peace", "piece"))
NO_TAGS = make_tags({})

TRAIN = (
    [make_sentence("the", "peace", "holds") for _ in range(12)]
    + [make_sentence("a", "piece", "falls") for _ in range(12)]
)
MODEL = train(TRAIN, PP, TrainConfig(), NO_TAGS)


class TestEvaluate:
    def test_perfectly_separable_test_set(self):
        test = (
            [make_sentence("the", "peace", "holds") for _ in range(4)]
            + [make_sentence("a", "piece", "falls") for _ in range(3)]
        )
        record = evaluate(MODEL, test, ["baseline", "bayes"], NO_TAGS)
        assert record.label == "peace"
        assert record.n_train == 24
        assert record.n_test == 7
        assert record.n_features == len(MODEL.features)
        assert record.accuracies["bayes"] == pytest.approx(1.0)
        assert record.correct["bayes"] == 7
        # Baseline ties on the 12/12 priors and always says "peace".
        assert record.accuracies["baseline"] == pytest.approx(4 / 7)
        assert not record.untestable

    def test_partial_accuracy_counts(self):
        # 7 occurrences the model gets right, 3 written the other way.
        test = (
            [make_sentence("the", "peace", "holds") for _ in range(4)]
            + [make_sentence("a", "piece", "falls") for _ in range(3)]
            + [make_sentence("the", "piece", "holds") for _ in range(3)]
        )
        record = evaluate(MODEL, test, ["bayes"], NO_TAGS)
        assert record.n_test == 10
        assert record.correct["bayes"] == 7
        assert record.accuracies["bayes"] == pytest.approx(0.7)

    def test_label_is_majority_training_word(self):
        skewed = train(
            [make_sentence("the", "peace", "holds") for _ in range(10)]
            + [make_sentence("a", "piece", "falls") for _ in range(30)],
            PP, TrainConfig(), NO_TAGS,
        )
        record = evaluate(
            skewed, [make_sentence("a", "piece", "falls")], ["bayes"], NO_TAGS
        )
        assert record.label == "piece"

    def test_label_tie_takes_first_set_member(self):
        record = evaluate(
            MODEL, [make_sentence("the", "peace", "holds")], ["bayes"], NO_TAGS
        )
        assert record.label == "peace"

    def test_untestable_when_no_occurrences(self):
        record = evaluate(
            MODEL, [make_sentence("nothing", "here")], ["bayes"], NO_TAGS
        )
        assert record.untestable
        assert record.n_test == 0
        assert record.accuracies == {}

    def test_baseline_populated_even_when_not_requested(self):
        test = [make_sentence("the", "peace", "holds") for _ in range(4)]
        record = evaluate(MODEL, test, ["bayes"], NO_TAGS)
        assert record.baseline_accuracy == pytest.approx(1.0)
        assert "baseline" not in record.accuracies

    @pytest.mark.parametrize("methods", [[], ["bayes", "bayes"], ["magic"]])
    def test_method_validation(self, methods):
        with pytest.raises(ValueError):
            evaluate(MODEL, [], methods, NO_TAGS)


def record(label, baseline, bayes, n_train=100, n_test=50, n_features=20,
           untestable=False):
    if untestable:
        return EvalRecord(label=label, n_train=n_train, n_test=0,
                          n_features=n_features, untestable=True)
    return EvalRecord(
        label=label,
        n_train=n_train,
        n_test=n_test,
        n_features=n_features,
        accuracies={"baseline": baseline, "bayes": bayes},
        correct={"baseline": round(baseline * n_test),
                 "bayes": round(bayes * n_test)},
        baseline_accuracy=baseline,
    )


class TestRenderTable:
    RECORDS = [
        record("weather", 0.114, 0.913, n_features=30),
        record("peace", 0.922, 0.984, n_features=10),
        record("council", 0.0, 0.0, untestable=True),
    ]

    def test_rows_sorted_by_descending_baseline(self):
        out = render_table(self.RECORDS, ["baseline", "bayes"])
        lines = out.splitlines()
        assert lines[0].split() == ["set", "n_train", "n_test",
                                    "baseline", "bayes"]
        assert lines[1].split()[0] == "peace"
        assert lines[2].split()[0] == "weather"
        assert lines[3].split()[0] == "council"

    def test_three_decimal_accuracies(self):
        out = render_table(self.RECORDS, ["baseline", "bayes"])
        assert "0.922" in out and "0.984" in out
        assert "0.114" in out and "0.913" in out

    def test_untestable_row_and_footer(self):
        out = render_table(self.RECORDS, ["baseline", "bayes"])
        council_row = [l for l in out.splitlines() if l.startswith("council")]
        assert council_row and council_row[0].split()[-2:] == ["-", "-"]
        assert "untestable (no test occurrences): council" in out

    def test_average_features_excludes_untestable(self):
        out = render_table(self.RECORDS, ["bayes"])
        assert "avg features per set: 20.0" in out

    def test_tsv_layout(self):
        out = render_table(self.RECORDS, ["bayes", "baseline"], tsv=True)
        lines = out.splitlines()
        assert lines[0] == "set\tn_train\tn_test\tbayes\tbaseline"
        assert lines[1] == "peace\t100\t50\t0.984\t0.922"
        assert lines[2] == "weather\t100\t50\t0.913\t0.114"
        assert lines[3] == "council\t100\t0\t-\t-"
        assert len(lines) == 4
        assert "avg features" not in out

    def test_label_breaks_baseline_ties(self):
        records = [record("zebra", 0.5, 0.6), record("apple", 0.5, 0.7)]
        out = render_table(records, ["bayes"])
        lines = out.splitlines()
        assert lines[1].split()[0] == "apple"
        assert lines[2].split()[0] == "zebra"

    def test_method_validation(self):
        with pytest.raises(ValueError):
            render_table(self.RECORDS, [])
