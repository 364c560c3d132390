"""Context-sensitive spelling correction over confusion sets.

Given sets of easily confused words ({desert, dessert}, {peace, piece},
...), the package learns context-word and collocation features from a
training corpus and uses them to pick the right set member for an
ambiguous position, to evaluate method accuracy on held-out text and to
flag likely misuses in documents.
"""

from .classifiers import (
    ALL_FEATURE_KINDS,
    COLLOCATIONS,
    CONTEXT_WORDS,
    METHODS,
    METRICS,
    Prediction,
    Suggestion,
    TrainConfig,
    TrainedModel,
    TrainingError,
    correct_text,
    gather_evidence,
    predict_baseline,
    predict_bayes,
    predict_decision_list,
    restrict_features,
    train,
)
from .corpus import (
    ConfusionSet,
    FormatError,
    Occurrence,
    Sentence,
    TagDictionary,
    Token,
    default_tag_dictionary_path,
    find_occurrences,
    load_confusion_sets,
    load_tag_dictionary,
    tag_set,
    tokenize,
)
from .evaluation import EvalRecord, evaluate, render_table
from .features import (
    Collocation,
    CollocationElement,
    ContextWord,
    Feature,
    FeatureStats,
    extract_context_words,
    feature_matches,
    features_conflict,
    format_feature_key,
    generate_collocations,
    parse_feature_key,
)
from .modelio import ModelFormatError, load_model, parse_model, save_model, serialize_model
from .stats import (
    PruneConfig,
    accumulate_counts,
    chi_square_critical,
    chi_square_prune,
    chi_square_statistic,
    passes_min_occurrences,
    peak_share,
    reliability_strength,
    smoothed_likelihood,
    uncertainty_strength,
)

__version__ = "0.1.0"
