"""Depth-weighted cross-domain classification metrics over embedding corpora.

The toolkit scores how well a classifier holds up on target-domain
samples that are dissimilar from its source domain: cosine-expectation
depth locates each sample relative to the source corpus, the Q statistic
summarizes corpus-level dissimilarity, and the depth-weighted F1 (DF1)
re-weights evaluation mass toward source-dissimilar samples, optionally
restricted to percentile subsets of increasing difficulty.
"""

__version__ = "0.1.0"

from .corpus import (
    Corpus,
    EmbeddedSample,
    ValidationIssue,
    ValidationReport,
    apply_predictions,
    attach_predictions,
    load_corpus,
    save_corpus,
    validate_corpus,
)
from .depth import (
    DepthTable,
    MedianInfo,
    QStatistic,
    corpus_depth_tables,
    cosine_distance,
    depth_scores,
    q_statistic,
    source_median,
)
from .demo import (
    CurvePoint,
    DemoConfig,
    DemoCurves,
    DemoRun,
    demo_curve_stats,
    demo_predict,
    run_demo,
    synth_corpus,
)
from .exceptions import (
    CorpusFormatError,
    DegenerateWeightsError,
    DepthF1Error,
    MissingPredictionError,
    UnknownIdError,
)
from .metrics import (
    DEFAULT_LAMBDAS,
    ConfusionTally,
    EvaluationReport,
    LambdaSubset,
    SweepRow,
    WeightTable,
    confusion_tally,
    depth_f1,
    depth_weights,
    evaluate_sweep,
    lambda_subset,
    micro_f1,
)

__all__ = [
    "__version__",
    "Corpus",
    "EmbeddedSample",
    "ValidationIssue",
    "ValidationReport",
    "apply_predictions",
    "attach_predictions",
    "load_corpus",
    "save_corpus",
    "validate_corpus",
    "DepthTable",
    "MedianInfo",
    "QStatistic",
    "corpus_depth_tables",
    "cosine_distance",
    "depth_scores",
    "q_statistic",
    "source_median",
    "CurvePoint",
    "DemoConfig",
    "DemoCurves",
    "DemoRun",
    "demo_curve_stats",
    "demo_predict",
    "run_demo",
    "synth_corpus",
    "CorpusFormatError",
    "DegenerateWeightsError",
    "DepthF1Error",
    "MissingPredictionError",
    "UnknownIdError",
    "DEFAULT_LAMBDAS",
    "ConfusionTally",
    "EvaluationReport",
    "LambdaSubset",
    "SweepRow",
    "WeightTable",
    "confusion_tally",
    "depth_f1",
    "depth_weights",
    "evaluate_sweep",
    "lambda_subset",
    "micro_f1",
]
