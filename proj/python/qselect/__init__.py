from ._qselect import (
    Edge,
    FittedPipeline,
    Graph,
    GwStats,
    NumericalError,
    QaoaAngles,
    brute_force_max,
    compute_features,
    cross_validate,
    estimate_gw,
    fit_pipeline,
    generate_regular,
    label_criterion1,
    label_criterion2,
    maxcut_cost,
    optimize_angles,
    qaoa_expected_cost,
    run_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "FittedPipeline",
    "Graph",
    "GwStats",
    "NumericalError",
    "QaoaAngles",
    "brute_force_max",
    "compute_features",
    "cross_validate",
    "estimate_gw",
    "fit_pipeline",
    "generate_regular",
    "label_criterion1",
    "label_criterion2",
    "maxcut_cost",
    "optimize_angles",
    "qaoa_expected_cost",
    "run_experiment",
]
