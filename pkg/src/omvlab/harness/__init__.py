"""CLI and campaign machinery: instance generation, verification sweeps,
benchmarks, and reports."""

from .bench import bench_campaign
from .campaign import Campaign, parse_sizes, random_matrix, random_pairs, trial_rng
from .generate import generate_files
from .report import parse_bench_csv, report, summarize
from .verify import INJECTION_TARGETS, run_injection_trial, shape_size, verify_campaign

__all__ = [
    "Campaign",
    "INJECTION_TARGETS",
    "bench_campaign",
    "generate_files",
    "parse_bench_csv",
    "parse_sizes",
    "random_matrix",
    "random_pairs",
    "report",
    "run_injection_trial",
    "shape_size",
    "summarize",
    "trial_rng",
    "verify_campaign",
]
