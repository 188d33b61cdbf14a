"""Benchmark sweeps: per-target timing and operation counts as CSV.

Timing columns are report-only; the structural columns (targets, sizes,
trials, counters, table bytes) are deterministic for a fixed campaign.
"""

from __future__ import annotations

import statistics
import time

from ..engines import parse_engine_spec
from ..gadgets.registry import GADGETS, run_gadget
from .campaign import Campaign, random_matrix, random_pairs, trial_rng
from .verify import _gadget_config, shape_size

CSV_HEADER = "target,n1,n2,n3,trials,preprocess_ns,total_ns,updates,queries,table_bytes"


def _bench_engine(campaign: Campaign, target: str, size: tuple[int, int, int]) -> str:
    n1, n2, n3 = size
    pre_times = []
    totals = []
    table_bytes = 0
    for trial in range(campaign.trials):
        rng = trial_rng(campaign, target, size, trial)
        matrix = random_matrix(rng, n1, n2, campaign.density)
        vectors = [v for _, v in random_pairs(rng, n1, n2, n3, campaign.density)]
        engine = parse_engine_spec(target)()
        engine.preprocess(matrix)
        for v in vectors:
            engine.next(v)
        stats = engine.stats()
        pre_times.append(stats.preprocess_ns)
        totals.append(stats.total_ns)
        table_bytes = stats.table_bytes
    return (f"{target},{n1},{n2},{n3},{campaign.trials},"
            f"{int(statistics.median(pre_times))},{int(statistics.median(totals))},"
            f"0,0,{table_bytes}")


def _bench_gadget(campaign: Campaign, target: str, size: tuple[int, int, int]) -> str:
    shaped = shape_size(target, size)
    n1, n2, n3 = shaped
    totals = []
    updates = 0
    queries = 0
    for trial in range(campaign.trials):
        rng = trial_rng(campaign, target, shaped, trial)
        matrix = random_matrix(rng, n1, n2, campaign.density)
        pairs = random_pairs(rng, n1, n2, n3, campaign.density)
        start = time.perf_counter_ns()
        run = run_gadget(target, matrix, pairs, _gadget_config(campaign))
        totals.append(time.perf_counter_ns() - start)
        updates = run.updates_used
        queries = run.queries_used
    return (f"{target},{n1},{n2},{n3},{campaign.trials},0,"
            f"{int(statistics.median(totals))},{updates},{queries},0")


def bench_campaign(campaign: Campaign) -> str:
    rows = [CSV_HEADER]
    for target in campaign.resolved_targets():
        if target == "multiphase":
            continue
        for size in campaign.sizes:
            if target in GADGETS:
                rows.append(_bench_gadget(campaign, target, size))
            else:
                rows.append(_bench_engine(campaign, target, size))
    return "\n".join(rows) + "\n"
