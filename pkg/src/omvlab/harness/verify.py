"""Verification campaigns: every target gadget/engine runs over the size
grid and its decode, budgets, and structural gaps are checked against the
direct product; output is deterministic text, nonzero exit on any
violation."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..bitcore import BoolMatrix, BoolVector, mat_vec, vec_mat_vec
from ..dynoracles import FaultPlan, OracleError
from ..engines import naive_engine, parse_engine_spec
from ..gadgets import (
    EngineMultiphase,
    GadgetConfig,
    GadgetError,
    ReachabilityMultiphase,
    multiphase_omv_solver,
)
from ..gadgets.registry import GADGETS, run_gadget
from .campaign import Campaign, random_matrix, random_pairs, trial_rng

# Sizes are clamped per construction family so that one campaign grid can drive
# every gadget: the heavy constructions blow up polynomially in (n1, n2).
_SHAPERS = {
    "densest": lambda n1, n2, n3: (min(n1, n2, 3), min(n1, n2, 3), min(n3, 4)),
    "diameter": lambda n1, n2, n3: (min(n1, 4), min(n2, 16), min(n3, 4)),
    "st-sp-3eps": lambda n1, n2, n3: (min(n1, 8), min(n2, 8), n3),
    "langerman": lambda n1, n2, n3: (min(n1, 16), min(n2, 16), n3),
    "matching-partial": lambda n1, n2, n3: (min(n1, 16), min(n2, 16), min(n3, 8)),
}

# Targets whose canary run provably surfaces a single flipped answer
# through decode bits, counters, or a gap violation.
INJECTION_TARGETS = tuple(sorted(set(GADGETS) - {"densest", "matching-partial"}))


def shape_size(target: str, size: tuple[int, int, int]) -> tuple[int, int, int]:
    shaper = _SHAPERS.get(target)
    return shaper(*size) if shaper else size


def _gadget_config(campaign: Campaign) -> GadgetConfig:
    return GadgetConfig(epsilon=campaign.epsilon, delta=campaign.delta,
                        undo_mode=campaign.undo_mode)


def run_gadget_trial(campaign: Campaign, target: str, size: tuple[int, int, int],
                     trial: int, fault_plan: Optional[FaultPlan] = None):
    rng = trial_rng(campaign, target, size, trial)
    n1, n2, n3 = size
    matrix = random_matrix(rng, n1, n2, campaign.density)
    pairs = random_pairs(rng, n1, n2, n3, campaign.density)
    expected = [vec_mat_vec(u, matrix, v) for u, v in pairs]
    run = run_gadget(target, matrix, pairs, _gadget_config(campaign), fault_plan)
    return run, expected


def _engine_trial(campaign: Campaign, target: str, size: tuple[int, int, int],
                  trial: int) -> bool:
    rng = trial_rng(campaign, target, size, trial)
    n1, n2, n3 = size
    matrix = random_matrix(rng, n1, n2, campaign.density)
    vectors = [v for _, v in random_pairs(rng, n1, n2, n3, campaign.density)]
    engine = parse_engine_spec(target)()
    engine.preprocess(matrix)
    reference = naive_engine()
    reference.preprocess(matrix)
    return all(engine.next(v) == reference.next(v) for v in vectors)


def _multiphase_trial(campaign: Campaign, size: tuple[int, int, int], trial: int) -> bool:
    rng = trial_rng(campaign, "multiphase", size, trial)
    n1, n2, n3 = size
    matrix = random_matrix(rng, n1, n2, campaign.density)
    vectors = [v for _, v in random_pairs(rng, n1, n2, n3, campaign.density)]
    expected = [mat_vec(matrix, v) for v in vectors]
    for mp in (EngineMultiphase(), ReachabilityMultiphase()):
        outputs, _ = multiphase_omv_solver(mp, matrix, vectors)
        if outputs != expected:
            return False
    return True


def _canary_instance(size: tuple[int, int, int]) -> tuple[BoolMatrix, list]:
    n1, n2, n3 = size
    matrix = BoolMatrix.ones(n1, n2)
    pairs = [(BoolVector.ones(n1), BoolVector.ones(n2)) for _ in range(n3)]
    return matrix, pairs


def run_injection_trial(campaign: Campaign, target: str,
                        size: tuple[int, int, int]) -> bool:
    """All-ones canary, one flipped answer; detected means the faulted run
    raises or differs from the clean run in bits or counters."""
    if target not in INJECTION_TARGETS:
        raise ValueError(f"target {target!r} is not in the injection set")
    size = shape_size(target, size)
    matrix, pairs = _canary_instance(size)
    config = _gadget_config(campaign)
    clean = run_gadget(target, matrix, pairs, config)
    flip_at = campaign.inject_fault or 1
    flip_at = 1 + (flip_at - 1) % max(1, clean.queries_used)
    try:
        faulted = run_gadget(target, matrix, pairs, config,
                             FaultPlan(flip_at_query=flip_at))
    except (GadgetError, OracleError):
        return True
    return (faulted.recovered != clean.recovered
            or faulted.updates_used != clean.updates_used
            or faulted.queries_used != clean.queries_used)


def verify_campaign(campaign: Campaign) -> tuple[str, bool]:
    lines = [
        f"campaign seed={campaign.seed} trials={campaign.trials} "
        f"density={campaign.density} undo={campaign.undo_mode} "
        f"epsilon={campaign.epsilon} delta={campaign.delta}"
    ]
    ok = True
    if campaign.inject_fault is not None:
        # an injection campaign always reports failure; the per-target
        # lines show whether each seeded fault was caught
        for target in campaign.resolved_targets():
            if target not in INJECTION_TARGETS:
                lines.append(f"target={target} fault=skipped")
                continue
            detected = all(
                run_injection_trial(campaign, target, size) for size in campaign.sizes
            )
            lines.append(f"target={target} fault={'detected' if detected else 'MISSED'}")
        lines.append("result=FAIL")
        return "\n".join(lines) + "\n", False

    for target in campaign.resolved_targets():
        if target in GADGETS:
            trials = 0
            mismatches = 0
            errors = []
            worst_updates = Fraction(0)
            worst_queries = Fraction(0)
            for size in campaign.sizes:
                shaped = shape_size(target, size)
                for trial in range(campaign.trials):
                    trials += 1
                    try:
                        run, expected = run_gadget_trial(campaign, target, shaped, trial)
                    except (GadgetError, OracleError) as exc:
                        errors.append(str(exc))
                        continue
                    if run.recovered != expected:
                        mismatches += 1
                    worst_updates = max(worst_updates, run.ratio_updates())
                    worst_queries = max(worst_queries, run.ratio_queries())
            status_ok = mismatches == 0 and not errors
            ok = ok and status_ok
            lines.append(
                f"target={target} kind=gadget trials={trials} "
                f"decode={'ok' if mismatches == 0 else f'MISMATCH:{mismatches}'} "
                f"checks={'ok' if not errors else 'VIOLATION:' + errors[0]} "
                f"worst_updates={worst_updates} worst_queries={worst_queries}"
            )
        elif target == "multiphase":
            trials = 0
            bad = 0
            for size in campaign.sizes:
                for trial in range(campaign.trials):
                    trials += 1
                    if not _multiphase_trial(campaign, size, trial):
                        bad += 1
            ok = ok and bad == 0
            lines.append(
                f"target=multiphase kind=solver trials={trials} "
                f"outputs={'ok' if bad == 0 else f'MISMATCH:{bad}'}"
            )
        else:
            trials = 0
            bad = 0
            for size in campaign.sizes:
                for trial in range(campaign.trials):
                    trials += 1
                    if not _engine_trial(campaign, target, size, trial):
                        bad += 1
            ok = ok and bad == 0
            lines.append(
                f"target={target} kind=engine trials={trials} "
                f"outputs={'ok' if bad == 0 else f'MISMATCH:{bad}'}"
            )
    lines.append("result=PASS" if ok else "result=FAIL")
    return "\n".join(lines) + "\n", ok
