"""Name-keyed access to every gadget runner."""

from __future__ import annotations

from typing import Callable, Optional, Sequence

from ..bitcore import BoolMatrix, BoolVector
from ..dynoracles import FaultPlan
from .array_problems import erickson_gadget, langerman_gadget, pagh_gadget
from .fully import (
    color_oracle_gadget,
    dfailure_gadget,
    ss_sp_2v4_gadget,
    ss_subconn_gadget,
    st_sp_3v5_gadget,
    st_subconn_gadget,
    stsp_3eps_gadget,
    triangle_gadget,
)
from .heavy import densest_gadget, diameter_gadget
from .partial import (
    incr_stsp_gadget,
    partial_apsp_gadget,
    partial_matching_gadget,
    partial_sssp_gadget,
    partial_stsp_gadget,
    partial_tc_gadget,
)
from .runs import GadgetConfig, GadgetRun

GadgetRunner = Callable[..., GadgetRun]

GADGETS: dict[str, GadgetRunner] = {
    "st-subconn": st_subconn_gadget,
    "st-sp-3v5": st_sp_3v5_gadget,
    "triangle": triangle_gadget,
    "ss-subconn": ss_subconn_gadget,
    "ss-sp-2v4": ss_sp_2v4_gadget,
    "color-oracle": color_oracle_gadget,
    "st-sp-3eps": stsp_3eps_gadget,
    "d-failure": dfailure_gadget,
    "pagh": pagh_gadget,
    "langerman": langerman_gadget,
    "erickson": erickson_gadget,
    "diameter": diameter_gadget,
    "densest": densest_gadget,
    "incr-st-sp": incr_stsp_gadget,
    "st-sp-partial": partial_stsp_gadget,
    "ss-sp-partial": partial_sssp_gadget,
    "ap-sp-partial": partial_apsp_gadget,
    "tc-partial": partial_tc_gadget,
    "matching-partial": partial_matching_gadget,
}


def run_gadget(name: str, matrix: BoolMatrix,
               pairs: Sequence[tuple[BoolVector, BoolVector]],
               config: Optional[GadgetConfig] = None,
               fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    try:
        runner = GADGETS[name]
    except KeyError:
        raise ValueError(f"unknown gadget {name!r}; known: {', '.join(sorted(GADGETS))}")
    return runner(matrix, pairs, config, fault_plan)
