"""Executable reductions: one runner per construction, each
returning a GadgetRun with recovered bits and counter budgets."""

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
from .heavy import densest_gadget, densest_threshold, diameter_gadget
from .multiphase import (
    EngineMultiphase,
    MultiphaseProtocol,
    ReachabilityMultiphase,
    multiphase_adapter,
    multiphase_omv_solver,
)
from .partial import (
    DECREMENTAL,
    INCREMENTAL,
    incr_stsp_gadget,
    partial_apsp_gadget,
    partial_matching_gadget,
    partial_sssp_gadget,
    partial_stsp_gadget,
    partial_tc_gadget,
)
from .registry import GADGETS, run_gadget
from .runs import SNAPSHOT, UNDO, GadgetConfig, GadgetError, GadgetRun

__all__ = [
    "DECREMENTAL",
    "EngineMultiphase",
    "GADGETS",
    "GadgetConfig",
    "GadgetError",
    "GadgetRun",
    "INCREMENTAL",
    "MultiphaseProtocol",
    "ReachabilityMultiphase",
    "SNAPSHOT",
    "UNDO",
    "color_oracle_gadget",
    "densest_gadget",
    "densest_threshold",
    "dfailure_gadget",
    "diameter_gadget",
    "erickson_gadget",
    "incr_stsp_gadget",
    "langerman_gadget",
    "multiphase_adapter",
    "multiphase_omv_solver",
    "pagh_gadget",
    "partial_apsp_gadget",
    "partial_matching_gadget",
    "partial_sssp_gadget",
    "partial_stsp_gadget",
    "partial_tc_gadget",
    "run_gadget",
    "ss_sp_2v4_gadget",
    "ss_subconn_gadget",
    "st_sp_3v5_gadget",
    "st_subconn_gadget",
    "stsp_3eps_gadget",
    "triangle_gadget",
]
