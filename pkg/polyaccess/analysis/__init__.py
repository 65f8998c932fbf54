from .accessibility import GenericTest, algorithm1, algorithm2, generic_test, resolve_threshold
from .bounds import bound_analysis, rank_l_analysis, strong_analysis
from .render import render_structured, render_text
from .report import AnalysisReport, DepthRecord, IndexKind, Verdict
from .sampling import SampleDiagnostics, sample_check

__all__ = [
    "AnalysisReport",
    "DepthRecord",
    "GenericTest",
    "IndexKind",
    "SampleDiagnostics",
    "Verdict",
    "algorithm1",
    "algorithm2",
    "bound_analysis",
    "generic_test",
    "rank_l_analysis",
    "render_structured",
    "render_text",
    "resolve_threshold",
    "sample_check",
    "strong_analysis",
]
