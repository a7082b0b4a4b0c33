"""Composite Fourier series approximation of functions and their derivatives."""

from ._cfs import (
    CfsError,
    CompositeSeries1D,
    CompositeSeries2D,
    DirectExpansion1D,
    DirectExpansion2D,
    FunctionSpec1D,
    FunctionSpec2D,
    SampleCase,
    __version__,
    build_composite_1d,
    build_composite_2d,
    build_direct_1d,
    build_direct_2d,
    enumerate_graded,
    enumerate_sinsin_corner_set,
    error_records,
    get_sample,
    grid_counts,
)

__all__ = [
    "CfsError",
    "CompositeSeries1D",
    "CompositeSeries2D",
    "DirectExpansion1D",
    "DirectExpansion2D",
    "FunctionSpec1D",
    "FunctionSpec2D",
    "SampleCase",
    "__version__",
    "build_composite_1d",
    "build_composite_2d",
    "build_direct_1d",
    "build_direct_2d",
    "enumerate_graded",
    "enumerate_sinsin_corner_set",
    "error_records",
    "get_sample",
    "grid_counts",
]
