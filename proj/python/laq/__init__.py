"""Exact cohomology of finite LA-groupoids."""

from ._core import (
    Model,
    acceptance,
    load_model,
    load_model_file,
    nerve_fibers,
    spectral,
    total_cohomology,
    validate,
)

__all__ = [
    "Model",
    "acceptance",
    "load_model",
    "load_model_file",
    "nerve_fibers",
    "spectral",
    "total_cohomology",
    "validate",
]
