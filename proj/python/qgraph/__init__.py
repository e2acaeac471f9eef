"""Spectra of discrete and equilateral metric graphs, KD intervals and
certified spectral gaps of periodic graphs."""

import json as _json

from ._core import (
    DEFAULT_GRID,
    DEFAULT_NMAX,
    Graph,
    NumericalError,
    PeriodicGraph,
    PreconditionError,
    TheoremViolation,
    ValidationError,
    closed_form,
    gap_svg,
    kd_intervals,
    laplacian,
    load_document,
    parse_document,
    spectrum,
    verify_betti_formula,
)
from . import _core


def metric_spectrum(graph, dirichlet=False, n_max=DEFAULT_NMAX):
    return _json.loads(_core.metric_spectrum_json(graph, dirichlet, n_max))


def betti(graph, relative=False):
    return _json.loads(_core.betti_json(graph, relative))


def kd_table(graph, metric=False, n_max=DEFAULT_NMAX):
    return _json.loads(_core.kd_table_json(graph, metric, n_max))


def gap_report(graph, metric=False, n_max=DEFAULT_NMAX, grid=DEFAULT_GRID, bands=True):
    """Accepts a PeriodicGraph or a bare fundamental domain (Graph)."""
    return _json.loads(_core.gap_report_json(graph, metric, n_max, grid, bands))


__all__ = [
    "DEFAULT_GRID",
    "DEFAULT_NMAX",
    "Graph",
    "NumericalError",
    "PeriodicGraph",
    "PreconditionError",
    "TheoremViolation",
    "ValidationError",
    "betti",
    "closed_form",
    "gap_report",
    "gap_svg",
    "kd_intervals",
    "kd_table",
    "laplacian",
    "load_document",
    "metric_spectrum",
    "parse_document",
    "spectrum",
    "verify_betti_formula",
]
