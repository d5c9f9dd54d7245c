"""Curve reconstruction from points with unoriented tangents.

Samples are float arrays of shape (N, 4) with columns x, y, tx, ty. Graphs
are int arrays of shape (E, 2) with sorted rows (i < j).
"""

import json

from ._tancurve import (
    FormatError,
    InvalidInput,
    ValidationError,
    candidate_graph,
    in_allowed_region,
    in_forbidden_zone,
    parse_samples,
    proximity_baseline,
    render_svg,
)
from . import _tancurve

__all__ = [
    "FormatError",
    "InvalidInput",
    "ValidationError",
    "candidate_graph",
    "generate_figure",
    "in_allowed_region",
    "in_forbidden_zone",
    "parse_samples",
    "proximity_baseline",
    "reconstruct",
    "render_svg",
    "validate",
]


def reconstruct(samples, kappa_max, epsilon, **kwargs):
    """Run a reconstruction; returns (edges, report dict).

    Keyword arguments: mode ("noise_free", "noisy", "denoise"), zeta, xi,
    alpha, sweeps, closed, strict, delta, pair_source, rho_max, tol.
    """
    edges, report = _tancurve.reconstruct(samples, kappa_max, epsilon, **kwargs)
    return edges, json.loads(report)


def validate(kappa_max, epsilon, **kwargs):
    """List of condition checks, each a dict with lhs, rhs and holds."""
    return json.loads(_tancurve.validate(kappa_max, epsilon, **kwargs))


def generate_figure(config):
    """Build a synthetic figure from a config dict (same layout as the CLI's
    --spec files). Returns (samples, truth_edges, document dict)."""
    samples, truth, doc = _tancurve.generate_figure(json.dumps(config))
    return samples, truth, json.loads(doc)
