import math

import numpy as np
import pytest

import tancurve


def circle_samples(n, r=1.0):
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return np.column_stack([r * np.cos(t), r * np.sin(t), -np.sin(t), np.cos(t)])


def test_forbidden_zone_two_balls():
    # Unit curvature: centers of the two balls are at (0, 1) and (0, -1).
    assert tancurve.in_forbidden_zone((0.0, 0.5), (0.0, 0.0), (1.0, 0.0), 1.0)
    assert tancurve.in_forbidden_zone((0.0, -1.9), (0.0, 0.0), (1.0, 0.0), 1.0)
    assert not tancurve.in_forbidden_zone((0.5, 0.0), (0.0, 0.0), (1.0, 0.0), 1.0)
    assert not tancurve.in_forbidden_zone((3.0, 0.0), (0.0, 0.0), (-1.0, 0.0), 1.0)


def test_allowed_region_radius():
    assert tancurve.in_allowed_region((0.1, 0.0), (0.0, 0.0), (1.0, 0.0), 1.0, 0.2)
    assert not tancurve.in_allowed_region((0.3, 0.0), (0.0, 0.0), (1.0, 0.0), 1.0, 0.2)


def test_circle_reconstructs_to_cycle():
    s = circle_samples(40)
    edges, report = tancurve.reconstruct(s, 1.0, 0.2)
    expected = {tuple(sorted((i, (i + 1) % 40))) for i in range(40)}
    assert {tuple(e) for e in edges.tolist()} == expected
    assert report["graph"]["edges"] == 40
    cand = tancurve.candidate_graph(s, 1.0, 0.2)
    assert expected <= {tuple(e) for e in cand.tolist()}
    brute = tancurve.candidate_graph(s, 1.0, 0.2, pair_source="brute")
    assert np.array_equal(cand, brute)


def test_denoise_mode_matches_on_clean_input():
    s = circle_samples(30)
    a, _ = tancurve.reconstruct(s, 1.0, 0.25)
    b, _ = tancurve.reconstruct(s, 1.0, 0.25, mode="denoise", alpha=1.0, sweeps=0)
    assert np.array_equal(a, b)


def test_validation():
    checks = tancurve.validate(3.0, 0.065, delta=0.015)
    sep = checks[1]
    assert sep["inequality"] == "delta > 2 kappa_m epsilon^2"
    assert sep["rhs"] == pytest.approx(0.02535)
    assert not sep["holds"]
    with pytest.raises(tancurve.ValidationError):
        tancurve.reconstruct(circle_samples(40), 3.0, 0.065, strict=True, delta=0.015)


def test_bad_input():
    with pytest.raises(ValueError):
        tancurve.reconstruct(np.zeros((3, 3)), 1.0, 0.1)
    with pytest.raises(ValueError):
        tancurve.reconstruct(np.array([[0.0, 0.0, 0.0, 0.0]]), 1.0, 0.1)
    with pytest.raises(tancurve.FormatError):
        tancurve.parse_samples("1,2,3\n")


def test_generate_and_render():
    config = {
        "curves": [{"type": "circle", "center": [0, 0], "radius": 1.0}],
        "kappa_max": 1.0,
        "epsilon": 0.2,
        "seed": 4,
    }
    samples, truth, doc = tancurve.generate_figure(config)
    assert samples.shape[1] == 4
    assert len(truth) == len(samples)
    assert len(doc["samples"]) == len(samples)
    edges, report = tancurve.reconstruct(samples, 1.0, 0.2)
    assert np.array_equal(edges, truth)
    svg = tancurve.render_svg(samples, edges, tangent_ticks=0.01)
    assert svg.startswith("<svg") and svg.count("<line") >= len(edges)
    baseline = tancurve.proximity_baseline(samples)
    assert len(baseline) > 0


def test_parse_samples():
    s = tancurve.parse_samples("x,y,tx,ty\n0,0,2,0\n1,1,0,1\n")
    assert s.shape == (2, 4)
    assert s[0, 2] == 1.0
