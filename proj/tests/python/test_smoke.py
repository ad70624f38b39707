import math

import pytest

import parres


def test_legendre():
    assert parres.legendre_p(2, 1.0) == pytest.approx(1.0)
    assert parres.legendre_p(3, 0.0) == pytest.approx(0.0)
    assert parres.legendre_p(4, 0.3) == pytest.approx(0.0729375, abs=1e-12)
    with pytest.raises(ValueError):
        parres.legendre_p(2, 1.5)


def test_kernel_geometry():
    assert parres.mutual_distance(3.0, 4.0, math.pi / 2) == pytest.approx(5.0)
    orbit = parres.ProbeOrbit(1.0, 0.5)
    assert parres.mean_radius(orbit) == pytest.approx(math.sqrt(0.75))


def test_zone_family():
    for n, expected in [(3, 3.0), (4, 2.0), (5, 5.0 / 3.0), (6, 1.5)]:
        assert parres.zone_center(n, 0.0) == pytest.approx(expected)
    cfg = parres.SystemConfig.physical(1.0, 1.0, 1e-3, 5.2025)
    assert parres.center_semimajor_axis(cfg, 3.0) == pytest.approx(2.501120, abs=1e-4)


def test_critical_order():
    cfg = parres.SystemConfig.normalized(0.1)
    assert parres.critical_order(cfg, 0.1) == 21


def test_variational_propagation():
    coeffs = parres.HillCoefficients.single_harmonic(4.0, 1, 0.0, 1.0)
    out = parres.propagate_variation(coeffs, parres.VariationalState(1.0), math.pi, 1e-11)
    assert out.x == pytest.approx(math.cos(2.0 * math.pi), abs=1e-9)


def test_monodromy_mathieu():
    coeffs = parres.HillCoefficients.single_harmonic(1.0, 1, 0.05, 2.0)
    res = parres.monodromy(coeffs, 2.0 * math.pi / 2.0, 1e-10)
    assert res.unstable
    off = parres.HillCoefficients.single_harmonic(1.0, 1, 0.05, 3.5)
    res_off = parres.monodromy(off, 2.0 * math.pi / 3.5, 1e-10)
    assert not res_off.unstable
    assert abs(res.det - 1.0) < 1e-8


def test_hill_pipeline():
    cfg = parres.SystemConfig.normalized(1e-3)
    orbit = parres.ProbeOrbit(parres.ratio_to_semimajor_axis(cfg, 3.0))
    coeffs = parres.build_hill_coefficients(cfg, orbit)
    assert coeffs.omega0_sq > 0
    assert len(coeffs.b) == len(coeffs.h) == 17
    assert coeffs.h[3] == pytest.approx(cfg.mass_ratio() * orbit.a**3 * coeffs.b[3], rel=1e-12)


def test_tongue_measurement():
    h = 0.02

    def family(x):
        return parres.HillCoefficients.single_harmonic(1.0, 1, h, x)

    edges = parres.tongue_boundaries(family, 1, 2.0 - 5 * h, 2.0 + 5 * h, 1e-10)
    assert edges.lo < 2.0 < edges.hi
    assert edges.width() == pytest.approx(h, rel=0.05)


def test_rtbp_two_body_limit():
    cfg = parres.SystemConfig.normalized(0.0)
    orbit = parres.ProbeOrbit(0.5, 0.2)
    start = parres.pericenter_start(cfg, orbit)
    period = 2.0 * math.pi * 0.5**1.5
    report = parres.integrate(cfg, start, period, 1e-12, 8)
    assert report.samples[-1].e_osc == pytest.approx(0.2, abs=1e-9)
    assert report.samples[-1].a_osc == pytest.approx(0.5, abs=1e-9)
