import math
import os

import pytest

import kgbh


def test_hyp2f1_closed_form():
    assert abs(kgbh.hyp2f1(1, 1, 2, 0.5) - 2 * math.log(2)) < 1e-14
    assert abs(kgbh.hyp2f1(0.5, 0.5, 1.5, 0.25) - math.pi / 3) < 1e-14


def test_log_gamma():
    assert abs(kgbh.log_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-14


def test_derive_small_mass():
    d = kgbh.derive(ell=2, m_c=2)
    assert d["regime"] == "SmallMass"
    assert abs(d["k_plus"] - (-1)) < 1e-14
    assert abs(d["k_minus"] - (-4)) < 1e-14
    assert d["M_big"] is None


def test_derive_boundary():
    d = kgbh.derive(ell=2, m_c=2.5)
    assert d["regime"] == "LargeMass"
    assert d["M_big"] == pytest.approx(0.0, abs=1e-15)


def test_geodesic():
    assert kgbh.radial_geodesic(1.0, r_sch=1, r_id=3)["r"] == 3.0
    assert kgbh.min_clearance(r_sch=1, r_id=3) == pytest.approx(1.3748225281836234, rel=1e-12)


def test_kernel_identity():
    m = math.sqrt(29) / 2
    q = kgbh.derive(m_c=m)["q"]
    for r, t in [(0.1, 2.0), (0.3, 5.0)]:
        k2 = kgbh.kernel("K2", r, t, m_c=m)
        rhs = kgbh.kernel("K0", r, t, m_c=m) + 2 * q * kgbh.kernel("K1", r, t, m_c=m)
        assert abs(k2 - rhs) <= 1e-9 * abs(k2)


def test_power_integral():
    quad, closed = kgbh.power_integral(10.0, 0.5 + 1j)
    assert abs(quad - closed) <= 1e-8 * abs(closed)


def test_admissible_gamma_and_errors():
    g = kgbh.admissible_gamma(3.0, 2.0, m_c=math.sqrt(29) / 2)
    assert g["lower"] == pytest.approx(9 / 8)
    assert g["case"] == "a"
    with pytest.raises(kgbh.KgbhError) as e:
        kgbh.admissible_gamma(2.0, 0.0, m_c=2)
    assert e.value.code == "EmptyRange"


def test_decay_fit():
    t = [10 ** (2 * i / 39) for i in range(40)]
    r = kgbh.decay_fit(t, [x ** -2 for x in t])
    assert r["gamma_fit"] == pytest.approx(2.0, abs=1e-10)
    assert not r["log_flag"]


def test_run_suite(tmp_path):
    cfg = {"suite": "geodesic_table", "r_sch": "1", "r_id": "3", "out_dir": str(tmp_path)}
    r = kgbh.run_suite(cfg)
    assert r["pass"]
    assert all(os.path.exists(a) for a in r["artifacts"])
    with open(tmp_path / "geodesic_table.csv") as f:
        assert f.readline().strip() == "t,r,clearance,residual"
        assert f.readline().startswith("1,3,")


def test_sweep_regime(tmp_path):
    cfg = {"suite": "geodesic_table", "out_dir": str(tmp_path)}
    rs = kgbh.sweep(cfg, "m_c", ["2", "2.5", "3"], jobs=2)
    assert [r["info"]["regime"] for r in rs] == ["SmallMass", "LargeMass", "LargeMass"]


def test_config_error(tmp_path):
    with pytest.raises(kgbh.KgbhError) as e:
        kgbh.run_suite({"suite": "geodesic_table", "bogus": "1", "out_dir": str(tmp_path)})
    assert e.value.code == "ConfigError"
