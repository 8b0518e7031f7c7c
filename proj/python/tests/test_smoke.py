import math

import numpy as np
import pytest

import landau_td as lt

STATIC = {"M": 1.0, "omega": 1.0, "E1": 0.0, "E2": 0.0}


def static_profile(**extra):
    return lt.make_profile("constant", {"q": 1.0, "B": 0.0, "kappa": 1.0, "t0": 0.0, "t1": 10.0, **STATIC, **extra})


def test_static_oscillator_energy():
    p = static_profile()
    aux = lt.solve(p, 201)
    assert aux.provenance == "numeric"
    assert aux.max_residual < 1e-8
    f = lt.frame_at(p, aux, 3.0)
    assert lt.hamiltonian_expectation(0, 0, f) == pytest.approx(1.0, rel=1e-10)
    assert lt.invariant_eigenvalue(2, 1, 1.0) == pytest.approx(4.0)


def test_closed_form_aux_satisfies_equation():
    grid = lt.uniform_grid(0.0, 10.0, 400)
    params = {"omega": 1.3, "kappa": 1.0}
    aux = lt.closed_form_aux("pinney_constant", params, grid)
    prof = lt.closed_form_profile("pinney_constant", params)
    assert lt.ep_residual(aux, prof) < 1e-6


def test_wavefunction_vectorizes_and_normalizes():
    p = static_profile()
    f = lt.frame_at(p, lt.solve(p, 101), 0.0)
    r = np.linspace(0.0, 12.0, 4001)
    psi = lt.wavefunction(1, 0, f, r, 0.0)
    assert psi.shape == r.shape
    norm = 2 * math.pi * np.trapezoid(np.abs(psi) ** 2 * r, r)
    assert norm == pytest.approx(1.0, abs=1e-6)


def test_coherent_overlap_and_coefficients():
    a = lt.canonical_state(0.3 + 0.1j, -0.2j, 30)
    assert a.coeffs.shape == (31, 31)
    assert abs(lt.overlap(a, a)) == pytest.approx(1.0, abs=1e-12)
    b = lt.bg_state(0.4, 30, k=1.0)
    assert b.family == "su11_bg"
    assert lt.distribution(b).sum() == pytest.approx(1.0, abs=1e-10)


def test_errors_carry_code():
    with pytest.raises(lt.LandauError) as info:
        lt.make_profile("constant", {"M": 1.0})
    assert info.value.code
    with pytest.raises(lt.LandauError) as info:
        lt.perelomov_state(1.5, 20, k=1.0)
    assert info.value.code == "EtaOutOfDisk"
    assert not info.value.numerical


def test_suite_reports():
    p = static_profile()
    reports = lt.run_suite("algebra", p, lt.solve(p, 101))
    assert reports and all(r["passed"] for r in reports)
    assert {"name", "max_residual", "tolerance", "passed", "details"} <= set(reports[0])


def test_special_functions():
    assert lt.laguerre(2, 0.0, 1.0) == pytest.approx(-0.5)
    # reference values from mpmath.meijerg at 30 digits
    assert lt.meijer_g(2, 1, [0.3, 0.9], [0.2, 0.5], 0.7) == pytest.approx(0.760665329965788039, rel=1e-10)
    assert lt.meijer_g(4, 0, [0.1, 0.4], [0.0, 0.5, 0.25, 0.75], 2.0) == pytest.approx(0.128086768134568778, rel=1e-10)
    with pytest.raises(lt.LandauError):
        lt.meijer_g(1, 0, [], [0.0], 0.7)
