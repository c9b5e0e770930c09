import pytest

import ptmorse.backend as backend
from ptmorse.contour import build_C
from ptmorse.verifier import ProblemSpec, ShootingConfig, find_eigenvalues, mismatch

kernels = {name: backend.load_kernel(name) for name in backend.available_backends()}
needs_compiled = pytest.mark.skipif(
    "compiled" not in kernels, reason="compiled kernel not built"
)


def test_python_kernel_always_available():
    assert "python" in backend.available_backends()


def test_selected_backend_is_loaded():
    assert backend.backend_name in ("compiled", "python")
    assert backend.kernel.BACKEND_NAME == backend.backend_name


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        backend.load_kernel("fortran")


@needs_compiled
@pytest.mark.parametrize(
    "kind,pcoef",
    [(0, 0.0), (0, 1.44), (1, 4.0), (2, 4.0)],
)
def test_kernel_parity_per_piece(kind, pcoef):
    kc = kernels["compiled"]
    kp = kernels["python"]
    args = (kind, 1.0, 1.0, pcoef, 3.0 + 0.0j, -1.2, 0.0, 1.0 + 0.0j, 0.5 - 0.2j, 1e-10)
    sc, v1c, v2c, lsc, nc = kc.integrate_piece(*args)
    sp, v1p, v2p, lsp, np_ = kp.integrate_piece(*args)
    assert sc == sp == kc.STATUS_OK
    assert v1c == pytest.approx(v1p, rel=1e-9)
    assert v2c == pytest.approx(v2p, rel=1e-9)
    assert lsc == pytest.approx(lsp, abs=1e-9)


@needs_compiled
def test_kernel_parity_reverse_direction():
    kc = kernels["compiled"]
    kp = kernels["python"]
    args = (1, 1.0, 1.0, 5.0, 2.25 + 0.0j, 1.4, 0.0, 1.0 + 0.0j, -0.3 + 1.1j, 1e-10)
    a = kc.integrate_piece(*args)
    b = kp.integrate_piece(*args)
    assert a[0] == b[0] == kc.STATUS_OK
    assert a[1] == pytest.approx(b[1], rel=1e-9)
    assert a[2] == pytest.approx(b[2], rel=1e-9)


@needs_compiled
def test_mismatch_parity(monkeypatch):
    p = ProblemSpec("morse_contour", 1.0, build_C(1.0), D=5.0)
    cfg = ShootingConfig(grid=(0.0, 9.0, 10))
    vals = {}
    for name, kern in kernels.items():
        monkeypatch.setattr(backend, "kernel", kern)
        vals[name] = [mismatch(p, e, cfg) for e in (0.9, 2.25, 4.4)]
    for wc, wp in zip(vals["compiled"], vals["python"]):
        assert wc.real == pytest.approx(wp.real, rel=1e-8, abs=1e-12)


@needs_compiled
def test_eigenvalue_parity(monkeypatch):
    p = ProblemSpec("morse_contour", 1.0, build_C(1.0), D=5.0)
    cfg = ShootingConfig(grid=(0.0, 3.0, 13))
    got = {}
    for name, kern in kernels.items():
        monkeypatch.setattr(backend, "kernel", kern)
        res = find_eigenvalues(p, cfg)
        got[name] = [r.eigenvalue.real for r in res if r.converged]
    assert got["compiled"] == pytest.approx([0.25, 2.25], rel=1e-8)
    assert got["python"] == pytest.approx(got["compiled"], rel=1e-8)
