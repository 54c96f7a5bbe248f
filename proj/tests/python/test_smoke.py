"""Smoke tests for the pybind11 module: every main operation is callable
from Python and the pipeline pieces compose on a small dataset."""

import math

import numpy as np
import pytest

import modecluster as mc


@pytest.fixture(scope="module")
def blobs():
    rng = np.random.default_rng(7)
    a = rng.normal(loc=-2.0, scale=0.3, size=(60, 2))
    b = rng.normal(loc=2.0, scale=0.3, size=(60, 2))
    return np.vstack([a, b])


def test_version():
    assert mc.__version__


def test_parameter_rules():
    assert mc.normal_reference_h(572, 8, 1.0) == pytest.approx(0.587, abs=0.002)
    assert mc.denoise_threshold(1400, 10) == pytest.approx(49.05, abs=0.01)
    assert mc.default_omega0(4) == pytest.approx(0.125)


def test_density_and_gradient(blobs):
    model = mc.DensityModel(blobs, 0.5)
    x = np.array([0.0, 0.0])
    assert model.density(x) >= 0.0
    g = model.gradient(x)
    eps = 1e-5
    for j in range(2):
        hi, lo = x.copy(), x.copy()
        hi[j] += eps
        lo[j] -= eps
        fd = (model.density(hi) - model.density(lo)) / (2 * eps)
        assert g[j] == pytest.approx(fd, abs=1e-6)
    with pytest.raises(ValueError):
        model.density(np.array([math.nan, 0.0]))


def test_cluster_soft_connect_layout(blobs):
    model = mc.DensityModel(blobs, 0.5)
    modes, assign = mc.cluster(model)
    assert modes.count == 2
    assert sorted(assign.sizes) == [60, 60]

    soft = mc.soft_assign(model, modes)
    a = np.asarray(soft.a)
    assert a.shape == (120, 2)
    assert np.allclose(a.sum(axis=1), 1.0, atol=1e-8)

    cm = mc.connectivity_matrix(soft, assign)
    omega = np.asarray(cm.omega)
    assert omega.shape == (2, 2)
    assert omega[0, 1] == omega[1, 0]
    edges = mc.edge_set(cm, 0.4)
    assert isinstance(edges, list)

    layout = mc.two_stage_layout(modes, assign, blobs, cm, 2.0)
    assert np.asarray(layout.point_xy).shape == (120, 2)
    assert np.isfinite(np.asarray(layout.mode_xy)).all()


def test_denoise_merges_tiny_clusters():
    dm = mc.gen_four_gaussian_8d(1)
    x = np.asarray(dm.x)
    h = mc.normal_reference_h(dm.n, dm.d, float(np.mean(dm.col_sd)))
    model = mc.DensityModel(x, h)
    modes, assign = mc.cluster(model)
    assert modes.count > 4
    n0 = mc.denoise_threshold(dm.n, dm.d)
    dmodes, dassign = mc.denoise(model, modes, assign, n0)
    assert dmodes.count == 4
    assert sum(dassign.sizes) == dm.n


def test_mds_two_points():
    pts = np.array([[0.0, 0.0, 0.0], [3.0, 4.0, 0.0]])
    z = np.asarray(mc.classical_mds(pts, 2))
    assert np.linalg.norm(z[0] - z[1]) == pytest.approx(5.0, abs=1e-8)


def test_evaluation():
    assert mc.adjusted_rand([0, 0, 1, 1], [2, 2, 3, 3]) == 1.0
    assert mc.adjusted_rand([1, 1, 2, 2], [1, 2, 1, 2]) == pytest.approx(-0.5)
    table = mc.confusion(["a", "a", "b"], [0, 0, 1])
    assert np.asarray(table.counts).tolist() == [[2, 0], [0, 1]]


def test_standardize_and_csv(tmp_path):
    rng = np.random.default_rng(3)
    x = rng.normal(5.0, 2.0, size=(50, 3))
    dm = mc.make_data_matrix(x, [])
    z = mc.standardize(dm)
    zx = np.asarray(z.x)
    assert np.allclose(zx.mean(axis=0), 0.0, atol=1e-10)
    assert np.allclose(zx.std(axis=0, ddof=1), 1.0, atol=1e-10)

    path = tmp_path / "data.csv"
    with open(path, "w") as fh:
        fh.write("u,v,class\n")
        for i in range(20):
            fh.write(f"{i * 0.1},{(i % 5) + i * 0.01},c{i % 2}\n")
    loaded = mc.load_csv(str(path), "class")
    assert loaded.n == 20
    assert loaded.d == 2
    assert loaded.labels[0] == "c0"
    with pytest.raises(OSError):
        mc.load_csv(str(tmp_path / "missing.csv"))


def test_run_pipeline(tmp_path):
    dm = mc.gen_four_gaussian_8d(2)
    x = np.asarray(dm.x)
    path = tmp_path / "four.csv"
    cols = [f"x{j + 1}" for j in range(x.shape[1])]
    with open(path, "w") as fh:
        fh.write(",".join(cols + ["label"]) + "\n")
        for i in range(x.shape[0]):
            fh.write(",".join(repr(float(v)) for v in x[i]) + f",{dm.labels[i]}\n")

    out = mc.run_pipeline(
        str(path), label_column="label", standardize=False, out_dir=str(tmp_path / "out")
    )
    assert out["k_post"] == 4
    assert (tmp_path / "out" / "manifest.json").exists()
    assert (tmp_path / "out" / "layout.svg").exists()
    assert len(out["labels"]) == 800
