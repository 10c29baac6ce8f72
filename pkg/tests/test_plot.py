import xml.etree.ElementTree as ET

import numpy as np
import pytest

from bmrbwr.plot import plot_csv, render_svg, series_from_traces

NS = "{http://www.w3.org/2000/svg}"


def _traces(spec):
    out = {}
    for rid, values in spec.items():
        n = len(values)
        out[rid] = {"iteration": np.arange(n), "fe_count": 10 * np.arange(1, n + 1),
                    "best_penalized": np.array(values, float),
                    "mean_penalized": np.array(values, float) * 2}
    return out


def test_series_average_runs():
    s = series_from_traces(_traces({"bmr:0": [4, 2, 1], "bmr:1": [2, 2, 1], "bwr:0": [3, 1]}))
    assert list(s) == ["bmr", "bwr"]
    assert np.array_equal(s["bmr"][1], [3, 2, 1])
    assert np.array_equal(s["bwr"][1], [3, 1])


def test_svg_structure():
    svg = render_svg(series_from_traces(_traces({"bmr:0": [4, 2, 1], "bwr:0": [3, 1, 0.5]})),
                     title="sphere")
    root = ET.fromstring(svg)
    assert root.tag == NS + "svg"
    lines = root.findall(f"{NS}polyline")
    assert [p.get("data-series") for p in lines] == ["bmr", "bwr"]
    texts = [t.text for t in root.iter(NS + "text")]
    assert "Iteration" in texts and "bmr" in texts and "bwr" in texts
    assert any(t.startswith("Mean best") for t in texts)


def test_single_point_marker():
    root = ET.fromstring(render_svg(series_from_traces(_traces({"bwr:0": [7.0]}))))
    assert len(root.findall(f"{NS}circle")) == 1
    assert not root.findall(f"{NS}polyline")


def test_log_scale_handles_zero():
    svg = render_svg(series_from_traces(_traces({"bwr:0": [100.0, 1.0, 0.0]})), log_scale=True)
    ET.fromstring(svg)
    assert "(log10)" in svg


def test_log_scale_falls_back_for_negative():
    svg = render_svg(series_from_traces(_traces({"bwr:0": [-1.0, -2.0]})), log_scale=True)
    assert "(log10)" not in svg


def test_deterministic(tmp_path):
    csv = tmp_path / "t.csv"
    csv.write_text("run_id,iteration,fe_count,best_penalized,mean_penalized\n"
                   "bmr:0,0,5,3.5,4\nbmr:0,1,10,2.25,3\nbwr:0,0,5,3.5,4\nbwr:0,1,10,1.5,2\n")
    a = plot_csv(csv, tmp_path / "a.svg").read_bytes()
    b = plot_csv(csv, tmp_path / "b.svg").read_bytes()
    assert a == b and a.count(b"<polyline") == 2


def test_empty_series():
    with pytest.raises(ValueError):
        render_svg({})
