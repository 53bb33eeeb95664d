"""Chart rendering must be byte-deterministic SVG."""

from tatecalc.charts import render_page, save_page_svg
from tatecalc.spectral import build_e2


def _render_bytes(tmp_path, name, page):
    path = tmp_path / name
    save_page_svg(page, path)
    return path.read_bytes()


def test_svg_is_byte_deterministic(tmp_path):
    page = build_e2((2, 3), "full", 6)
    a = _render_bytes(tmp_path, "a.svg", page)
    b = _render_bytes(tmp_path, "b.svg", page)
    assert a == b


def test_svg_structure(tmp_path):
    page = build_e2((1, 2), "full", 4)
    data = _render_bytes(tmp_path, "c.svg", page).decode("utf-8")
    assert data.startswith('<?xml version="1.0"')
    assert "SVG 1.1" in data
    assert 'id="e2-classes"' in data
    # the creation timestamp is suppressed, otherwise runs would differ
    assert "<dc:date>" not in data


def test_figure_title_names_the_page():
    page = build_e2((2, 3), "flag", 5)
    fig = render_page(page)
    try:
        title = fig.axes[0].get_title()
        assert "(2, 3)" in title and "flag" in title and "5" in title
    finally:
        import matplotlib.pyplot as plt

        plt.close(fig)


def test_empty_cells_render(tmp_path):
    # a degenerate page with no positive-weight classes still renders
    page = build_e2((1, 2), "full", 0)
    data = _render_bytes(tmp_path, "d.svg", page)
    assert data.startswith(b"<?xml")
