import pandas as pd
import plotly.graph_objects as go

from src.config import ROLE_COLORS
from src.graph import star_graph
from src.impropriety import impropriety
from src.visualize import (
    create_graph_figure, create_interval_diagram, create_mfisg_chart, create_theorem_summary_chart, nesting_depths,
)


def test_nesting_depths_of_claw():
    m = impropriety(star_graph(3)).witness_model
    assert sorted(nesting_depths(m)) == [0, 0, 0, 1]
    assert nesting_depths(m)[0] == 0


def test_interval_diagram_colours_roles():
    g = star_graph(3)
    fig = create_interval_diagram(impropriety(g).witness_model, g, 0, title="claw")
    assert isinstance(fig, go.Figure)
    assert len(fig.data) == 4
    colours = {trace.name: trace.line.color for trace in fig.data}
    assert colours["center"] == ROLE_COLORS["center"]
    assert colours["side"] == ROLE_COLORS["side"]
    assert colours["inner"] == ROLE_COLORS["inner"]


def test_interval_diagram_without_centre():
    fig = create_interval_diagram(impropriety(star_graph(4)).witness_model)
    assert {trace.name for trace in fig.data} == {"other"}


def test_graph_figure_highlights():
    fig = create_graph_figure(star_graph(3), highlight=[0])
    nodes = fig.data[1]
    assert len(nodes.x) == 4
    assert nodes.marker.color[0] == ROLE_COLORS["center"]


def test_theorem_summary_chart():
    df = pd.DataFrame([{"theorem": "weight-bound", "pass": 5, "fail": 0, "vacuous": 1}])
    assert isinstance(create_theorem_summary_chart(df), go.Figure)
    assert create_theorem_summary_chart(df.iloc[0:0]) is None


def test_mfisg_chart():
    df = pd.DataFrame([{"n": 5, "classification": "balanced"}, {"n": 7, "classification": "skew"}])
    assert isinstance(create_mfisg_chart(df), go.Figure)
    assert create_mfisg_chart(pd.DataFrame()) is None
