# Visualization functions
import networkx as nx
import pandas as pd
import plotly.express as px
import plotly.graph_objects as go
from pathlib import Path
from typing import Optional, Sequence

from src.config import ROLE_COLORS
from src.graph import Graph
from src.impropriety import IntervalModel, side_components


def nesting_depths(m: IntervalModel) -> list:
    # Row of each interval: how many intervals strictly contain it
    return [sum(1 for z in range(m.n) if z != v and m.contains(z, v)) for v in range(m.n)]


def _roles(m: IntervalModel, g: Optional[Graph], center: Optional[int]) -> list:
    roles = ["other"] * m.n
    if g is None or center is None:
        return roles
    layout = side_components(m, g, center)
    for key in ("side", "inner"):
        for comp in layout[key]:
            for v in comp:
                roles[v] = key
    roles[center] = "center"
    return roles


def create_interval_diagram(m: IntervalModel, g: Optional[Graph] = None, center: Optional[int] = None,
                            labels: Optional[Sequence[str]] = None, title: str = "Interval model") -> go.Figure:
    """One horizontal segment per vertex at its event positions, rows by nesting depth.

    With g and center, segments are coloured by their role at the centre
    (side or inner component).
    """
    depths = nesting_depths(m)
    roles = _roles(m, g, center)
    names = [str(v) if labels is None else labels[v] for v in range(m.n)]
    # vertices sharing a depth are stacked inside their row so overlaps stay visible
    offsets = {}
    rows = []
    for v in sorted(range(m.n), key=lambda v: (depths[v], m.left[v])):
        slot = offsets.get(depths[v], 0)
        offsets[depths[v]] = slot + 1
        rows.append((v, depths[v] + 0.25 * (slot % 3)))

    fig = go.Figure()
    shown = set()
    for v, y in rows:
        role = roles[v]
        fig.add_trace(go.Scatter(
            x=[m.left[v], m.right[v]],
            y=[y, y],
            mode="lines+markers+text",
            line=dict(color=ROLE_COLORS[role], width=6),
            marker=dict(size=8),
            text=[names[v], ""],
            textposition="top center",
            name=role,
            legendgroup=role,
            showlegend=role not in shown,
            hovertemplate=f"vertex {names[v]} ({role})<extra></extra>",
        ))
        shown.add(role)

    fig.update_layout(
        title=title,
        height=max(250, 60 * (max(depths, default=0) + 2)),
        xaxis_title="Endpoint event position",
        yaxis_title="Nesting depth",
        yaxis=dict(autorange="reversed"),
    )
    return fig


def create_graph_figure(g: Graph, highlight: Sequence[int] = (), title: str = "Graph") -> go.Figure:
    # Spring layout drawing; highlighted vertices use the centre colour
    G = g.to_networkx()
    pos = nx.spring_layout(G, seed=0)
    edge_x, edge_y = [], []
    for u, v in G.edges():
        edge_x += [pos[u][0], pos[v][0], None]
        edge_y += [pos[u][1], pos[v][1], None]
    marked = set(highlight)
    fig = go.Figure()
    fig.add_trace(go.Scatter(x=edge_x, y=edge_y, mode="lines", line=dict(color=ROLE_COLORS["other"], width=2),
                             hoverinfo="skip", showlegend=False))
    fig.add_trace(go.Scatter(
        x=[pos[v][0] for v in G.nodes()],
        y=[pos[v][1] for v in G.nodes()],
        mode="markers+text",
        text=[str(v) for v in G.nodes()],
        textposition="middle center",
        marker=dict(size=26, color=[ROLE_COLORS["center"] if v in marked else ROLE_COLORS["inner"]
                                    for v in G.nodes()]),
        textfont=dict(color="white"),
        showlegend=False,
    ))
    fig.update_layout(title=title, height=400, xaxis=dict(visible=False), yaxis=dict(visible=False))
    return fig


def create_theorem_summary_chart(df: pd.DataFrame) -> Optional[go.Figure]:
    # Stacked pass/fail/vacuous counts per theorem
    if df is None or len(df) == 0:
        return None
    long = df.melt(id_vars="theorem", var_name="status", value_name="graphs")
    fig = px.bar(
        long,
        x="graphs",
        y="theorem",
        color="status",
        orientation="h",
        title="Theorem checks",
        color_discrete_map={"pass": "#2ca02c", "fail": "#d62728", "vacuous": ROLE_COLORS["other"]},
    )
    fig.update_layout(height=400, xaxis_title="Number of graphs", yaxis_title="Theorem")
    return fig


def create_mfisg_chart(df: pd.DataFrame) -> Optional[go.Figure]:
    # MFISG counts by order, split by classification
    if df is None or len(df) == 0 or "classification" not in df.columns:
        return None
    counts = df.groupby(["n", "classification"]).size().reset_index(name="count")
    fig = px.bar(counts, x="n", y="count", color="classification", title="MFISGs by order",
                 labels={"n": "Vertices", "count": "MFISGs"})
    fig.update_layout(height=400)
    return fig


def write_svg(fig: go.Figure, path) -> Path:
    # Static export goes through kaleido
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.write_image(str(path), format="svg")
    return path
