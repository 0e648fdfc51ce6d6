# ImpLab - interactive explorer for p-improper interval graphs
import streamlit as st
import sys
from pathlib import Path
import pandas as pd

# Import path setup
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.agents.classification_agent import ClassificationAgent
from src.agents.mfisg_agent import MfisgAgent
from src.agents.bal_agent import BalAgent
from src.agents.theorem_agent import TheoremAgent
from src.bal import BalSpec, find_instability
from src.balance import balance_report
from src.codec import parse_graph
from src.enumeration import load_illustrations
from src.errors import ImpLabError
from src.impropriety import IntervalModel, ascii_diagram
from src.utils import save_results
from src.visualize import (
    create_graph_figure, create_interval_diagram, create_mfisg_chart, create_theorem_summary_chart,
)
from src import config

# Page setup
st.set_page_config(page_title="ImpLab", page_icon="📏", layout="wide", initial_sidebar_state="expanded")

st.markdown("""
<style>
    .hero-section {
        text-align: center;
        padding: 2.5em 2em 2em 2em;
        background: linear-gradient(135deg, #667eea 0%, #764ba2 100%);
        border-radius: 12px;
        margin-bottom: 2em;
        color: white;
        box-shadow: 0 4px 6px rgba(0, 0, 0, 0.1);
    }
    .hero-title {
        font-size: 3em;
        font-weight: bold;
        margin-bottom: 0.3em;
    }
    .hero-subtitle {
        font-size: 1.2em;
        opacity: 0.95;
    }
</style>
""", unsafe_allow_html=True)

# Session state initialization
for key in ("classify_df", "classify_records", "mfisg_df", "mfisg_comparison", "theorem_df", "theorem_failures",
            "bal_result"):
    if key not in st.session_state:
        st.session_state[key] = None
if 'config_values' not in st.session_state:
    st.session_state.config_values = {}

# Sidebar - configuration
with st.sidebar:
    st.markdown("### 📏 ImpLab")
    st.markdown("---")
    st.markdown("### 🧩 Configuration")

    saved = st.session_state.config_values
    p_value = st.number_input("p (impropriety bound)", 0, 5, saved.get('p', 1))
    max_n = st.slider("Max vertices", 1, config.MAX_ENUM_N, saved.get('max_n', 6))
    jobs = st.slider("Worker processes", 1, 8, saved.get('jobs', config.DEFAULT_JOBS))
    guard_override = st.checkbox(
        "Lift size guards",
        value=saved.get('guard_override', False),
        help="Allow orders beyond the desk-scale guards (slow)"
    )

    st.session_state.config_values = {
        'p': int(p_value),
        'max_n': max_n,
        'jobs': jobs,
        'guard_override': guard_override,
    }

    st.markdown("---")
    st.markdown("### ℹ️ About")
    st.caption("""
    Exact impropriety, weight, balance and criticality of interval graphs,
    BAL_k constructions and minimal forbidden interval subgraphs.
    """)

# Hero Section
st.markdown("""
<div class="hero-section">
    <div class="hero-title">📏 ImpLab</div>
    <div class="hero-subtitle">Exact analysis of p-improper interval graphs</div>
</div>
""", unsafe_allow_html=True)

cfg = st.session_state.config_values
enum_guard = None if cfg['guard_override'] else config.MAX_ENUM_N
bal_guard = None if cfg['guard_override'] else config.BAL_VERIFY_MAX_ORDER


def status_box(title: str):
    # Text area fed by an agent's status callback, last five messages shown
    box = st.empty()
    messages = []

    def callback(msg):
        messages.append(msg)
        box.text_area(title, "\n".join(messages[-5:]), height=100, disabled=True, label_visibility="collapsed")
    return callback


def export_buttons(df: pd.DataFrame, stem: str):
    export_col1, export_col2 = st.columns(2)
    with export_col1:
        st.download_button(
            label="💾 Export as CSV",
            data=df.to_csv(index=False).encode('utf-8'),
            file_name=f"implab_{stem}.csv",
            mime="text/csv",
            width='stretch'
        )
    with export_col2:
        st.download_button(
            label="📦 Export as JSON",
            data=df.to_json(orient='records', indent=2),
            file_name=f"implab_{stem}.json",
            mime="application/json",
            width='stretch'
        )


tab_classify, tab_mfisg, tab_bal, tab_theorems = st.tabs(["🔬 Classify", "🚫 MFISG", "🏗️ BAL", "📐 Theorems"])

# Classify Tab
with tab_classify:
    st.header("🔬 Classify graphs")
    graphs_text = st.text_area(
        "One graph per line (K1,3, P5, C5, S2,2,2, graph6, or an adjacency list like 0-1;1-2 with ';' for commas)",
        value="K1,4\nC5\nS2,2,2\n0-1;1-2;2-3;3-4;2-5;2-6;5-6",
        height=140,
    )
    if st.button("🚀 Classify", type="primary", width='stretch'):
        agent = ClassificationAgent()
        agent.set_status_callback(status_box("ClassificationAgent"))
        graphs = []
        for line in graphs_text.splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append((line, parse_graph(line.replace(";", ","))))
            except ImpLabError as e:
                st.warning(f"⚠️ {line}: {e}")
        st.session_state.classify_df = agent.classify_all(graphs)
        st.session_state.classify_records = agent.records

    if st.session_state.classify_df is not None and len(st.session_state.classify_df):
        df = st.session_state.classify_df
        st.dataframe(df, width='stretch', height=300)

        records = st.session_state.classify_records or {}
        chosen = st.selectbox("Inspect", list(records.keys()))
        if chosen:
            record = records[chosen]
            g = parse_graph(chosen.replace(";", ","))
            if record["interval"]:
                model = IntervalModel.from_dict(record["model"])
                center = record["basepoints"][0] if record.get("basepoints") else None
                st.plotly_chart(create_interval_diagram(model, g, center, title=f"imp {record['imp']}, wt {record['wt']}"),
                                width='stretch')
                st.code(ascii_diagram(model))
            else:
                st.plotly_chart(create_graph_figure(g, record["witness"]["vertices"],
                                                    title=record["witness"]["kind"]), width='stretch')
            with st.expander("Full record"):
                st.json(record)

        st.subheader("💾 Export Data")
        export_buttons(df, "classification")

    with st.expander("📚 Balance and criticality examples"):
        reports = {name: (model, expected, balance_report(model.intersection_graph()))
                   for name, model, expected in load_illustrations()}
        st.dataframe(pd.DataFrame([
            {"example": name, "imp": report.imp, "wt": report.wt, "balanced": report.balanced,
             "critical": report.critical, "expected imp": expected["imp"], "expected wt": expected["wt"]}
            for name, (_, expected, report) in reports.items()
        ]), width='stretch')
        example = st.selectbox("Diagram", list(reports))
        if example:
            model, _, report = reports[example]
            center = min(report.basepoints) if report.basepoints else None
            st.plotly_chart(create_interval_diagram(model, model.intersection_graph(), center, title=example),
                            width='stretch')

# MFISG Tab
with tab_mfisg:
    st.header("🚫 Minimal forbidden interval subgraphs")
    compare = st.checkbox("Compare with the p=1 fixture set", value=cfg['p'] == 1)
    if st.button("🔎 Search MFISGs", type="primary", width='stretch'):
        agent = MfisgAgent(cfg['p'], cfg['max_n'], jobs=cfg['jobs'], guard=enum_guard)
        agent.set_status_callback(status_box("MfisgAgent"))
        try:
            st.session_state.mfisg_df = agent.run(fixtures="p1-mfisgs" if compare else None)
            st.session_state.mfisg_comparison = agent.comparison
        except ImpLabError as e:
            st.error(f"❌ {e}")

    if st.session_state.mfisg_df is not None:
        df = st.session_state.mfisg_df
        comparison = st.session_state.mfisg_comparison
        if comparison:
            msg = f"{len(comparison['matched'])}/{comparison['total']} fixture graphs matched"
            (st.success if comparison['ok'] else st.warning)(msg)
        st.dataframe(df, width='stretch')
        chart = create_mfisg_chart(df)
        if chart:
            st.plotly_chart(chart, width='stretch')
        if len(df):
            export_buttons(df, f"mfisg_p{cfg['p']}")

# BAL Tab
with tab_bal:
    st.header("🏗️ BAL_k graphs")
    col1, col2 = st.columns(2)
    with col1:
        k = st.selectbox("k (pendant P_3's)", [0, 1, 2], index=2)
    with col2:
        parts = st.text_input("Parts", value="K2")

    build_col, verify_col, unstable_col = st.columns(3)
    agent = BalAgent(guard=bal_guard)
    agent.set_status_callback(status_box("BalAgent"))
    try:
        if build_col.button("🏗️ Build", width='stretch'):
            spec = BalSpec.from_text(k, parts)
            g, z = agent.build(spec)
            st.session_state.bal_result = {"spec": spec.describe(), "graph": g, "center": z}
        if verify_col.button("🔬 Verify", width='stretch'):
            result = agent.verify(BalSpec.from_text(k, parts))
            (st.success if result.passed else st.error)(result.message)
        if unstable_col.button("📉 Instability example", width='stretch'):
            found = find_instability()
            if found:
                st.json(found)
            else:
                st.info("No instability example in range")
    except ImpLabError as e:
        st.error(f"❌ {e}")

    if st.session_state.bal_result:
        res = st.session_state.bal_result
        st.plotly_chart(create_graph_figure(res["graph"], [res["center"]], title=res["spec"]), width='stretch')

# Theorems Tab
with tab_theorems:
    st.header("📐 Structure theorems")
    forward = st.number_input("Random BAL specs for the forward check", 0, 500, 0)
    if st.button("▶️ Verify theorems", type="primary", width='stretch'):
        agent = TheoremAgent(cfg['max_n'], jobs=cfg['jobs'], guard=enum_guard)
        agent.set_status_callback(status_box("TheoremAgent"))
        try:
            st.session_state.theorem_df = agent.run(forward_samples=int(forward))
            st.session_state.theorem_failures = agent.failures()
            save_results(st.session_state.theorem_df.to_dict(orient='records'), f"theorems_n{cfg['max_n']}")
        except ImpLabError as e:
            st.error(f"❌ {e}")

    if st.session_state.theorem_df is not None:
        df = st.session_state.theorem_df
        st.dataframe(df, width='stretch')
        chart = create_theorem_summary_chart(df)
        if chart:
            st.plotly_chart(chart, width='stretch')
        failures = st.session_state.theorem_failures
        if failures is not None and len(failures):
            st.error(f"❌ {len(failures)} failing checks")
            st.dataframe(failures, width='stretch')
        export_buttons(df, f"theorems_n{cfg['max_n']}")

# Footer
st.markdown("---")
st.markdown(
    "<div style='text-align: center; color: #666; padding: 1em;'>"
    "📏 ImpLab – exact interval graph impropriety"
    "</div>",
    unsafe_allow_html=True
)
