import pytest

from src import config
from src.agents.bal_agent import BalAgent
from src.agents.classification_agent import ClassificationAgent
from src.agents.mfisg_agent import MfisgAgent
from src.agents.theorem_agent import BAL_FORWARD, BAL_REVERSE, TheoremAgent, check_bal_reverse, check_graph
from src.bal import BalRejection, BalSpec
from src.errors import GuardExceededError
from src.graph import complete_graph, cycle_graph, disjoint_union, path_graph, star_graph
from tests.strategies import p1_mfisg_graphs


@pytest.fixture
def messages():
    return []


def test_classification_agent(messages):
    agent = ClassificationAgent()
    agent.set_status_callback(messages.append)
    df = agent.classify_all([
        ("claw", star_graph(3)),
        ("pentagon", cycle_graph(5)),
        ("forest", disjoint_union([path_graph(2), star_graph(3)])),
    ])
    assert list(df.columns) == ClassificationAgent.COLUMNS
    assert list(df["name"]) == ["claw", "pentagon", "forest"]
    assert list(df["interval"]) == [True, False, True]
    claw = df.set_index("name").loc["claw"]
    assert claw["imp"] == 1 and claw["basepoints"] == "0"
    assert claw["bal_describe"] == "BAL_0([K1,K1,K1])"
    assert set(agent.records) == {"claw", "pentagon", "forest"}
    assert messages[0].startswith("🔬")
    assert "2 interval graphs" in messages[-1]


def test_classification_agent_without_graphs(messages):
    agent = ClassificationAgent()
    agent.set_status_callback(messages.append)
    df = agent.classify_all([])
    assert len(df) == 0
    assert messages == ["⚠️ No graphs to classify"]


def test_mfisg_agent_proper_class(messages):
    agent = MfisgAgent(0, 5)
    agent.set_status_callback(messages.append)
    df = agent.run()
    assert len(df) == 1
    assert df.iloc[0]["n"] == 4
    assert df.iloc[0]["classification"] == config.CLASS_BALANCED
    assert agent.comparison is None
    assert any(m.startswith("🔎 n=5") for m in messages)


def test_mfisg_agent_names_fixture_matches():
    agent = MfisgAgent(1, 5)
    df = agent.run(fixtures="p1-mfisgs")
    assert list(df["name"]) == ["4-Star"]
    assert agent.comparison["matched"] == ["4-Star"]
    assert not agent.comparison["ok"]


def test_mfisg_agent_guard():
    with pytest.raises(GuardExceededError):
        MfisgAgent(1, 9).run()


def test_bal_agent_build_and_check(messages):
    agent = BalAgent()
    agent.set_status_callback(messages.append)
    spec = BalSpec.create(1, [complete_graph(2), complete_graph(2)])
    g, z = agent.build(spec)
    assert g.n == 7 and z == 0
    assert agent.check(g) == spec
    assert isinstance(agent.check(cycle_graph(5)), BalRejection)
    assert messages[-1].startswith("🚫")


def test_bal_agent_verify():
    result = BalAgent().verify(BalSpec.create(0, [complete_graph(3)] * 3))
    assert result.passed
    assert result.theorem == BAL_FORWARD


def test_bal_agent_random_verification():
    df = BalAgent().verify_random(20, 9, seed=7)
    assert len(df) == 20
    assert (df["status"] == config.STATUS_PASS).all()
    assert df["round_trip"].all()
    assert (df["order"] <= 9).all()


def test_bal_reverse_check():
    assert check_bal_reverse(star_graph(3)).status == config.STATUS_PASS
    assert check_bal_reverse(path_graph(3)).status == config.STATUS_VACUOUS
    assert check_bal_reverse(p1_mfisg_graphs()["Balanced-Three"]).message == "BAL_0([K2,K2,K2])"
    assert check_bal_reverse(p1_mfisg_graphs()["Skew-One"]).status == config.STATUS_VACUOUS


def test_check_graph_adds_the_reverse_check():
    results = check_graph(star_graph(3))
    assert len(results) == 8
    assert results[-1].theorem == BAL_REVERSE


def test_theorem_agent(messages):
    agent = TheoremAgent(4)
    agent.set_status_callback(messages.append)
    summary = agent.run()
    assert len(summary) == 8
    assert summary["fail"].sum() == 0
    reverse = summary.set_index("theorem").loc[BAL_REVERSE]
    assert reverse["pass"] >= 1
    assert len(agent.failures()) == 0
    assert messages[-1].startswith("✅")


def test_theorem_agent_forward_samples():
    agent = TheoremAgent(1)
    summary = agent.run(forward_samples=5, forward_max_order=8, seed=3)
    forward = summary.set_index("theorem").loc[BAL_FORWARD]
    assert forward["pass"] == 5


def test_classification_agent_records_errors(monkeypatch):
    def broken(g):
        raise GuardExceededError("test order", 1, g.n)
    monkeypatch.setattr("src.agents.classification_agent.classify", broken)
    agent = ClassificationAgent()
    df = agent.classify_all([("triangle", complete_graph(3))])
    assert "test order" in df.iloc[0]["error"]
    with pytest.raises(GuardExceededError):
        agent.classify_one("triangle", complete_graph(3), strict=True)
