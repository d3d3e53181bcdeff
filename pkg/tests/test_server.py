import pytest
from fastapi.testclient import TestClient

from galois_rules.exportio import build_workspace
from galois_rules.server import create_app


@pytest.fixture(scope="module")
def client(course_workspace):
    return TestClient(create_app(course_workspace))


@pytest.fixture(scope="module")
def bare_client(course_ctx, half_thresholds):
    # workspace without a taxonomy: hgen must answer 409
    return TestClient(create_app(build_workspace(course_ctx, half_thresholds)))


def find_node(client, motif):
    roots = client.get("/api/mhier/roots").json()
    frontier = [n["id"] for n in roots]
    seen = set()
    while frontier:
        nid = frontier.pop()
        if nid in seen:
            continue
        seen.add(nid)
        node = client.get(f"/api/mhier/node/{nid}").json()
        if node["motif"] == sorted(motif):
            return node
        frontier.extend(c["id"] for c in node["children"])
    raise AssertionError(f"node {motif} not found")


class TestSummary:
    def test_course_counts(self, client):
        data = client.get("/api/summary").json()
        assert data["partial"] == 9
        assert data["total"] == 1
        assert data["concepts"] == 13
        assert data["ensembles"] == 5
        assert data["taxonomy"] is True

    def test_unknown_route_404(self, client):
        assert client.get("/api/nope").status_code == 404


class TestMHierNavigation:
    def test_roots(self, client):
        roots = client.get("/api/mhier/roots").json()
        motifs = {tuple(r["motif"]) for r in roots}
        assert motifs == {("Algorithmique",), ("Probabilité",), ("PeertoPeer",)}

    def test_node_payload_and_children(self, client):
        node = find_node(client, ["Algorithmique"])
        child_motifs = {tuple(c["motif"]) for c in node["children"]}
        assert ("Algorithmique", "Algèbre") in child_motifs
        assert ("Algorithmique", "Probabilité") in child_motifs
        assert node["support"] == "2/3"

    def test_ensemble_rules_with_badges(self, client):
        node = find_node(client, ["Algorithmique", "Algèbre"])
        assert len(node["rules"]) == 4
        badges = {r["label"]: r["status"] for r in node["rules"]}
        assert sum(1 for s in badges.values() if s == "total") == 1

    def test_all_ids_dereferenceable(self, client):
        roots = client.get("/api/mhier/roots").json()
        seen = set()
        frontier = [r["id"] for r in roots]
        while frontier:
            nid = frontier.pop()
            if nid in seen:
                continue
            seen.add(nid)
            resp = client.get(f"/api/mhier/node/{nid}")
            assert resp.status_code == 200
            node = resp.json()
            for rule in node["rules"]:
                assert client.get(f"/api/rule/{rule['id']}").status_code == 200
            frontier.extend(c["id"] for c in node["parents"] + node["children"])

    def test_unknown_node_404(self, client):
        assert client.get("/api/mhier/node/424242").status_code == 404

    def test_responses_deterministic(self, client):
        a = client.get("/api/mhier/roots").content
        b = client.get("/api/mhier/roots").content
        assert a == b


class TestRuleEndpoint:
    def test_rule_payload(self, client):
        rule = client.get("/api/rule/0").json()
        assert set(rule) >= {"id", "label", "premise", "conclusion", "support",
                             "confidence", "status", "informative", "concept"}

    def test_unknown_rule_404(self, client):
        assert client.get("/api/rule/999").status_code == 404


class TestHGen:
    def seed_ids(self, client):
        summary = client.get("/api/summary").json()
        ids = []
        for i in range(summary["rules"]):
            rule = client.get(f"/api/rule/{i}").json()
            if (rule["premise"], rule["conclusion"]) in (
                    (["Algorithmique"], ["Probabilité"]), (["Algorithmique"], ["Algèbre"])):
                ids.append(rule["id"])
        return ids

    def test_walkthrough(self, client):
        ids = self.seed_ids(client)
        assert len(ids) == 2
        resp = client.post("/api/hgen", json={"seed_ids": ids})
        assert resp.status_code == 200
        data = resp.json()
        pairs = {(tuple(n["premise"]), tuple(n["conclusion"])) for n in data["nodes"]}
        assert (("Algorithmique",), ("Mathématique",)) in pairs
        assert (("Informatique",), ("Mathématique",)) in pairs
        # cached: identical on repeat
        assert client.post("/api/hgen", json={"seed_ids": ids}).json() == data

    def test_unknown_seed_404(self, client):
        assert client.post("/api/hgen", json={"seed_ids": [999]}).status_code == 404

    def test_malformed_body_400(self, client):
        assert client.post("/api/hgen", json={"seeds": [0]}).status_code == 400
        assert client.post("/api/hgen", json={"seed_ids": []}).status_code == 400
        assert client.post("/api/hgen", json={"seed_ids": ["x"]}).status_code == 400

    def test_409_without_taxonomy(self, bare_client):
        resp = bare_client.post("/api/hgen", json={"seed_ids": [0]})
        assert resp.status_code == 409


class TestLatticeDot:
    def test_dot_served(self, client):
        resp = client.get("/api/lattice.dot")
        assert resp.status_code == 200
        assert resp.text.startswith("digraph lattice")
