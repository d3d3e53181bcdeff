"""Read-only HTTP/JSON API over a built workspace.

Every response is a pure function of (workspace, request).  The only compute
endpoint, POST /api/hgen, is a pure derivation cached per seed set; the cache
insert is guarded by a lock so concurrent requests agree on the instance.
"""

from __future__ import annotations

import threading

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse

from .exportio import (Workspace, export, frac_decimal, frac_str, hhier_payload,
                       rule_payload, seed_key)
from .hsub import build_h_hierarchy
from .msub import navigate

__all__ = ["create_app"]


def create_app(ws: Workspace) -> FastAPI:
    app = FastAPI(title="galois-rules explorer API")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    labels = ws.rule_base.labels()
    hgen_lock = threading.Lock()

    def node_summary(cid: int) -> dict:
        ensemble = ws.m_hierarchy.nodes[cid]
        return {
            "id": cid,
            "motif": sorted(ensemble.motif),
            "support": frac_str(ensemble.support),
            "support_decimal": frac_decimal(ensemble.support),
            "rule_count": len(ensemble.rules),
        }

    @app.get("/api/summary")
    def summary():
        counts = ws.rule_base.counts()
        return {
            "individuals": ws.context.n_individuals,
            "properties": ws.context.n_properties,
            "concepts": len(ws.lattice),
            "rules": len(ws.rule_base),
            "partial": counts["partial"],
            "total": counts["total"],
            "ensembles": len(ws.ensembles),
            "minsupp": frac_str(ws.thresholds.minsupp),
            "minconf": frac_str(ws.thresholds.minconf),
            "taxonomy": ws.taxonomy is not None,
        }

    @app.get("/api/mhier/roots")
    def mhier_roots():
        return [node_summary(cid) for cid in ws.m_hierarchy.roots]

    @app.get("/api/mhier/node/{node_id}")
    def mhier_node(node_id: int):
        if node_id not in ws.m_hierarchy.nodes:
            raise HTTPException(status_code=404, detail=f"unknown node {node_id}")
        ensemble = ws.m_hierarchy.nodes[node_id]
        return {
            **node_summary(node_id),
            "rules": [rule_payload(ws.rule_base, idx, labels) for idx in ensemble.rules],
            "parents": [node_summary(c) for c in navigate(ws.m_hierarchy, node_id, "generalize")],
            "children": [node_summary(c) for c in navigate(ws.m_hierarchy, node_id, "specialize")],
        }

    @app.get("/api/rule/{rule_id}")
    def rule(rule_id: int):
        if not 0 <= rule_id < len(ws.rule_base.rules):
            raise HTTPException(status_code=404, detail=f"unknown rule {rule_id}")
        return rule_payload(ws.rule_base, rule_id, labels)

    @app.post("/api/hgen")
    def hgen(body: dict = Body(...)):
        if ws.taxonomy is None:
            raise HTTPException(status_code=409, detail="no taxonomy loaded; generalization unavailable")
        seed_ids = body.get("seed_ids") if isinstance(body, dict) else None
        if (not isinstance(seed_ids, list) or not seed_ids
                or not all(isinstance(i, int) for i in seed_ids)):
            raise HTTPException(status_code=400, detail="body must be {\"seed_ids\": [int, ...]}")
        for i in seed_ids:
            if not 0 <= i < len(ws.rule_base.rules):
                raise HTTPException(status_code=404, detail=f"unknown rule {i}")
        key = seed_key(seed_ids)
        with hgen_lock:
            hierarchy = ws.h_hierarchies.get(key)
            if hierarchy is None:
                seeds = [ws.rule_base.rules[i] for i in sorted(set(seed_ids))]
                try:
                    hierarchy = build_h_hierarchy(seeds, ws.taxonomy, ws.context, ws.thresholds)
                except ValueError as exc:
                    raise HTTPException(status_code=400, detail=str(exc)) from None
                ws.h_hierarchies[key] = hierarchy
        payload = hhier_payload(hierarchy)
        payload["seed_rules"] = sorted(set(seed_ids))
        return payload

    @app.get("/api/lattice.dot", response_class=PlainTextResponse)
    def lattice_dot():
        return export(ws, "lattice", "dot")

    return app
