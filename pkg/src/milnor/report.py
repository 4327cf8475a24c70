"""Text and JSON reports for invariant results and defect ledgers.

Tensors serialize as lists of ``{"word": [digits], "coeff": int}`` in
lexicographic word order, so reports diff cleanly and parse back exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .engine import InvariantResult
from .higher import DefectLedger, lattice_summary, render_symbols
from .lyndon import decompose, format_lyndon, match_left_collecting
from .tensors import IntervalTensor, format_pairs


def tensor_to_json(t: IntervalTensor) -> list[dict]:
    return [{"word": list(w), "coeff": c} for w, c in t.items()]


def tensor_from_json(q: int, degree: int, items: list[dict]) -> IntervalTensor:
    return IntervalTensor.from_dict(q, {tuple(r["word"]): r["coeff"] for r in items}, degree=degree)


def _lyndon_json(t: IntervalTensor) -> dict:
    coeffs, rest = decompose(t)
    return {
        "lyndon": [{"word": list(w), "coeff": c} for w, c in sorted(coeffs.items())],
        "remainder_zero": rest.is_zero(),
    }


def _raw_json(t: IntervalTensor) -> dict:
    return {"raw": tensor_to_json(t)}


def result_to_json(link: str, result: InvariantResult | None, basis: str = "lyndon",
                   ledger: DefectLedger | None = None, max_degree: int | None = None) -> dict:
    out: dict[str, Any] = {"link": link}
    if result is None:
        out.update({"m": None, "trivial_up_to": max_degree, "psi": [], "basis": [], "longitude": []})
    else:
        out["m"] = result.m
        out["q"] = result.q
        out["psi"] = [{"component": j, "tensor": tensor_to_json(t)} for j, t in enumerate(result.psi, 1)]
        encode = _lyndon_json if basis == "lyndon" else _raw_json
        out["basis"] = [{"component": j, **encode(t)} for j, t in enumerate(result.psi, 1)]
        out["longitude"] = [{"component": j, "tensor": tensor_to_json(t)} for j, t in enumerate(result.longitude, 1)]
    out["higher"] = ledger_to_json(ledger) if ledger is not None else None
    return out


def ledger_to_json(ledger: DefectLedger) -> dict:
    degrees = []
    for h in ledger.degrees:
        comps = []
        for j, e in enumerate(ledger.entries[h], 1):
            comps.append({
                "component": j,
                "reduced": tensor_to_json(e.reduced),
                "value": tensor_to_json(e.value),
                "raw": tensor_to_json(e.raw),
                "symbols": render_symbols(e.reduced),
            })
        lat = ledger.lattices[h]
        degrees.append({
            "degree": h,
            "components": comps,
            "delta": {**lattice_summary(lat), "basis": [tensor_to_json(b) for b in lat.basis()]},
        })
    return {"m": ledger.m, "q": ledger.q, "degrees": degrees, "raw_is_canonical": False}


def psi_from_json(report: dict) -> list[IntervalTensor]:
    """Tensors of the ``psi`` field; the degree is the report's ``m``."""
    q, m = report["q"], report["m"]
    return [tensor_from_json(q, m, p["tensor"]) for p in report["psi"]]


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False)


# --- text -----------------------------------------------------------------


def _bracket_text(t: IntervalTensor) -> str:
    fit = match_left_collecting(t)
    if fit is None:
        return ""
    c, J = fit
    body = "[" * (len(J) - 1) + f"l^({J[0]})" + "".join(f", l^({j})]" for j in J[1:])
    return f"  = {c} * {body}" if c != 1 else f"  = {body}"


def result_to_text(link: str, result: InvariantResult | None, basis: str = "lyndon",
                   max_degree: int | None = None) -> str:
    if result is None:
        return f"{link}: all defects vanish up to degree {max_degree}"
    lines = [f"{link}: first non-vanishing degree m = {result.m}"]
    for j, t in enumerate(result.psi, 1):
        lines.append(f"  psi({j}) = {format_pairs(t)}")
        fit = _bracket_text(t)
        if fit:
            lines.append(f"         {fit.strip()}")
        if basis == "lyndon":
            coeffs, rest = decompose(t)
            suffix = "" if rest.is_zero() else "  (non-Lie remainder)"
            lines.append(f"    lyndon: {format_lyndon(coeffs)}{suffix}")
    for j, t in enumerate(result.longitude, 1):
        coeffs, _ = decompose(t) if t.degree else ({}, None)
        lines.append(f"  longitude({j}) = {format_lyndon(coeffs)}")
    return "\n".join(lines)


def ledger_to_text(link: str, ledger: DefectLedger) -> str:
    lines = [f"{link}: refined invariants from degree {ledger.m}"]
    for h in ledger.degrees:
        s = lattice_summary(ledger.lattices[h])
        tors = ", ".join(map(str, s["torsion"])) or "none"
        lines.append(f" degree {h}: Delta rank {s['rank']} from {s['generators']} generators, torsion {tors}")
        for j, e in enumerate(ledger.entries[h], 1):
            lines.append(f"   mu({j}) = {render_symbols(e.reduced)}")
    return "\n".join(lines)
