"""JSON documents and text tables for compute/compare results.

Field names ``pages``, ``abutment``, ``derham_homology``, ``verdict`` and
``shift`` are stable.  Everything is emitted in ascending (r, p, q) order
with zero entries dropped, so ``render_json(from_dict(json.loads(s))) == s``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cech import CechSpec, box, local_cohomology_dim
from .errors import InputError
from .pipeline import IndependenceReport, SSReport

Cell = tuple[int, int]


@dataclass
class ComputeDocument:
    """What ``compute`` emits: the report, the page cutoff and optional local cohomology."""

    report: SSReport
    max_page: int
    window: tuple[int, int] | None = None
    local_cohomology: list[tuple[int, tuple[int, ...], int]] = field(default_factory=list)


def local_cohomology_rows(spec: CechSpec, window: tuple[int, int]):
    """Nonzero ``(q, degree, dim H^q_I(T)_degree)`` over the window box."""
    lo, hi = window
    rows = []
    for q in range(spec.m + 1):
        for a in box(spec.n, lo, hi):
            d = local_cohomology_dim(spec, q, a)
            if d:
                rows.append((q, a, d))
    return rows


def compute_document(report: SSReport, max_page: int | None = None, spec=None, window=None) -> ComputeDocument:
    if max_page is None:
        max_page = report.r_stab
    if max_page < 1:
        raise InputError("--max-page must be at least 1")
    max_page = min(max_page, report.r_stab)
    lc = local_cohomology_rows(spec, window) if window is not None else []
    return ComputeDocument(report, max_page, window, lc)


def _entries(tab: dict[Cell, int]) -> list[dict]:
    return [{"p": p, "q": q, "dim": d} for (p, q), d in sorted(tab.items()) if d]


def _from_entries(rows) -> dict[Cell, int]:
    return {(e["p"], e["q"]): e["dim"] for e in rows}


def _grid_extent(report: SSReport) -> tuple[int, int]:
    cells = [c for tab in report.pages.values() for c in tab]
    width = max((p for p, _ in cells), default=0) + 1
    height = max((q for _, q in cells), default=0) + 1
    return width, height


def compute_to_dict(doc: ComputeDocument) -> dict:
    rep = doc.report
    width, height = _grid_extent(rep)
    out = {
        "n": rep.n,
        "generators": [list(g) for g in rep.generators],
        "grid": {"width": width, "height": height},
        "r_stab": rep.r_stab,
        "max_page": doc.max_page,
        "pages": [{"r": r, "entries": _entries(rep.page(r))} for r in range(1, doc.max_page + 1)],
        "e_infinity": _entries(rep.e_infinity),
        "abutment": [{"m": m, "dim": d} for m, d in sorted(rep.abutment.items()) if d],
        "derham_homology": [{"i": i, "dim": d} for i, d in sorted(rep.derham_homology.items()) if d],
    }
    if doc.window is not None:
        out["window"] = list(doc.window)
        out["local_cohomology"] = [{"q": q, "degree": list(a), "dim": d} for q, a, d in doc.local_cohomology]
    return out


def _fill(tab: dict[Cell, int], width: int, height: int) -> dict[Cell, int]:
    return {(p, q): tab.get((p, q), 0) for p in range(width) for q in range(height)}


def compute_from_dict(data: dict) -> ComputeDocument:
    n = data["n"]
    width, height = data["grid"]["width"], data["grid"]["height"]
    r_stab = data["r_stab"]
    pages = {page["r"]: _fill(_from_entries(page["entries"]), width, height) for page in data["pages"]}
    pages[r_stab] = _fill(_from_entries(data["e_infinity"]), width, height)
    abut = {k: 0 for k in range(width + height - 1)}
    abut.update({e["m"]: e["dim"] for e in data["abutment"]})
    homology = {i: 0 for i in range(2 * n + 1)}
    homology.update({e["i"]: e["dim"] for e in data["derham_homology"]})
    report = SSReport(n, [list(g) for g in data["generators"]], r_stab, pages, abut, homology)
    window = tuple(data["window"]) if "window" in data else None
    lc = [(e["q"], tuple(e["degree"]), e["dim"]) for e in data.get("local_cohomology", [])]
    return ComputeDocument(report, data["max_page"], window, lc)


def independence_to_dict(rep: IndependenceReport) -> dict:
    return {
        "verdict": rep.verdict,
        "shift": list(rep.shift),
        "first_mismatch": rep.first_mismatch,
        "pages": [
            {"r": r, "p": p, "q": q, "dim_a": x, "dim_b": y, "match": x == y} for r, p, q, x, y in rep.pages
        ],
        "abutment": [{"m": m, "dim_a": x, "dim_b": y, "match": x == y} for m, x, y in rep.abutment],
        "psi": {
            "checked": rep.psi_checked,
            "iso_pages": [{"r": r, "iso": ok} for r, ok in sorted(rep.psi_iso_pages.items())],
        },
        "e1_differences": [{"p": p, "q": q, "dim_a": x, "dim_b": y} for _, p, q, x, y in rep.e1_differences],
    }


def independence_from_dict(data: dict) -> IndependenceReport:
    return IndependenceReport(
        shift=tuple(data["shift"]),
        pages=[(e["r"], e["p"], e["q"], e["dim_a"], e["dim_b"]) for e in data["pages"]],
        abutment=[(e["m"], e["dim_a"], e["dim_b"]) for e in data["abutment"]],
        verdict=data["verdict"],
        first_mismatch=data["first_mismatch"],
        psi_checked=data["psi"]["checked"],
        psi_iso_pages={e["r"]: e["iso"] for e in data["psi"]["iso_pages"]},
        e1_differences=[(1, e["p"], e["q"], e["dim_a"], e["dim_b"]) for e in data["e1_differences"]],
    )


def render_json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


# -- text rendering --------------------------------------------------------


def page_grid(tab: dict[Cell, int], width: int, height: int) -> list[str]:
    """Rows q = height-1 .. 0 (top to bottom), columns p = 0 .. width-1; zeros shown."""
    cellw = max([len(str(v)) for v in tab.values()] + [len(str(width - 1)), 1])
    lines = []
    for q in reversed(range(height)):
        row = " ".join(str(tab.get((p, q), 0)).rjust(cellw) for p in range(width))
        lines.append(f"q={q:<2}| {row}")
    lines.append("     +" + "-" * (width * (cellw + 1)))
    lines.append("  p = " + " ".join(str(p).rjust(cellw) for p in range(width)))
    return lines


def render_compute_text(doc: ComputeDocument) -> str:
    rep = doc.report
    width, height = _grid_extent(rep)
    gens = ", ".join(str(list(g)) for g in rep.generators)
    out = [f"I generated by {gens} in A^{rep.n}", f"pages stabilize by r = {rep.r_stab}", ""]
    for r in range(1, doc.max_page + 1):
        label = f"E_{r}" + (" = E_inf" if r == rep.r_stab else "")
        out.append(label)
        out.extend(page_grid(rep.page(r), width, height))
        out.append("")
    if doc.max_page < rep.r_stab:
        out.append("E_inf")
        out.extend(page_grid(rep.e_infinity, width, height))
        out.append("")
    out.append("abutment: " + "  ".join(f"H^{m}={d}" for m, d in sorted(rep.abutment.items())))
    out.append("de Rham homology: " + "  ".join(f"H_{i}={d}" for i, d in sorted(rep.derham_homology.items())))
    if doc.window is not None:
        out.append("")
        lo, hi = doc.window
        out.append(f"local cohomology H^q_I(T) on degrees {lo}..{hi} (nonzero pieces):")
        if not doc.local_cohomology:
            out.append("  none")
        for q, a, d in doc.local_cohomology:
            out.append(f"  q={q} degree={list(a)} dim={d}")
    return "\n".join(out) + "\n"


def render_independence_text(rep: IndependenceReport) -> str:
    a, b = rep.shift
    out = [f"shift ({a}, {b}): {'MATCH' if rep.verdict else 'MISMATCH'}"]
    if rep.first_mismatch:
        out.append(f"first mismatch: {rep.first_mismatch}")
    out.append("")
    out.append("  r   p   q  dim A  dim B")
    for r, p, q, x, y in rep.pages:
        flag = "" if x == y else "  <-"
        out.append(f"{r:>3} {p:>3} {q:>3} {x:>6} {y:>6}{flag}")
    out.append("")
    out.append("  m  H^m(A)  H^(m+a+b)(B)")
    for m, x, y in rep.abutment:
        flag = "" if x == y else "  <-"
        out.append(f"{m:>3} {x:>7} {y:>13}{flag}")
    if rep.psi_checked:
        iso = ", ".join(f"E_{r}:{'iso' if ok else 'not iso'}" for r, ok in sorted(rep.psi_iso_pages.items()))
        out.append("")
        out.append(f"psi chain map: {iso}")
    if rep.e1_differences:
        out.append("")
        out.append("E_1 differences (not covered by the comparison):")
        for _, p, q, x, y in rep.e1_differences:
            out.append(f"  ({p},{q}): {x} vs {y}")
    return "\n".join(out) + "\n"
