"""Verification suites run by ``hodge-derham verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .bernstein import bernstein_bound_check, bernstein_dimension, hilbert_function, lattice_count
from .catalog import CATALOG, EULER_BOX, EULER_SAMPLES, EULER_SEED, PHI_BASES, PLUS_LC_SPECS
from .cech import CechSpec, MonomialLocalization, box
from .derham import euler_contractibility_check
from .koszul import (
    KoszulComplex,
    conormal_rank_check,
    ext_top_annihilator_check,
    koszul_self_duality,
    verify_koszul_resolution,
)
from .pipeline import compare_embeddings, hodge_derham_ss, smooth_case_ss
from .plus import plus, verify_phi_iso, verify_plus_local_cohomology

SUITES = ("plus", "koszul", "euler", "bernstein", "theorem", "all")

Window = tuple[int, int]


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def euler_degrees(n: int, count: int = EULER_SAMPLES, seed: int = EULER_SEED, window: Window = EULER_BOX):
    """Deterministic pseudo-random nonzero degrees in the window box."""
    rng = random.Random(f"{seed}:{n}")
    lo, hi = window
    out = []
    while len(out) < count:
        a = tuple(rng.randint(lo, hi) for _ in range(n))
        if any(a):
            out.append(a)
    return out


def run_euler(window: Window = EULER_BOX) -> list[CheckResult]:
    results = []
    for name, spec in CATALOG.items():
        degs = euler_degrees(spec.n, window=window)
        exact = sum(euler_contractibility_check(spec, a) for a in degs)
        results.append(CheckResult("euler", name, exact == len(degs), f"{exact}/{len(degs)} strands exact"))
    return results


def weyl_z_relation(base, window: Window = (-3, 3)) -> bool:
    """``d_z z - z d_z = 1`` on every nonzero piece of ``base_+`` in the window."""
    M = plus(base)
    lo, hi = window
    zi = M.n - 1
    for a in box(M.n, lo, hi):
        if not M.piece_dim(a):
            continue
        s1, b = M.x_mult(zi, a)
        first = M.del_action(zi, b)[0] * s1 if s1 else 0
        s2, c = M.del_action(zi, a)
        second = M.x_mult(zi, c)[0] * s2 if s2 else 0
        if first - second != 1:
            return False
    return True


def run_plus(window: Window = (-3, 3)) -> list[CheckResult]:
    results = []
    for name, base in PHI_BASES.items():
        res = verify_phi_iso(base)
        results.append(CheckResult("plus", f"phi iso {name}", res.ok, f"ranks {res.ranks}"))
        results.append(CheckResult("plus", f"weyl z {name}", weyl_z_relation(base, window)))
    for name, spec in PLUS_LC_SPECS.items():
        for i in range(spec.n + 1):
            ok = verify_plus_local_cohomology(spec, i, window)
            results.append(CheckResult("plus", f"(H^{i}_I)_+ = H^{i + 1}_(I,z) for I={name}", ok))
    return results


def run_koszul(window: Window = (-3, 3), max_n: int = 4, max_c: int = 3) -> list[CheckResult]:
    results = []
    for n in range(1, max_n + 1):
        for coords in combinations(range(n), 0):
            results.append(CheckResult("koszul", f"conormal n={n} J=0", conormal_rank_check(n, coords, window)))
        for c in range(1, min(max_c, n) + 1):
            for coords in combinations(range(n), c):
                K = KoszulComplex(n, coords)
                label = f"n={n} J={tuple(j + 1 for j in coords)}"
                results.append(CheckResult("koszul", f"resolution {label}", verify_koszul_resolution(K, window)))
                results.append(CheckResult("koszul", f"ext/annihilator {label}", ext_top_annihilator_check(n, coords, window)))
                results.append(CheckResult("koszul", f"self-duality {label}", koszul_self_duality(K, window)))
                results.append(CheckResult("koszul", f"conormal {label}", conormal_rank_check(n, coords, window)))
    return results


def run_bernstein(max_n: int = 4) -> list[CheckResult]:
    results = []
    for n in range(0, max_n + 1):
        for c in range(n + 1):
            for sigma in combinations(range(n), c):
                loc = MonomialLocalization(n, frozenset(sigma))
                data = bernstein_dimension(loc)
                brute = all(hilbert_function(loc, v) == lattice_count(loc, v) for v in range(0, 2 * n + 3))
                ok = (
                    data.fitted_degree == n
                    and data.leading_multiplicity == 2 ** len(sigma)
                    and bernstein_bound_check(loc)
                    and brute
                )
                results.append(
                    CheckResult(
                        "bernstein",
                        f"n={n} sigma={tuple(i + 1 for i in sigma)}",
                        ok,
                        f"dim {data.fitted_degree}, multiplicity {data.leading_multiplicity}",
                    )
                )
    return results


def run_theorem(extra=(1, 2)) -> list[CheckResult]:
    results = []
    for name, spec in CATALOG.items():
        for t in extra:
            rep = compare_embeddings(spec, spec.extend(t))
            detail = rep.first_mismatch or f"psi iso on pages {sorted(r for r, ok in rep.psi_iso_pages.items() if ok)}"
            results.append(CheckResult("theorem", f"{name} + {t} coordinate(s)", rep.verdict and rep.psi_checked, detail))
    for n in range(1, 5):
        for s in range(0, n + 1):
            rep = smooth_case_ss(s, n)
            c = n - s
            ok = rep.nonzero(2) == {(c, c): 1}
            results.append(CheckResult("theorem", f"smooth A^{s} in A^{n}", ok, str(rep.nonzero(2))))
    fat, red = hodge_derham_ss(CATALOG["fat_point_A1"]), hodge_derham_ss(CATALOG["point_A1"])
    results.append(CheckResult("theorem", "radical invariance (x^2) vs (x)", fat.invariants() == red.invariants()))
    redundant = CechSpec(2, ((1, 0), (0, 1), (1, 1)))
    results.append(
        CheckResult(
            "theorem",
            "redundant generator (x, y, xy) vs (x, y)",
            hodge_derham_ss(redundant).invariants() == hodge_derham_ss(CATALOG["point_A2"]).invariants(),
        )
    )
    return results


def run_suite(suite: str, window: Window | None = None) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    w = window or (-3, 3)
    runners = {
        "plus": lambda: run_plus(w),
        "koszul": lambda: run_koszul(w),
        "euler": lambda: run_euler(window or EULER_BOX),
        "bernstein": run_bernstein,
        "theorem": run_theorem,
    }
    if suite == "all":
        out = []
        for name in ("plus", "koszul", "euler", "bernstein", "theorem"):
            out.extend(runners[name]())
        return out
    return runners[suite]()
