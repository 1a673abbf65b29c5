"""Built-in example embeddings used by ``verify`` and the acceptance tests."""

from __future__ import annotations

from .cech import CechSpec, LocalizationQuotient, MonomialLocalization

# Fixed seed for sampling nonzero strands in the Euler check.
EULER_SEED = 20011
EULER_SAMPLES = 100
EULER_BOX = (-3, 3)

CATALOG: dict[str, CechSpec] = {
    "point_A1": CechSpec(1, ((1,),)),
    "point_A2": CechSpec(2, ((1, 0), (0, 1))),
    "two_lines": CechSpec(2, ((1, 1),)),
    "plane_and_line": CechSpec(3, ((1, 1, 0), (1, 0, 1))),
    "fat_point_A1": CechSpec(1, ((2,),)),
    "three_axes": CechSpec(3, ((1, 1, 0), (0, 1, 1), (1, 0, 1))),
}

PHI_BASES = {
    "k[x]": MonomialLocalization(1, frozenset()),
    "k[x]_x": MonomialLocalization(1, frozenset({0})),
    "k[x,y]_xy": MonomialLocalization(2, frozenset({0, 1})),
    "k[x]_x/k[x]": LocalizationQuotient(1, frozenset({0}), frozenset()),
    "k": MonomialLocalization(0, frozenset()),
}

PLUS_LC_SPECS = {
    "(x)": CechSpec(1, ((1,),)),
    "(xy)": CechSpec(2, ((1, 1),)),
    "(x,y)": CechSpec(2, ((1, 0), (0, 1))),
}
