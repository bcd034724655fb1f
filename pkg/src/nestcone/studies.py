"""End-to-end studies built on the kernel.

* Butler criterion: on the universal family F_i^[2,1] of a Hirzebruch
  surface, the adjoint-type classes F_k - K attached to L = nA (A ample)
  must lie in the interior of the nef cone; interior membership for every k
  is the projective-normality certificate for n >= 4.
* Asymptotic study: in a fixed 4-dimensional frame (H1, H2, B1, B2) the
  effective cones E_k form a decreasing nest whose limit is the coordinate
  orthant; the k-dependent facet data deviates from the limit by exactly
  k/(2a_k) with a_k = binom(k+2,2)-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .cone import (
    COORD_SUM,
    Cone,
    cone_contains,
    cone_equal,
    cone_from_rays,
    cross_section,
    dual,
    position,
)
from .errors import InvalidInput, RangeError
from .linalg import solve_unique
from .rationals import Rat, rat_str
from .spaces import (
    DivClass,
    SurfaceModel,
    divisor_rank,
    hirzebruch,
    p1xp1,
    pull_a,
    pull_b,
    pull_res,
    surface_divisor,
    tautological,
    tautological_a,
    univ,
)
from .verify import nef_table_inputs

# ---------------------------------------------------------------------------
# Butler criterion on F_i^[2,1]
# ---------------------------------------------------------------------------

ORDER_B = "b"      # F_{k+1} = F_k + pull_b(L): the displayed recursion
ORDER_RES = "res"  # variant with the extra copies pulled back along res


def _butler_surface(i: int) -> SurfaceModel:
    # F_0 and P1xP1 carry the same lattice; keep the (H, F) basis uniform.
    return p1xp1() if i == 0 else hirzebruch(i)


@dataclass(frozen=True)
class ButlerInput:
    """Ample class A = aH + bF on F_i and the line bundle L = nA.

    Ampleness on a Hirzebruch surface is the positivity test against the
    fiber F (A.F = a) and the section of self-intersection -i (A.E = b).
    """

    i: int
    a: int
    b: int
    n: int
    k_range: tuple[int, int] = (1, 5)

    def __post_init__(self):
        if self.i < 0:
            raise InvalidInput(f"Hirzebruch index must be >= 0, got {self.i}")
        if self.a < 1:
            raise InvalidInput(f"A.F = a must be positive, got {self.a}")
        if self.b < 1:
            raise InvalidInput(f"A.E = b must be positive, got {self.b}")
        if self.n < 4:
            raise InvalidInput(f"the criterion needs n >= 4, got {self.n}")
        lo, hi = self.k_range
        if lo < 1 or hi < lo:
            raise InvalidInput(f"k_range must be an inclusive range >= 1, got {self.k_range}")

    @property
    def surface(self) -> SurfaceModel:
        return _butler_surface(self.i)


def half_b_a(i: int) -> tuple[DivClass, DivClass]:
    """Both sides of the exact identity (H+F)^b + (H+F)^diff - D^a_{1,1}
    = (1/2)B^a on F_i^[2,1] (B^a = pull_a of the full nonreduced locus)."""
    s = _butler_surface(i)
    sp = univ(2)
    hf = surface_divisor(s, (1, 1))
    lhs = pull_b(hf, sp) + pull_res(hf, sp) - tautological_a(s, sp, (1, 1))
    from .spaces import divisor

    rhs = divisor(s, sp, "B/2")  # pull_a(B)/2 = B/2 on the universal family
    return lhs, rhs


def butler_class(inp: ButlerInput, k: int, ordering: str = ORDER_B) -> DivClass:
    """The class F_k - K on F_i^[2,1] for L = nA.

    k = 1: (na-2)H^b + (nb-2)F^b + (na-2)H^diff + (nb-2)F^diff + 2D^a_{1,1}.
    k > 1: adds (k-1) copies of L pulled back along pr_b (ordering "b",
    the displayed recursion) or along res (ordering "res"); the two
    orderings coincide at k = 1.
    """
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    if ordering not in (ORDER_B, ORDER_RES):
        raise InvalidInput(f"unknown ordering {ordering!r}")
    s = inp.surface
    sp = univ(2)
    na, nb = inp.n * inp.a, inp.n * inp.b
    hb_part = pull_b(surface_divisor(s, (na - 2, nb - 2)), sp)
    diff_part = pull_res(surface_divisor(s, (na - 2, nb - 2)), sp)
    cls = hb_part + diff_part + Fraction(2) * tautological_a(s, sp, (1, 1))
    if k > 1:
        extra = surface_divisor(s, ((k - 1) * na, (k - 1) * nb))
        cls = cls + (pull_b(extra, sp) if ordering == ORDER_B else pull_res(extra, sp))
    return cls


def butler_nef_cone(i: int, n: int = 2):
    """The simplicial nef cone of F_i^[n,1] with its labeled spanning rays."""
    table = "nef_f0_univ" if i == 0 else "nef_fi_univ"
    params = {"n": n} if i == 0 else {"i": i, "n": n}
    s, sp, ray_specs, _, _ = nef_table_inputs(table, **params)
    rays = [(r.label, r.cls) for r in ray_specs]
    cone = cone_from_rays(divisor_rank(s, sp), [r.coords for _, r in rays])
    return cone, rays


@dataclass(frozen=True)
class ButlerStep:
    k: int
    coords: tuple[Rat, ...]
    ray_labels: tuple[str, ...]
    ray_coefficients: tuple[Rat, ...]
    position: str


@dataclass(frozen=True)
class ButlerReport:
    input: ButlerInput
    ordering: str
    steps: tuple[ButlerStep, ...]

    @property
    def all_interior(self) -> bool:
        return all(s.position == "Interior" for s in self.steps)

    def to_json(self) -> dict:
        return {
            "input": {
                "i": self.input.i,
                "a": self.input.a,
                "b": self.input.b,
                "n": self.input.n,
                "k_range": list(self.input.k_range),
            },
            "ordering": self.ordering,
            "all_interior": self.all_interior,
            "steps": [
                {
                    "k": s.k,
                    "coords": [rat_str(x) for x in s.coords],
                    "rays": list(s.ray_labels),
                    "ray_coefficients": [rat_str(x) for x in s.ray_coefficients],
                    "position": s.position,
                }
                for s in self.steps
            ],
        }

    def json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def text(self) -> str:
        inp = self.input
        lines = [
            f"butler i={inp.i} A={inp.a}H+{inp.b}F n={inp.n} "
            f"ordering={self.ordering}: "
            f"{'all interior' if self.all_interior else 'NOT all interior'}"
        ]
        for s in self.steps:
            coeffs = ", ".join(
                f"{lab}: {rat_str(c)}"
                for lab, c in zip(s.ray_labels, s.ray_coefficients)
            )
            lines.append(f"  k={s.k}: {s.position} [{coeffs}]")
        return "\n".join(lines) + "\n"


def butler_check(inp: ButlerInput, ordering: str = ORDER_B) -> ButlerReport:
    """Per-k position of F_k - K in the nef cone of F_i^[2,1], with the
    coefficient vector on the five spanning rays (the cone is simplicial,
    so the coefficients are the unique solution of a linear system)."""
    cone, rays = butler_nef_cone(inp.i)
    ray_matrix = [
        [rays[j][1].coords[r] for j in range(len(rays))]
        for r in range(cone.dim)
    ]
    lo, hi = inp.k_range
    steps = []
    for k in range(lo, hi + 1):
        cls = butler_class(inp, k, ordering)
        coeffs = solve_unique(ray_matrix, list(cls.coords))
        steps.append(
            ButlerStep(
                k=k,
                coords=cls.coords,
                ray_labels=tuple(lab for lab, _ in rays),
                ray_coefficients=tuple(coeffs),
                position=position(cone, cls.coords),
            )
        )
    return ButlerReport(inp, ordering, tuple(steps))


# ---------------------------------------------------------------------------
# Asymptotic limit cone
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AsymptoticFrame:
    """Fixed 4-dimensional frame, basis (H1, H2, B1, B2), in which all the
    cones E_k live; the identification between consecutive spaces acts as
    the identity on these coordinates.

    Translation assumption (flagged): B1 is the same-support nonreduced
    locus (Bdiff) and B2 the locus where the smaller subscheme is
    nonreduced (Bb)."""

    labels: tuple[str, ...] = ("H1", "H2", "B1", "B2")

    @property
    def dim(self) -> int:
        return len(self.labels)


FRAME = AsymptoticFrame()


def a_k(k: int) -> int:
    """binom(k+2,2) - 1, the dimension count for degree-k plane curves."""
    return comb(k + 2, 2) - 1


def a_k_prime(k: int) -> int:
    return comb(k + 2, 2)


@dataclass(frozen=True)
class MovingCurve:
    """One of the four facet functionals cutting out E_k, together with the
    extremal ray of E_k it annihilates and that ray's deviation from the
    corresponding limit ray."""

    name: str
    functional: tuple[Rat, ...]
    annihilated_ray: tuple[Rat, ...]
    deviation: Rat

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "functional": [rat_str(x) for x in self.functional],
            "annihilated_ray": [rat_str(x) for x in self.annihilated_ray],
            "deviation": rat_str(self.deviation),
        }


def asymptotic_moving_curves(k: int) -> list[MovingCurve]:
    """The four moving-curve functionals cutting out E_k in the frame
    (H1, H2, B1, B2): the two fixed coordinate-plane functionals and the
    two k-dependent ones, whose annihilated extremal rays are
    H1 - (k/(2 a_k)) B1 and H2 - (k/(2(a'_k - 1))) B2."""
    if k < 1:
        raise RangeError(f"k must be >= 1, got {k}")
    z = Fraction(0)
    one = Fraction(1)
    d1 = Fraction(k, 2 * a_k(k))
    d2 = Fraction(k, 2 * (a_k_prime(k) - 1))
    return [
        MovingCurve("plane(H2,B1,B2)", (one, z, z, z), (z, z, one, z), z),
        MovingCurve("plane(H1,B1,B2)", (z, one, z, z), (z, z, z, one), z),
        MovingCurve(
            f"normal of H1-{rat_str(d1)}B1", (d1, z, one, z), (one, z, -d1, z), d1
        ),
        MovingCurve(
            f"normal of H2-{rat_str(d2)}B2", (z, d2, z, one), (z, one, z, -d2), d2
        ),
    ]


def asymptotic_cone(k: int) -> Cone:
    """E_k as the dual of the four moving-curve functionals."""
    funcs = [m.functional for m in asymptotic_moving_curves(k)]
    return dual(cone_from_rays(FRAME.dim, funcs))


def limit_cone() -> Cone:
    return cone_from_rays(
        FRAME.dim,
        [tuple(1 if j == i else 0 for j in range(FRAME.dim)) for i in range(FRAME.dim)],
    )


@dataclass(frozen=True)
class AsymptoticStep:
    k: int
    deviation_1: Rat
    deviation_2: Rat
    nested_in_previous: bool
    contains_limit: bool
    section_distance: Rat  # max-coordinate distance of vertices to the limit square


@dataclass(frozen=True)
class AsymptoticReport:
    k_max: int
    steps: tuple[AsymptoticStep, ...]
    limit_is_orthant: bool

    @property
    def ok(self) -> bool:
        monotone = all(
            self.steps[i].deviation_1 > self.steps[i + 1].deviation_1
            and self.steps[i].deviation_2 > self.steps[i + 1].deviation_2
            for i in range(len(self.steps) - 1)
        )
        return (
            self.limit_is_orthant
            and monotone
            and all(
                s.nested_in_previous
                and s.contains_limit
                and s.section_distance * s.k <= 1
                for s in self.steps
            )
        )

    def to_json(self) -> dict:
        return {
            "k_max": self.k_max,
            "ok": self.ok,
            "limit_is_orthant": self.limit_is_orthant,
            "steps": [
                {
                    "k": s.k,
                    "deviation_1": rat_str(s.deviation_1),
                    "deviation_2": rat_str(s.deviation_2),
                    "nested_in_previous": s.nested_in_previous,
                    "contains_limit": s.contains_limit,
                    "section_distance": rat_str(s.section_distance),
                }
                for s in self.steps
            ],
        }

    def json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def text(self) -> str:
        lines = [
            f"asymptotic study up to k={self.k_max}: {'OK' if self.ok else 'FAIL'}",
            f"  limit cone is the coordinate orthant: {self.limit_is_orthant}",
        ]
        for s in self.steps:
            lines.append(
                f"  k={s.k}: deviations {rat_str(s.deviation_1)}, "
                f"{rat_str(s.deviation_2)}; nested={s.nested_in_previous}; "
                f"section distance {rat_str(s.section_distance)}"
            )
        return "\n".join(lines) + "\n"


def _section_distance(k: int) -> Rat:
    """Max-coordinate distance between the coordsum cross-section vertices of
    E_k and the nearest vertices of the limit square."""
    cs = cross_section(asymptotic_cone(k), COORD_SUM)
    limit_cs = cross_section(limit_cone(), COORD_SUM)
    worst = Fraction(0)
    for v in cs.vertices:
        best = None
        for w in limit_cs.vertices:
            d = max(abs(a - b) for a, b in zip(v, w))
            if best is None or d < best:
                best = d
        worst = max(worst, best)
    return worst


def asymptotic_report(k_max: int) -> AsymptoticReport:
    if k_max < 2:
        raise RangeError(f"k_max must be >= 2, got {k_max}")
    limit = limit_cone()
    steps = []
    prev = asymptotic_cone(1)
    for k in range(2, k_max + 1):
        cone_k = asymptotic_cone(k)
        curves = asymptotic_moving_curves(k)
        steps.append(
            AsymptoticStep(
                k=k,
                deviation_1=curves[2].deviation,
                deviation_2=curves[3].deviation,
                nested_in_previous=cone_contains(prev, cone_k),
                contains_limit=cone_contains(cone_k, limit),
                section_distance=_section_distance(k),
            )
        )
        prev = cone_k
    # The limit cone: all deviations shrink to 0, so the E_k decrease to the
    # orthant; verify the orthant is contained in every computed E_k and that
    # it is exactly the stated span.
    limit_ok = cone_equal(
        limit,
        cone_from_rays(
            FRAME.dim,
            [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
        ),
    )
    return AsymptoticReport(k_max, tuple(steps), limit_ok)
