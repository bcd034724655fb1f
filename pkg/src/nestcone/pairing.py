"""Intersection pairing between curve and divisor bases, derived curve
families, nodal curves on K3 surfaces, pushforwards, and linear
reconstruction of classes from prescribed pairings.

Pairing rules (g = surface Gram matrix):

* Hilb(n):   C_i . H_j[n] = g_ij, C_i . B/2 = 0, A . H_j = 0, A . B/2 = -1.
* Nested(n): Ca_i . Hdiff_j = g_ij (zero elsewhere);
             Cb_i . Hb_j = g_ij (zero elsewhere);
             Aa . Bdiff/2 = -1; Ab . Bdiff/2 = +1, Ab . Bb/2 = -1.
* Univ(n):   Ca_i . Hdiff_j = g_ij; Cb_i . Hb_j = g_ij; Aa . B/2 = -1.

Curve families (gamma = sum m_i H_i a curve class on X, r = number of points
of the configuration constrained to lie on the moving curve):

* Hilb:   C_{gamma,r}  = sum m_i C_i  - (r-1) A,        1 <= r <= n.
* Nested: Ca_{gamma,r} = sum m_i Ca_i - (r-1) Aa,       1 <= r <= n+1.
          Cb_{gamma,r} = sum m_i Cb_i - r Aa - (r-1) Ab, 1 <= r <= n.
* Univ:   Ca_{gamma,r} = sum m_i Ca_i - r Aa,           1 <= r <= n-1
          (the marked point lies on the curve, adding one collision).
          Cb_{gamma,r} = sum m_i Cb_i - (r-1) Aa,       1 <= r <= n.

The nested Cb coefficient on Aa is -r (not the constant -1 sometimes seen in
informal tables): only -r is compatible with the pushforward identity
pr_a(Cb_{gamma,r}) = C_{gamma,r+1}[n+1] and with the dual-cone tables.  The
constant-coefficient variant is kept as `curve_family_b_alt` for regression
and for decoding legacy tables that use it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from . import linalg
from .errors import NotK3, RangeError, SpaceMismatch
from .rationals import Rat, rat, rat_str, vzero
from .spaces import (
    CurClass,
    DivClass,
    SpaceId,
    SpaceKind,
    SurfaceModel,
    curve,
    curve_labels,
    curve_rank,
    divisor_labels,
    divisor_rank,
    hilb,
    surface_space,
    zero_curve,
)


# ---------------------------------------------------------------------------
# The pairing table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairingTable:
    """Curve-basis x divisor-basis intersection matrix of a space."""

    surface: SurfaceModel
    space: SpaceId
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    matrix: tuple[tuple[Rat, ...], ...]

    def to_csv(self) -> str:
        lines = ["," + ",".join(self.col_labels)]
        for label, row in zip(self.row_labels, self.matrix):
            lines.append(label + "," + ",".join(rat_str(x) for x in row))
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def pairing_table(surface: SurfaceModel, space: SpaceId) -> PairingTable:
    rho = surface.rank
    g = surface.gram
    rows = curve_labels(surface, space)
    cols = divisor_labels(surface, space)
    m = [[Fraction(0)] * len(cols) for _ in rows]
    if space.kind is SpaceKind.SURFACE:
        for i in range(rho):
            for j in range(rho):
                m[i][j] = g[i][j]
    elif space.kind is SpaceKind.HILB:
        for i in range(rho):
            for j in range(rho):
                m[i][j] = g[i][j]
        m[rho][rho] = Fraction(-1)  # A . B/2
    elif space.kind is SpaceKind.NESTED:
        for i in range(rho):
            for j in range(rho):
                m[i][j] = g[i][j]            # Ca_i . Hdiff_j
                m[rho + i][rho + j] = g[i][j]  # Cb_i . Hb_j
        m[2 * rho][2 * rho] = Fraction(-1)       # Aa . Bdiff/2
        m[2 * rho + 1][2 * rho] = Fraction(1)    # Ab . Bdiff/2
        m[2 * rho + 1][2 * rho + 1] = Fraction(-1)  # Ab . Bb/2
    else:  # UNIV
        for i in range(rho):
            for j in range(rho):
                m[i][j] = g[i][j]
                m[rho + i][rho + j] = g[i][j]
        m[2 * rho][2 * rho] = Fraction(-1)  # Aa . B/2
    return PairingTable(
        surface, space, rows, cols, tuple(tuple(row) for row in m)
    )


def pair(d: DivClass, c: CurClass) -> Rat:
    """Intersection number of a divisor class with a curve class."""
    if d.surface != c.surface or d.space != c.space:
        raise SpaceMismatch(
            f"pairing requires classes on the same space: {d.space} vs {c.space}"
        )
    m = pairing_table(d.surface, d.space).matrix
    total = Fraction(0)
    for r, cr in enumerate(c.coords):
        if cr == 0:
            continue
        total += cr * sum(
            (m[r][j] * dj for j, dj in enumerate(d.coords) if dj != 0), Fraction(0)
        )
    return total


def curve_functional(c: CurClass) -> tuple[Rat, ...]:
    """The linear functional f on divisor coordinates with f . d = pair(d, c)."""
    m = pairing_table(c.surface, c.space).matrix
    dim = divisor_rank(c.surface, c.space)
    return tuple(
        sum((c.coords[r] * m[r][j] for r in range(len(c.coords))), Fraction(0))
        for j in range(dim)
    )


# ---------------------------------------------------------------------------
# Derived curve families
# ---------------------------------------------------------------------------

GammaVec = Union[int, Rat, Sequence]


def _coerce_gamma(surface: SurfaceModel, gamma: GammaVec) -> tuple[Rat, ...]:
    """Curve class on X as coefficients in the H_i basis.  Coefficients may
    be negative (e.g. the negative section E = H - iF on a Hirzebruch
    surface)."""
    if isinstance(gamma, (int, Fraction, str)):
        if surface.rank != 1:
            raise SpaceMismatch(
                f"{surface} has rank {surface.rank}; pass a length-{surface.rank} vector"
            )
        return (rat(gamma),)
    out = tuple(rat(x) for x in gamma)
    if len(out) != surface.rank:
        raise SpaceMismatch(f"expected {surface.rank} curve coefficients, got {len(out)}")
    return out


def _check_r(r: int, lo: int, hi: int, what: str) -> None:
    if not isinstance(r, int) or not (lo <= r <= hi):
        raise RangeError(f"{what} requires {lo} <= r <= {hi}, got r={r}")


def _combo(surface, space, gamma, a_side: bool, coeff_aa: Rat, coeff_ab: Rat = Fraction(0)):
    rho = surface.rank
    out = list(vzero(curve_rank(surface, space)))
    offset = 0 if a_side else rho
    if space.kind is SpaceKind.HILB:
        offset = 0
    for i, mi in enumerate(gamma):
        out[offset + i] += mi
    if space.kind is SpaceKind.HILB:
        out[rho] += coeff_aa  # A
    elif space.kind is SpaceKind.NESTED:
        out[2 * rho] += coeff_aa
        out[2 * rho + 1] += coeff_ab
    else:  # UNIV
        out[2 * rho] += coeff_aa
    return CurClass(surface, space, tuple(out))


def curve_family_a(surface: SurfaceModel, space: SpaceId, gamma: GammaVec, r: int) -> CurClass:
    """Moving-point curve family on the 'a' side (or the single family on a
    Hilbert scheme): one point of the configuration moves along a curve of
    class gamma while r points of the configuration lie on that curve."""
    mm = _coerce_gamma(surface, gamma)
    if space.kind is SpaceKind.HILB:
        _check_r(r, 1, space.n, "Hilb C_{gamma,r}")
        return _combo(surface, space, mm, True, Fraction(-(r - 1)))
    if space.kind is SpaceKind.NESTED:
        _check_r(r, 1, space.n + 1, "nested Ca_{gamma,r}")
        return _combo(surface, space, mm, True, Fraction(-(r - 1)))
    if space.kind is SpaceKind.UNIV:
        _check_r(r, 1, space.n - 1, "universal Ca_{gamma,r}")
        return _combo(surface, space, mm, True, Fraction(-r))
    raise SpaceMismatch(f"curve_family_a is not defined on {space}")


def curve_family_b(surface: SurfaceModel, space: SpaceId, gamma: GammaVec, r: int) -> CurClass:
    """Moving-point curve family on the 'b' side."""
    mm = _coerce_gamma(surface, gamma)
    if space.kind is SpaceKind.NESTED:
        _check_r(r, 1, space.n, "nested Cb_{gamma,r}")
        return _combo(surface, space, mm, False, Fraction(-r), Fraction(-(r - 1)))
    if space.kind is SpaceKind.UNIV:
        _check_r(r, 1, space.n, "universal Cb_{gamma,r}")
        return _combo(surface, space, mm, False, Fraction(-(r - 1)))
    raise SpaceMismatch(f"curve_family_b is not defined on {space}")


def curve_family_b_alt(surface: SurfaceModel, space: SpaceId, gamma: GammaVec, r: int) -> CurClass:
    """Constant-Aa-coefficient variant of the nested 'b' family:
    sum m_i Cb_i - Aa - (r-1) Ab.

    This convention appears in some legacy tables; it agrees with
    `curve_family_b` at r = 1 but violates the pushforward identity for
    r >= 2.  Kept for decoding those tables and for regression tests."""
    mm = _coerce_gamma(surface, gamma)
    if space.kind is not SpaceKind.NESTED:
        raise SpaceMismatch(f"curve_family_b_alt is only defined on nested spaces, not {space}")
    _check_r(r, 1, space.n, "nested alt Cb_{gamma,r}")
    return _combo(surface, space, mm, False, Fraction(-1), Fraction(-(r - 1)))


def curve_family_a_alt(surface: SurfaceModel, space: SpaceId, gamma: GammaVec, r: int) -> CurClass:
    """Variant of the universal-family 'a' curve with coefficient -(r-1) on
    Aa (marked point counted off the curve): sum m_i Ca_i - (r-1) Aa.

    Legacy tables index their universal-family curves this way; agrees with
    `curve_family_a` after shifting r by one."""
    mm = _coerce_gamma(surface, gamma)
    if space.kind is not SpaceKind.UNIV:
        raise SpaceMismatch(f"curve_family_a_alt is only defined on universal spaces, not {space}")
    _check_r(r, 1, space.n, "universal alt Ca_{gamma,r}")
    return _combo(surface, space, mm, True, Fraction(-(r - 1)))


def curve_family_c(surface: SurfaceModel, space: SpaceId, gamma: GammaVec, r: int) -> CurClass:
    """Diagonal-collision 'b'-side family: sum m_i Cb_i - (r-1)(Aa + Ab).

    The subscheme and the full configuration share the r-fold incidences
    symmetrically; used only as data when decoding legacy effective-cone
    tables."""
    mm = _coerce_gamma(surface, gamma)
    if space.kind is not SpaceKind.NESTED:
        raise SpaceMismatch(f"curve_family_c is only defined on nested spaces, not {space}")
    _check_r(r, 1, space.n, "nested Cc_{gamma,r}")
    return _combo(surface, space, mm, False, Fraction(-(r - 1)), Fraction(-(r - 1)))


# ---------------------------------------------------------------------------
# Nodal curves on K3 surfaces
# ---------------------------------------------------------------------------

def nodal_curves_k3(surface: SurfaceModel, space: SpaceId) -> tuple[CurClass, CurClass | None]:
    """Curve classes traced by a nodal genus-g curve in |H| on a K3 surface
    (requires n > g so the curve carries a g^1_n).

    Nested(n): Ca_nodal = Ca1 - (n+g) Aa,
               Cb_nodal = Cb1 - (n+g) Aa - (n-1+g) Ab.
    Hilb(n):   C_nodal  = C1 - (n-1+g) A (the g^1_n fiber class); second
               component of the return value is None.
    Univ(n):   Ca_nodal = Ca1 - (n-1+g) Aa, Cb_nodal = Cb1 - (n-1+g) Aa:
               the n-1+g collision count (2g at the nodes, n-2-g extra
               points of the scheme on the curve, one at the marked point)
               is the unique value dual to the extremal tautological ray.
    """
    g = surface.genus
    if g is None:
        raise NotK3(f"nodal curve classes require a K3 surface, got {surface}")
    n = space.n
    if space.kind is SpaceKind.SURFACE or n is None:
        raise SpaceMismatch(f"nodal curves live on hilb/nested/univ spaces, not {space}")
    if n <= g:
        raise RangeError(f"nodal curve classes require n > g, got n={n}, g={g}")
    if space.kind is SpaceKind.HILB:
        c = curve(surface, space, "C1") - Fraction(n - 1 + g) * curve(surface, space, "A")
        return c, None
    if space.kind is SpaceKind.NESTED:
        aa = curve(surface, space, "Aa")
        ab = curve(surface, space, "Ab")
        ca = curve(surface, space, "Ca1") - Fraction(n + g) * aa
        cb = curve(surface, space, "Cb1") - Fraction(n + g) * aa - Fraction(n - 1 + g) * ab
        return ca, cb
    aa = curve(surface, space, "Aa")
    ca = curve(surface, space, "Ca1") - Fraction(n - 1 + g) * aa
    cb = curve(surface, space, "Cb1") - Fraction(n - 1 + g) * aa
    return ca, cb


def g1n_curve(surface: SurfaceModel, space: SpaceId) -> CurClass:
    """Fiber class of a g^1_n on a genus-g curve in |H|, as a Hilbert-scheme
    curve class; alias of the Hilb nodal curve."""
    if space.kind is not SpaceKind.HILB:
        raise SpaceMismatch(f"the g^1_n class lives on Hilbert schemes, not {space}")
    return nodal_curves_k3(surface, space)[0]


def k3_extremal_slope(g: int, m: int) -> Rat:
    """f(m) = (m - 1 + g) / (2g - 2): slope of the extremal tautological nef
    ray on the Hilbert scheme of a genus-g K3 surface."""
    return Fraction(m - 1 + g, 2 * g - 2)


# ---------------------------------------------------------------------------
# Reconstruction from prescribed pairings
# ---------------------------------------------------------------------------

def class_from_pairings(
    surface: SurfaceModel,
    space: SpaceId,
    rows: Sequence[tuple[Union[DivClass, str], Rat]],
) -> CurClass:
    """The unique curve class pairing to the prescribed values against the
    given divisors (labels are resolved to unit basis divisors)."""
    from .spaces import divisor as basis_divisor

    m = pairing_table(surface, space).matrix
    nrows = []
    vals = []
    for d, v in rows:
        if isinstance(d, str):
            d = basis_divisor(surface, space, d)
        if d.surface != surface or d.space != space:
            raise SpaceMismatch("prescribed divisor lives on a different space")
        nrows.append(linalg.matvec(m, d.coords))
        vals.append(rat(v))
    sol = linalg.solve_unique(nrows, vals)
    return CurClass(surface, space, tuple(sol))


def divisor_from_pairings(
    surface: SurfaceModel,
    space: SpaceId,
    rows: Sequence[tuple[Union[CurClass, str], Rat]],
) -> DivClass:
    """The unique divisor class pairing to the prescribed values against the
    given curves (labels are resolved to unit basis curves)."""
    nrows = []
    vals = []
    for c, v in rows:
        if isinstance(c, str):
            c = curve(surface, space, c)
        if c.surface != surface or c.space != space:
            raise SpaceMismatch("prescribed curve lives on a different space")
        nrows.append(list(curve_functional(c)))
        vals.append(rat(v))
    sol = linalg.solve_unique(nrows, vals)
    return DivClass(surface, space, tuple(sol))


# ---------------------------------------------------------------------------
# Pushforwards
# ---------------------------------------------------------------------------

def pushforward_a(c: CurClass) -> CurClass:
    """Pushforward of a curve class along pr_a.

    Nested(n) -> Hilb(n+1): Ca_i, Cb_i -> C_i; Aa -> A; Ab -> 0.
    Univ(n)   -> Hilb(n):   Ca_i, Cb_i -> C_i; Aa -> A.
    """
    s = c.surface
    rho = s.rank
    if c.space.kind is SpaceKind.NESTED:
        target = hilb(c.space.n + 1)
        out = list(vzero(curve_rank(s, target)))
        for i in range(rho):
            out[i] += c.coords[i] + c.coords[rho + i]
        out[rho] += c.coords[2 * rho]  # Aa -> A
        return CurClass(s, target, tuple(out))
    if c.space.kind is SpaceKind.UNIV:
        target = hilb(c.space.n)
        out = list(vzero(curve_rank(s, target)))
        for i in range(rho):
            out[i] += c.coords[i] + c.coords[rho + i]
        out[rho] += c.coords[2 * rho]
        return CurClass(s, target, tuple(out))
    raise SpaceMismatch(f"pushforward_a is defined on nested/universal spaces, not {c.space}")


def pushforward_b(c: CurClass) -> CurClass:
    """Pushforward of a curve class along pr_b.

    Nested(n), n >= 2 -> Hilb(n): Cb_i -> C_i; Ab -> A; Ca_i, Aa -> 0.
    Nested(1) -> Surface (X^[1] = X): Cb_i -> H_i; everything else -> 0.
    Univ(n) -> Surface: Cb_i -> H_i; Ca_i, Aa -> 0.
    """
    s = c.surface
    rho = s.rank
    if c.space.kind is SpaceKind.NESTED:
        if c.space.n == 1:
            target = surface_space()
            out = list(vzero(curve_rank(s, target)))
            for i in range(rho):
                out[i] += c.coords[rho + i]
            return CurClass(s, target, tuple(out))
        target = hilb(c.space.n)
        out = list(vzero(curve_rank(s, target)))
        for i in range(rho):
            out[i] += c.coords[rho + i]
        out[rho] += c.coords[2 * rho + 1]  # Ab -> A
        return CurClass(s, target, tuple(out))
    if c.space.kind is SpaceKind.UNIV:
        target = surface_space()
        out = list(vzero(curve_rank(s, target)))
        for i in range(rho):
            out[i] += c.coords[rho + i]
        return CurClass(s, target, tuple(out))
    raise SpaceMismatch(f"pushforward_b is defined on nested/universal spaces, not {c.space}")
