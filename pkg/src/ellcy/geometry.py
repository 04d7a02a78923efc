"""Intersection-theoretic skeleton of the threefold.

Houses the constant pairing and triple-intersection tables for the basis
line bundles L1, L2, L3 against the curve classes C, F, E, the splitting
of the rational elliptic surface lattice with its pushforward to the
threefold, effectivity testing against the negative-definite E8 Gram,
bordered-Gram discriminants of Noether-Lefschetz indices, and the
Euler-characteristic bookkeeping of the Weierstrass model.

Everything here is exact integer arithmetic on small constant tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def _det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class LatticeGram:
    """Integer Gram matrix of a lattice of the given rank."""

    rank: int
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        if len(g) != self.rank or any(len(r) != self.rank for r in g):
            raise ValueError("Gram matrix shape does not match the rank")
        for i in range(self.rank):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    def det(self) -> int:
        return _det(self.gram)

    def dot(self, v: Sequence[int], w: Sequence[int]) -> int:
        """Bilinear pairing of two coordinate vectors."""
        return sum(v[i] * self.gram[i][j] * w[j]
                   for i in range(self.rank) for j in range(self.rank))

    def norm(self, v: Sequence[int]) -> int:
        return self.dot(v, v)


@dataclass(frozen=True)
class CurveClass:
    """Integer coordinates of a curve class in the basis {C, E, F}."""

    c: int = 0
    e: int = 0
    f: int = 0

    def __add__(self, other: "CurveClass") -> "CurveClass":
        return CurveClass(self.c + other.c, self.e + other.e, self.f + other.f)

    def __mul__(self, k: int) -> "CurveClass":
        return CurveClass(k * self.c, k * self.e, k * self.f)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.c == self.e == self.f == 0

    def label(self) -> str:
        parts = []
        for coef, sym in ((self.c, "C"), (self.f, "F"), (self.e, "E")):
            if coef == 0:
                continue
            if coef == 1:
                parts.append(sym)
            else:
                parts.append(f"{coef}{sym}")
        return "+".join(parts).replace("+-", "-") if parts else "0"


@dataclass(frozen=True)
class Gamma19Class:
    """Class a*H + sum b_i*C_i on the rational elliptic surface."""

    a: int
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.b) != 9:
            raise ValueError("expected 9 exceptional-curve coefficients")


@dataclass(frozen=True)
class NLIndex:
    """Index (h; d_1, ..., d_r) of a Noether-Lefschetz divisor."""

    h: int
    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if self.h < 0:
            raise ValueError("h must be non-negative")


# Pairing <L_i, beta> of the basis line bundles with the curve classes,
# columns ordered (C, F, E).
_PAIRING = ((-1, -2, 1),
            (-1, 1, 0),
            (1, 0, 0))

# Triple intersections of L_i, L_j, L_k, stored for sorted (i, j, k).
_TRIPLE = {
    (1, 1, 1): 8, (1, 1, 2): -1, (1, 1, 3): -2,
    (1, 2, 2): -1, (1, 2, 3): 1, (1, 3, 3): 0,
    (2, 2, 2): 0, (2, 2, 3): 0, (2, 3, 3): 0,
    (3, 3, 3): 0,
}

# Negative of the E8 Cartan matrix: the even unimodular negative-definite
# Gram in the simple-root basis (node 8 attached to node 5).
E8_GRAM = LatticeGram(8, (
    (-2, 1, 0, 0, 0, 0, 0, 0),
    (1, -2, 1, 0, 0, 0, 0, 0),
    (0, 1, -2, 1, 0, 0, 0, 0),
    (0, 0, 1, -2, 1, 0, 0, 0),
    (0, 0, 0, 1, -2, 1, 0, 1),
    (0, 0, 0, 0, 1, -2, 1, 0),
    (0, 0, 0, 0, 0, 1, -2, 0),
    (0, 0, 0, 0, 1, 0, 0, -2),
))

# Restriction of L1, L2 to a K3 fibre: the rank-2 polarizing lattice.
K3_POLARIZATION = LatticeGram(2, ((-2, 1), (1, 0)))

# Stored constants (computed via Mordell-Weil rank in the literature).
H11 = 3
H21 = 243


def pairing_matrix() -> tuple[tuple[int, ...], ...]:
    """The 3x3 table <L_i, beta> for beta in (C, F, E); determinant -1."""
    return _PAIRING


def pair(i: int, beta: CurveClass) -> int:
    """Pairing of L_i (i in 1..3) with a curve class."""
    if i not in (1, 2, 3):
        raise ValueError("line-bundle index must be 1, 2 or 3")
    row = _PAIRING[i - 1]
    return row[0] * beta.c + row[1] * beta.f + row[2] * beta.e


def class_to_degrees(beta: CurveClass) -> tuple[int, int]:
    """Degrees (d1, d2) of a curve class against L1, L2."""
    return pair(1, beta), pair(2, beta)


def triple_intersection(i: int, j: int, k: int) -> int:
    """Triple intersection number of L_i, L_j, L_k (symmetric lookup)."""
    key = tuple(sorted((i, j, k)))
    if key not in _TRIPLE:
        raise ValueError(f"indices {(i, j, k)} out of range 1..3")
    return _TRIPLE[key]


def pushforward(gamma: Gamma19Class) -> CurveClass:
    """Image in H_2 of the threefold of a class on the elliptic surface.

    H maps to 3(C+E), the section class C_0 to C, and each remaining
    exceptional curve C_i (i >= 1) to C+E; the fibre-class coordinate of
    the image is always zero.
    """
    b0 = gamma.b[0]
    rest = sum(gamma.b[1:])
    c = 3 * gamma.a + b0 + rest
    e = 3 * gamma.a + rest
    return CurveClass(c=c, e=e, f=0)


def is_effective(n: int, lam: Sequence[int]) -> bool:
    """Effectivity of C'' + n E'' + lambda on the rational elliptic surface.

    lam is given in the simple-root coordinates of E8_GRAM (negative
    definite); the class is effective iff lam.lam >= -2n.
    """
    if len(lam) != 8:
        raise ValueError("expected 8 E8 coordinates")
    return E8_GRAM.norm(lam) >= -2 * n


def nl_discriminant(lattice: LatticeGram, idx: NLIndex) -> int:
    """Discriminant of a Noether-Lefschetz index over a polarizing lattice.

    (-1)^r times the determinant of the Gram matrix bordered by the row
    and column (d_1, ..., d_r, 2h - 2).
    """
    r = lattice.rank
    if len(idx.d) != r:
        raise ValueError("degree vector length must equal the lattice rank")
    bordered = [list(lattice.gram[i]) + [idx.d[i]] for i in range(r)]
    bordered.append(list(idx.d) + [2 * idx.h - 2])
    return (-1) ** r * _det(bordered)


@dataclass(frozen=True)
class EulerData:
    """Euler-characteristic bookkeeping of the Weierstrass discriminant."""

    l_squared: int
    deg_K_delta: int
    cusps: int
    e_delta: int
    e_X: int


def euler_characteristic(l_squared: int) -> EulerData:
    """Euler characteristic of the threefold, parameterized by L.L.

    deg K of the discriminant curve is 11*12*(L.L), the cusp count is
    4*6*(L.L), e(discriminant) = -deg K + 2*cusps, and resolving nodes
    and cusps gives e(X) = e(discriminant) + cusps.
    """
    if l_squared < 1:
        raise ValueError("L.L must be a positive integer")
    deg_k = 11 * 12 * l_squared
    cusps = 4 * 6 * l_squared
    e_delta = -deg_k + 2 * cusps
    return EulerData(l_squared, deg_k, cusps, e_delta, e_delta + cusps)


def blowup_degree(r: int) -> int:
    """Degree of the blow-up of the plane at r generic points.

    K.K = 9 on the plane; each exceptional curve contributes E.E = -1.
    """
    if not 0 <= r <= 8:
        raise ValueError("the number of blown-up points must be 0..8")
    return 9 + r * (-1)


@dataclass(frozen=True)
class WeierstrassDegrees:
    g2_deg: int
    g3_deg: int
    delta_deg: int


def weierstrass_degrees() -> WeierstrassDegrees:
    """Plane degrees of g2 in 4L, g3 in 6L and the discriminant in 12L.

    L = 3H - E has degree 3 as a plane curve class.
    """
    l_deg = 3
    return WeierstrassDegrees(4 * l_deg, 6 * l_deg, 12 * l_deg)


def hodge_consistency() -> bool:
    """Euler characteristic vs Hodge numbers of the threefold.

    Checks e(X) = 2(h11 - h21) at L.L = 8 and that the Betti numbers of
    the Hodge diamond are B2 = h11 and B3 = 2 + 2*h21.
    """
    e_x = euler_characteristic(8).e_X
    return (e_x == 2 * (H11 - H21)
            and betti(2) == 3 and betti(3) == 488)


def betti(k: int) -> int:
    """Betti numbers of the threefold from its Hodge diamond."""
    table = {0: 1, 1: 0, 2: H11, 3: 2 + 2 * H21, 4: H11, 5: 0, 6: 1}
    if k not in table:
        raise ValueError("Betti index must be 0..6")
    return table[k]
