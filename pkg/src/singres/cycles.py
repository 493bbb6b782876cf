"""Cycles supported on the exceptional curves: fundamental, canonical,
Mumford pullbacks and correction terms.

Conventions.  For a validated intersection matrix N with vertex set
0..n-1, a cycle is a vector of multiplicities.  The fundamental cycle is
the smallest Z > 0 with (N Z)_i <= 0 everywhere; the canonical cycle is
the rational solution K of N K = H0 with H0_i = -c_ii - 2 (adjunction
against rational curves); the singularity is numerically Gorenstein
exactly when K is integral.  The fundamental genus is

    1 + (Z^2 + K . Z) / 2,    with K . Z computed as H0 . Z,

which needs no division by det N and is always an integer for valid
input (Z_i(Z_i + 1) c_ii is even term by term).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import (
    EmptyKeep,
    IndexOutOfRange,
    InternalDisagreement,
    NonIntegralGenus,
    NotATree,
)
from .lattice import class_orders
from .matrix import IntersectionMatrix, exact_determinant, require_connected, to_dual_graph

Cycle = tuple[int, ...]
RationalCycle = tuple[Fraction, ...]


def _solve(rows: Sequence[Sequence[int]], rhs: Sequence[Fraction | int]) -> list[Fraction]:
    """Solve rows * x = rhs exactly; the system must be nonsingular."""
    n = len(rows)
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for k in range(n):
        pivot_row = next(i for i in range(k, n) if a[i][k])
        a[k], a[pivot_row] = a[pivot_row], a[k]
        piv = a[k][k]
        for i in range(n):
            if i != k and a[i][k]:
                factor = a[i][k] / piv
                ai, ak = a[i], a[k]
                for j in range(k, n + 1):
                    ai[j] -= factor * ak[j]
    return [a[i][n] / a[i][i] for i in range(n)]


def pairing(m: IntersectionMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    """The intersection pairing x . y = x^T N y."""
    total = 0
    for i, row in enumerate(m.entries):
        if x[i]:
            total += x[i] * sum(row[j] * y[j] for j in range(m.n) if y[j])
    return total


def _h0(m: IntersectionMatrix) -> list[int]:
    return [-m.entries[i][i] - 2 for i in range(m.n)]


def fundamental_cycle(m: IntersectionMatrix) -> tuple[Cycle, int]:
    """The minimal positive cycle Z with N Z <= 0, plus its Z^2.

    Computed by the usual Laufer sequence: start from all ones and,
    while some (N Z)_i is positive, bump the lowest such i.  Each bump
    is forced for every cycle with N Z <= 0 above the current one, so
    the limit is the unique minimum.  Requires a connected dual graph.
    """
    require_connected(m)
    n = m.n
    entries = m.entries
    z = [1] * n
    nz = [sum(row) for row in entries]
    while True:
        for i in range(n):
            if nz[i] > 0:
                z[i] += 1
                for j in range(n):
                    if entries[j][i]:
                        nz[j] += entries[j][i]
                break
        else:
            break
    z_self = sum(z[i] * nz[i] for i in range(n))
    return tuple(z), z_self


def canonical_cycle(m: IntersectionMatrix) -> RationalCycle:
    """The rational cycle K with K . E_i = -E_i^2 - 2 for every i."""
    return tuple(_solve(m.entries, _h0(m)))


def fundamental_genus(m: IntersectionMatrix) -> int:
    """Arithmetic genus of the fundamental cycle, 1 + (Z^2 + K.Z)/2."""
    z, z_self = fundamental_cycle(m)
    h0 = _h0(m)
    twice = z_self + sum(z[i] * h0[i] for i in range(m.n))
    if twice % 2:
        raise NonIntegralGenus(f"Z^2 + K.Z = {twice} is odd")
    return 1 + twice // 2


@dataclass(frozen=True)
class GorensteinCertificate:
    """Evidence for a numerically-Gorenstein verdict.

    ``canonical`` is K itself; ``orders[i]`` is the order p_i of the
    class of e_i in the discriminant group; ``pairings[i]`` is
    g_i = R_i . H0 where R_i > 0 solves N R_i = -p_i e_i.  Since
    K_i = -g_i / p_i, integrality of K is equivalent to p_i | g_i for
    every i, which is the second, independently computed route.
    """

    gorenstein: bool
    canonical: RationalCycle
    orders: tuple[int, ...]
    pairings: tuple[int, ...]

    def to_dict(self) -> dict[str, object]:
        return {
            "numerically_gorenstein": self.gorenstein,
            "K": [[k.numerator, k.denominator] for k in self.canonical],
            "orders": list(self.orders),
            "pairings": list(self.pairings),
        }


def is_numerically_gorenstein(m: IntersectionMatrix) -> tuple[bool, GorensteinCertificate]:
    """Decide integrality of K two ways and cross-check.

    Route one solves N K = H0 and inspects denominators.  Route two
    computes, for each vertex, the order p_i of e_i's class and the
    positive integral solution R_i of N R_i = -p_i e_i; then p_i | R_i . H0
    is equivalent to K_i being an integer.  Any disagreement between the
    routes (or with the exponent-2 shortcut: a discriminant group killed
    by 2 forces a numerically Gorenstein verdict) raises
    InternalDisagreement, because it would mean a bug in one of them.
    """
    h0 = _h0(m)
    canonical = canonical_cycle(m)
    direct = all(k.denominator == 1 for k in canonical)

    orders = class_orders(m)
    pairings = []
    for i, p in enumerate(orders):
        rhs = [0] * m.n
        rhs[i] = -p
        r = _solve(m.entries, rhs)
        if any(x.denominator != 1 or x <= 0 for x in r):
            raise InternalDisagreement(
                f"N R = -{p} e_{i} has no positive integral solution"
            )
        pairings.append(sum(int(x) * h for x, h in zip(r, h0)))
    divisible = all(g % p == 0 for g, p in zip(pairings, orders))

    if direct != divisible:
        raise InternalDisagreement("canonical-cycle routes disagree")
    # the basis classes generate the group, so their orders' lcm is its
    # exponent; exponent <= 2 forces integrality of K
    exponent = lcm(*orders, 1)
    if exponent <= 2 and not direct:
        raise InternalDisagreement("group killed by 2 but K is not integral")
    certificate = GorensteinCertificate(
        gorenstein=direct,
        canonical=canonical,
        orders=tuple(orders),
        pairings=tuple(pairings),
    )
    return direct, certificate


def mumford_pullback(
    m: IntersectionMatrix, keep: Sequence[int]
) -> list[list[Fraction]]:
    """Rational intersection matrix of the kept curves after contracting
    the rest.

    For each kept vertex v, the pullback is e_v plus the rational
    combination of contracted curves that restores orthogonality against
    every contracted row; pairing pullbacks against kept basis vectors
    gives the |keep| x |keep| matrix, in the sorted order of ``keep``.
    """
    kept = sorted(set(int(i) for i in keep))
    if not kept:
        raise EmptyKeep("keep at least one vertex")
    for i in kept:
        if not 0 <= i < m.n:
            raise IndexOutOfRange(f"vertex index {i} not in 0..{m.n - 1}")
    contracted = [i for i in range(m.n) if i not in set(kept)]
    entries = m.entries
    if not contracted:
        return [[Fraction(entries[i][j]) for j in kept] for i in kept]
    sub = [[entries[i][j] for j in contracted] for i in contracted]
    pullbacks: list[dict[int, Fraction]] = []
    for v in kept:
        rhs = [-entries[c][v] for c in contracted]
        lam = _solve(sub, rhs)
        vec = {c: lam[t] for t, c in enumerate(contracted)}
        vec[v] = Fraction(1)
        pullbacks.append(vec)
    out = []
    for vec in pullbacks:
        row = []
        for w in kept:
            # pullback . e_w under N; the contracted part of row w plus
            # the kept unit contribution
            value = sum(coeff * entries[i][w] for i, coeff in vec.items())
            row.append(Fraction(value))
        out.append(row)
    return out


def correction_terms(m: IntersectionMatrix, v: int) -> list[Fraction]:
    """Correction term of each branch of the tree at vertex v.

    For each connected component D of the graph minus v, with w the
    unique vertex of D adjacent to v, the term is -det(N'_D)/det(N_D)
    where N_D is the submatrix on D and N'_D drops w (det of the empty
    matrix is 1).  For a chain branch of fraction a/b attached at its
    first vertex the term is exactly b/a.  Components are ordered by
    their smallest vertex index.  Requires the dual graph to be a tree.
    """
    if not 0 <= v < m.n:
        raise IndexOutOfRange(f"vertex index {v} not in 0..{m.n - 1}")
    graph = to_dual_graph(m)
    if not graph.is_tree:
        raise NotATree("correction terms need a tree dual graph")
    entries = m.entries
    terms = []
    for comp in graph.components(exclude=frozenset({v})):
        attach = [w for w in comp if entries[v][w]]
        assert len(attach) == 1, "tree guarantees a unique attaching vertex"
        w = attach[0]
        sub = [[entries[i][j] for j in comp] for i in comp]
        rest = [i for i in comp if i != w]
        sub_minus = [[entries[i][j] for j in rest] for i in rest]
        det_d = exact_determinant(sub)
        det_minus = exact_determinant(sub_minus) if rest else 1
        terms.append(Fraction(-det_minus, det_d))
    return terms
