"""Hirzebruch-Jung continued fractions, chains, and fraction types.

A chain is a string of rational curves E_1 - E_2 - ... - E_l with
self-intersections -s_i <= -2; its data is equivalent to a reduced
fraction a/b > 1 through the negative-regular continued fraction

    a/b = s_1 - 1/(s_2 - 1/(... - 1/s_l)).

The degenerate fraction 1/1 corresponds to a single (-1)-curve; it is
kept as the one-entry marker chain (1,) because several constructions
produce it and then drop it before assembling a matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import EntryTooSmall, GcdNotOne, NotAChain, NotReduced
from .matrix import IntersectionMatrix, validate

ChainSpec = tuple[int, ...]

MARKER = (1,)


def _to_fraction(f: Fraction | tuple[int, int] | int) -> Fraction:
    if isinstance(f, Fraction):
        return f
    if isinstance(f, int):
        return Fraction(f)
    a, b = f
    if b < 1 or gcd(a, b) != 1:
        raise NotReduced(f"{a}/{b} is not a reduced fraction with b >= 1")
    return Fraction(a, b)


def cf_expand(f: Fraction | tuple[int, int] | int) -> ChainSpec:
    """Expand a/b >= 1 into its chain [s_1, ..., s_l].

    Every entry is >= 2 except for cf_expand(1) == (1,), the marker for
    a single (-1)-curve.  Raises NotReduced unless a >= b >= 1 with
    gcd(a, b) = 1.
    """
    frac = _to_fraction(f)
    a, b = frac.numerator, frac.denominator
    if not a >= b >= 1:
        raise NotReduced(f"{a}/{b} is not >= 1")
    if a == 1:
        return MARKER
    out = []
    while b:
        s = -(-a // b)  # ceil(a/b)
        out.append(s)
        # a/b = s - 1/x  with  x = b/(s*b - a)
        a, b = b, s * b - a
    return tuple(out)


def cf_evaluate(chain: Sequence[int]) -> Fraction | None:
    """Evaluate a chain back to its fraction a/b.

    The empty chain stands for an absent branch and carries no fraction,
    so it evaluates to None.  The marker (1,) evaluates to 1.
    """
    chain = tuple(chain)
    if not chain:
        return None
    if chain == MARKER:
        return Fraction(1)
    _check_entries(chain)
    value = Fraction(chain[-1])
    for s in reversed(chain[:-1]):
        value = s - 1 / value
    return value


def _check_entries(chain: ChainSpec) -> None:
    for s in chain:
        if s < 2:
            raise EntryTooSmall(f"chain entry {s} < 2 (only (1,) may appear alone)")


def chain_matrix(chain: Sequence[int]) -> IntersectionMatrix:
    """The tridiagonal intersection matrix of a chain.

    chain_matrix((1,)) is the 1 x 1 matrix (-1); every other input must
    have all entries >= 2.
    """
    chain = tuple(chain)
    if not chain:
        raise EntryTooSmall("empty chain has no matrix")
    if chain != MARKER:
        _check_entries(chain)
    n = len(chain)
    rows = []
    for i, s in enumerate(chain):
        row = [0] * n
        row[i] = -s
        if i > 0:
            row[i - 1] = 1
        if i + 1 < n:
            row[i + 1] = 1
        rows.append(row)
    return validate(rows)


def _chain_entries(m: IntersectionMatrix | Sequence[Sequence[int]]) -> ChainSpec:
    entries = m.entries if isinstance(m, IntersectionMatrix) else tuple(
        tuple(r) for r in m
    )
    n = len(entries)
    for i in range(n):
        if entries[i][i] > -2:
            raise NotAChain(f"vertex {i} has self-intersection {entries[i][i]} > -2")
        for j in range(i + 1, n):
            expected = 1 if j == i + 1 else 0
            if entries[i][j] != expected or entries[j][i] != expected:
                raise NotAChain("matrix is not tridiagonal in the given order")
    return tuple(-entries[i][i] for i in range(n))


def chain_solution(
    m: IntersectionMatrix | Sequence[Sequence[int]],
) -> tuple[int, tuple[int, ...]]:
    """Solve N R = -(r_0, 0, ..., 0) over the integers for a chain N.

    Write [s_1, ..., s_l] for the chain.  The backward recursion
    r_{i-1} = s_i r_i - r_{i+1}, seeded with r_{l+1} = 0 and r_l = 1,
    produces r_0 > r_1 > ... > r_l = 1 with r_0 = |det N| and
    a/b = r_0/r_1 the chain's fraction.  Returns (r_0, (r_1, ..., r_l)).

    Raises NotAChain unless the matrix is tridiagonal with every
    diagonal entry <= -2 (the (-1) marker does not qualify).
    """
    s = _chain_entries(m)
    after, here = 0, 1
    rs = [1]
    for si in reversed(s[1:]):
        after, here = here, si * here - after
        rs.append(here)
    r0 = s[0] * here - after
    rs.reverse()
    return r0, tuple(rs)


def hj_fraction_type(t: int, r: int, s: int) -> Fraction:
    """The fraction type of the triple (t, r, s), in [0, 1).

    The triple encodes the hypersurface W^t = U^r V^s; the type
    classifies its normalization.  Type 0 means the normalization is
    regular; otherwise the type is (t'-e)/t' where, after the reduction
    below, e is the unique residue with e*r' == s' (mod t'), and the
    exceptional chain of the resolution is cf_expand of the reciprocal
    1/type = t'/(t'-e), read with the U-side vertex first.

    Reduction loop: first reduce r and s mod t (a zero means type 0);
    then with h = gcd(t, r) and h' = gcd(t, s), the type is 0 when
    t/h' divides r or t/h divides s, and otherwise the triple reduces
    to (t/(h h'), r/h, s/h'), which strictly shrinks t until h = h' = 1.

    Raises GcdNotOne unless gcd(t, r, s) = 1.
    """
    if t < 1 or r < 0 or s < 0:
        raise GcdNotOne(f"({t}, {r}, {s}) is not an admissible triple")
    if gcd(gcd(t, r), s) != 1:
        raise GcdNotOne(f"gcd({t}, {r}, {s}) != 1")
    while True:
        r %= t
        s %= t
        if r == 0 or s == 0:
            return Fraction(0)
        h = gcd(t, r)
        hp = gcd(t, s)
        if h == 1 and hp == 1:
            break
        if r % (t // hp) == 0 or s % (t // h) == 0:
            return Fraction(0)
        # h and h' are coprime (a common factor would divide t, r and s),
        # so h h' divides t.
        t //= h * hp
        r //= h
        s //= hp
    e = (s * pow(r, -1, t)) % t
    return Fraction(t - e, t)


def type_chain(fraction_type: Fraction) -> ChainSpec:
    """The exceptional chain belonging to a fraction type.

    Type 0 resolves to nothing (empty chain); type (t-e)/t to the chain
    of t/(t-e), whose first vertex sits on the U side.
    """
    if fraction_type == 0:
        return ()
    return cf_expand(1 / fraction_type)
