"""Smith normal form and discriminant groups.

For a nonsingular intersection matrix N, the discriminant group is
Phi = Z^n / N Z^n, a finite abelian group of order |det N|.  Its
invariant factors are the nontrivial diagonal entries of the Smith
normal form U N V = D, and the transform U converts questions about
classes of lattice vectors into divisibility against the d_j:

    k * v lies in N Z^n   iff   d_j divides k * (U v)_j for every j,

so the order of the class of v is lcm_j d_j / gcd(d_j, (U v)_j).

Elimination works on sparse rows with the pivot chosen as the smallest
nonzero entry (ties by lowest row, then column); transform tracking is
optional so that bulk group computations skip it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .errors import IndexOutOfRange, InternalDisagreement
from .matrix import IntersectionMatrix, exact_determinant

IntRows = list[list[int]]


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group given by its invariant factors d_1 | d_2 | ...

    Only nontrivial factors (>= 2) are stored; the trivial group has an
    empty tuple.
    """

    divisors: tuple[int, ...]

    @property
    def order(self) -> int:
        result = 1
        for d in self.divisors:
            result *= d
        return result

    @property
    def exponent(self) -> int:
        return self.divisors[-1] if self.divisors else 1

    @property
    def is_trivial(self) -> bool:
        return not self.divisors

    def is_killed_by(self, m: int) -> bool:
        """True when m * Phi = 0, i.e. the exponent divides m."""
        return m % self.exponent == 0

    def to_dict(self) -> dict[str, list[int]]:
        return {"divisors": list(self.divisors)}


def _entries(m: IntersectionMatrix | Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if isinstance(m, IntersectionMatrix):
        return m.entries
    return tuple(tuple(int(v) for v in row) for row in m)


class _Eliminator:
    """Sparse Smith elimination with optional unimodular transforms."""

    def __init__(self, entries: Sequence[Sequence[int]], transforms: bool):
        self.n = len(entries)
        self.rows: list[dict[int, int]] = [
            {j: v for j, v in enumerate(row) if v} for row in entries
        ]
        self.cols: list[set[int]] = [set() for _ in range(self.n)]
        for i, row in enumerate(self.rows):
            for j in row:
                self.cols[j].add(i)
        if transforms:
            self.U: IntRows | None = [
                [int(i == j) for j in range(self.n)] for i in range(self.n)
            ]
            self.V: IntRows | None = [
                [int(i == j) for j in range(self.n)] for i in range(self.n)
            ]
        else:
            self.U = None
            self.V = None

    # every mutation below keeps self.cols in sync with self.rows

    def _set(self, i: int, j: int, v: int) -> None:
        if v:
            self.rows[i][j] = v
            self.cols[j].add(i)
        else:
            if self.rows[i].pop(j, None) is not None:
                self.cols[j].discard(i)

    def swap_rows(self, i: int, k: int) -> None:
        if i == k:
            return
        for j in set(self.rows[i]) | set(self.rows[k]):
            has_i = i in self.cols[j]
            has_k = k in self.cols[j]
            if has_i != has_k:
                self.cols[j].symmetric_difference_update({i, k})
        self.rows[i], self.rows[k] = self.rows[k], self.rows[i]
        if self.U is not None:
            self.U[i], self.U[k] = self.U[k], self.U[i]

    def swap_cols(self, j: int, k: int) -> None:
        if j == k:
            return
        for i in self.cols[j] | self.cols[k]:
            row = self.rows[i]
            vj, vk = row.pop(j, 0), row.pop(k, 0)
            if vj:
                row[k] = vj
            if vk:
                row[j] = vk
        self.cols[j], self.cols[k] = self.cols[k], self.cols[j]
        if self.V is not None:
            for row in self.V:
                row[j], row[k] = row[k], row[j]

    def add_row(self, i: int, k: int, q: int) -> None:
        """row_i += q * row_k"""
        if not q:
            return
        rowk = self.rows[k]
        for j, v in list(rowk.items()):
            self._set(i, j, self.rows[i].get(j, 0) + q * v)
        if self.U is not None:
            ui, uk = self.U[i], self.U[k]
            for j in range(self.n):
                ui[j] += q * uk[j]

    def add_col(self, j: int, k: int, q: int) -> None:
        """col_j += q * col_k"""
        if not q:
            return
        for i in list(self.cols[k]):
            self._set(i, j, self.rows[i].get(j, 0) + q * self.rows[i][k])
        if self.V is not None:
            for row in self.V:
                row[j] += q * row[k]

    def negate_row(self, i: int) -> None:
        for j in self.rows[i]:
            self.rows[i][j] = -self.rows[i][j]
        if self.U is not None:
            self.U[i] = [-v for v in self.U[i]]

    def smallest_entry(self, start: int) -> tuple[int, int] | None:
        """Position of the smallest-|value| active entry, ties by (row, col)."""
        best: tuple[int, int, int] | None = None
        for i in range(start, self.n):
            row_best: tuple[int, int] | None = None
            for j, v in self.rows[i].items():
                if j < start:
                    continue
                key = (abs(v), j)
                if row_best is None or key < row_best:
                    row_best = key
            if row_best is not None:
                key3 = (row_best[0], i, row_best[1])
                if best is None or key3 < best:
                    best = key3
                # rows are visited in order, so once a unit shows up no
                # later row can win the (|value|, row, col) tie-break
                if best[0] == 1:
                    return best[1], best[2]
        if best is None:
            return None
        return best[1], best[2]

    def run(self) -> list[int]:
        diag: list[int] = []
        for t in range(self.n):
            pos = self.smallest_entry(t)
            if pos is None:
                diag.extend([0] * (self.n - t))
                break
            self.swap_rows(t, pos[0])
            self.swap_cols(t, pos[1])
            if self.rows[t][t] < 0:
                self.negate_row(t)
            while True:
                piv = self.rows[t][t]
                # clear column t; a nonzero remainder becomes the new,
                # strictly smaller pivot, so this loop terminates
                restarted = False
                for i in sorted(self.cols[t]):
                    if i <= t:
                        continue
                    q = self.rows[i][t] // piv
                    self.add_row(i, t, -q)
                    if t in self.rows[i]:
                        self.swap_rows(t, i)
                        if self.rows[t][t] < 0:
                            self.negate_row(t)
                        restarted = True
                        break
                if restarted:
                    continue
                piv = self.rows[t][t]
                for j in sorted(self.rows[t]):
                    if j <= t:
                        continue
                    q = self.rows[t][j] // piv
                    self.add_col(j, t, -q)
                    if j in self.rows[t]:
                        self.swap_cols(t, j)
                        restarted = True
                        break
                if restarted:
                    continue
                # row and column are clear; enforce that the pivot
                # divides the rest of the matrix before moving on, which
                # makes the final diagonal a divisibility chain
                piv = self.rows[t][t]
                offender = None
                for i in range(t + 1, self.n):
                    for j, v in self.rows[i].items():
                        if j > t and v % piv:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                self.add_row(t, offender, 1)
            diag.append(self.rows[t][t])
        return diag


def _smith(
    entries: Sequence[Sequence[int]], transforms: bool
) -> tuple[IntRows | None, list[int], IntRows | None]:
    elim = _Eliminator(_entries(entries), transforms)
    diag = elim.run()
    return elim.U, diag, elim.V


def _matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntRows:
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i, row in enumerate(a):
        out_i = out[i]
        for t, v in enumerate(row):
            if v:
                brow = b[t]
                for j in range(m):
                    if brow[j]:
                        out_i[j] += v * brow[j]
    return out


def smith_normal_form(
    m: IntersectionMatrix | Sequence[Sequence[int]],
) -> tuple[IntRows, IntRows, IntRows]:
    """U, D, V with U m V = D diagonal, d_1 | d_2 | ..., U, V unimodular.

    The factorization is re-verified before returning: U m V is
    recomputed and compared with D, and both transforms must have
    determinant +-1.  A failure raises InternalDisagreement since it can
    only come from a bug, not from bad input.
    """
    entries = _entries(m)
    u, diag, v = _smith(entries, transforms=True)
    assert u is not None and v is not None
    n = len(entries)
    d = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
    check = _matmul(_matmul(u, [list(r) for r in entries]), v)
    if check != d:
        raise InternalDisagreement("U M V does not equal D")
    if abs(exact_determinant(u)) != 1 or abs(exact_determinant(v)) != 1:
        raise InternalDisagreement("transform determinant is not a unit")
    return u, d, v


def elementary_divisors(m: IntersectionMatrix | Sequence[Sequence[int]]) -> list[int]:
    """All n diagonal entries of the Smith form (including 1s and 0s)."""
    _, diag, _ = _smith(_entries(m), transforms=False)
    return [abs(d) for d in diag]


def discriminant_group(m: IntersectionMatrix | Sequence[Sequence[int]]) -> AbelianGroup:
    """Z^n / m Z^n for nonsingular m, as its invariant factor tuple."""
    divisors = tuple(d for d in elementary_divisors(m) if d != 1)
    assert 0 not in divisors, "matrix is singular"
    return AbelianGroup(divisors)


def class_orders(m: IntersectionMatrix | Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Orders of the classes of all basis vectors, from one Smith run."""
    entries = _entries(m)
    n = len(entries)
    u, diag, _ = _smith(entries, transforms=True)
    assert u is not None
    out = []
    for i in range(n):
        order = 1
        for j in range(n):
            d = abs(diag[j])
            assert d != 0, "matrix is singular"
            order = lcm(order, d // gcd(d, u[j][i]))
        out.append(order)
    return tuple(out)


def class_order(m: IntersectionMatrix | Sequence[Sequence[int]], i: int) -> int:
    """Order of the class of the i-th basis vector in the discriminant group."""
    entries = _entries(m)
    n = len(entries)
    if not 0 <= i < n:
        raise IndexOutOfRange(f"vertex index {i} not in 0..{n - 1}")
    return class_orders(entries)[i]


def in_image(m: IntersectionMatrix | Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    """Whether an integer vector lies in m Z^n."""
    entries = _entries(m)
    u, diag, _ = _smith(entries, transforms=True)
    assert u is not None
    for j in range(len(entries)):
        value = sum(u[j][k] * vector[k] for k in range(len(vector)))
        d = abs(diag[j])
        if d == 0:
            if value != 0:
                return False
        elif value % d:
            return False
    return True


def is_p_elementary(m: IntersectionMatrix | Sequence[Sequence[int]], p: int) -> bool:
    """True when the discriminant group is killed by the prime p.

    Equivalent to every invariant factor being exactly p; vacuously true
    for the trivial group.
    """
    return all(d == p for d in discriminant_group(m).divisors)
