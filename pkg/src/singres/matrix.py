"""Intersection matrices of resolutions, with exact integer arithmetic.

An intersection matrix is a symmetric negative-definite integer matrix
with every diagonal entry <= -1 and every off-diagonal entry >= 0.  The
entry c_ij (i != j) counts intersection points of the curves E_i and E_j,
so the matrix doubles as the adjacency matrix (with multiplicities) of
the dual graph.

Everything here is exact: determinants and leading principal minors come
from fraction-free (Bareiss) elimination over the integers, never from
floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadSign,
    Disconnected,
    InvalidMatrix,
    NotNegativeDefinite,
    NotSymmetric,
)

Entries = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IntersectionMatrix:
    """A validated intersection matrix.

    Instances are produced by :func:`validate` (or the builders in other
    modules, which all funnel through it) and are immutable; every
    function in the package can safely share them.
    """

    entries: Entries
    labels: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.entries)

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return f"v{i}"

    def __repr__(self) -> str:  # keep reprs short in test failures
        return f"IntersectionMatrix(n={self.n})"


def _as_entries(rows: Sequence[Sequence[int]]) -> Entries:
    out = []
    for row in rows:
        out.append(tuple(int(v) for v in row))
    return tuple(out)


def _leading_minors(entries: Entries) -> tuple[list[int], bool]:
    """All leading principal minors via Bareiss elimination.

    Returns (minors, completed) where minors[k-1] is the determinant of
    the leading k x k block.  Bareiss keeps every intermediate value an
    integer: after step k, each a[i][j] is itself a minor of the original
    matrix, and the division by the previous pivot is exact.  A zero
    pivot is a zero leading minor; elimination cannot cross it without
    row swaps, so we stop there (completed=False) and let the caller
    judge -- for definiteness testing a zero minor already decides.

    Rows are kept as sparse dicts.  The matrices built from chains and
    stars are tridiagonal plus one arrowhead row, and the update
    a[i][j] := (a[i][j]*piv - a[i][k]*a[k][j]) / prev maps zeros to
    zeros unless row k interacts, so sparsity survives elimination.
    """
    n = len(entries)
    rows = [{j: v for j, v in enumerate(r) if v} for r in entries]
    minors: list[int] = []
    prev = 1
    for k in range(n):
        rowk = rows[k]
        piv = rowk.get(k, 0)
        minors.append(piv)
        if piv == 0:
            return minors, False
        for i in range(k + 1, n):
            rowi = rows[i]
            lik = rowi.pop(k, 0)
            if lik:
                for j in set(rowi) | set(rowk):
                    if j <= k:
                        continue
                    v = (rowi.get(j, 0) * piv - lik * rowk.get(j, 0)) // prev
                    if v:
                        rowi[j] = v
                    else:
                        rowi.pop(j, None)
            elif piv != prev:
                for j in list(rowi):
                    if j > k:
                        rowi[j] = rowi[j] * piv // prev
        prev = piv
    return minors, True


def _det_with_swaps(entries: Entries) -> int:
    # Fallback for matrices with a zero leading minor: Bareiss with row
    # pivoting.  Validated matrices never need it (their leading minors
    # alternate in sign, so no pivot vanishes), but exact_determinant
    # should not lie when handed something unvalidated.
    n = len(entries)
    a = [list(r) for r in entries]
    sign = 1
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]) // prev
        prev = piv
    return sign * prev


def validate(
    rows: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
) -> IntersectionMatrix:
    """Check a candidate matrix and wrap it, or raise a typed rejection.

    Checks, in order: square shape, symmetry, diagonal entries <= -1,
    off-diagonal entries >= 0, and negative definiteness.  Definiteness
    is decided exactly: the matrix is negative definite iff the k-th
    leading principal minor has sign (-1)^k for every k.  On failure the
    raised NotNegativeDefinite carries the first offending order and the
    minor's value as a witness.
    """
    entries = _as_entries(rows)
    n = len(entries)
    if n == 0:
        raise InvalidMatrix("matrix must have at least one row")
    for i, row in enumerate(entries):
        if len(row) != n:
            raise InvalidMatrix(f"row {i} has length {len(row)}, expected {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if entries[i][j] != entries[j][i]:
                raise NotSymmetric(i, j)
    for i in range(n):
        if entries[i][i] >= 0:
            raise BadSign(i, i, entries[i][i])
        for j in range(i + 1, n):
            if entries[i][j] < 0:
                raise BadSign(i, j, entries[i][j])
    minors, _ = _leading_minors(entries)
    for k, minor in enumerate(minors, start=1):
        expected_positive = minor if k % 2 == 0 else -minor
        if expected_positive <= 0:
            raise NotNegativeDefinite(k, minor)
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise InvalidMatrix(f"{len(labels)} labels for {n} vertices")
    return IntersectionMatrix(entries, labels)


def exact_determinant(m: IntersectionMatrix | Sequence[Sequence[int]]) -> int:
    """Exact determinant; for a validated n x n matrix its sign is (-1)^n."""
    entries = m.entries if isinstance(m, IntersectionMatrix) else _as_entries(m)
    if not entries:
        return 1
    minors, completed = _leading_minors(entries)
    if completed:
        return minors[-1]
    return _det_with_swaps(entries)


def leading_principal_minors(
    m: IntersectionMatrix | Sequence[Sequence[int]],
) -> list[int]:
    """The determinants of the leading k x k blocks, k = 1..n."""
    entries = m.entries if isinstance(m, IntersectionMatrix) else _as_entries(m)
    minors, completed = _leading_minors(entries)
    if not completed:
        # Finish one block at a time through the swap-tolerant path; only
        # reachable for non-definite input, so speed is irrelevant here.
        minors = [
            _det_with_swaps(tuple(r[: k + 1] for r in entries[: k + 1]))
            for k in range(len(entries))
        ]
    return minors


@dataclass(frozen=True)
class DualGraph:
    """The dual graph of an intersection matrix.

    ``edges`` holds one (i, j, multiplicity) triple per unordered pair
    with c_ij > 0, i < j.  ``classes[i]`` labels vertex i by valency:
    "terminal" (<= 1), "ordinary" (2) or "node" (>= 3), where valency
    counts edge endpoints with multiplicity.
    """

    n: int
    self_intersections: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    valencies: tuple[int, ...]
    classes: tuple[str, ...]
    is_connected: bool
    is_tree: bool
    labels: tuple[str, ...] | None = None

    def neighbors(self, i: int) -> tuple[int, ...]:
        out = []
        for a, b, _ in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return tuple(sorted(out))

    def components(self, exclude: frozenset[int] = frozenset()) -> list[list[int]]:
        """Connected components of the graph minus ``exclude``, each sorted."""
        seen = set(exclude)
        adj: dict[int, list[int]] = {i: [] for i in range(self.n)}
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    @property
    def node_vertices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.classes[i] == "node")

    @property
    def is_chain(self) -> bool:
        return self.is_connected and not self.node_vertices

    @property
    def is_star(self) -> bool:
        """A tree with exactly one node vertex."""
        return self.is_tree and len(self.node_vertices) == 1


def to_dual_graph(m: IntersectionMatrix) -> DualGraph:
    n = m.n
    entries = m.entries
    edges = []
    valencies = [0] * n
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            mult = entries[i][j]
            if mult:
                edges.append((i, j, mult))
                valencies[i] += mult
                valencies[j] += mult
                adj[i].append(j)
                adj[j].append(i)
    classes = tuple(
        "terminal" if v <= 1 else ("ordinary" if v == 2 else "node")
        for v in valencies
    )
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    connected = len(seen) == n
    # A connected multigraph is a tree iff its edges, counted with
    # multiplicity, number n-1; a double edge counts twice and closes a
    # cycle through its two intersection points.
    total_mult = sum(mult for _, _, mult in edges)
    return DualGraph(
        n=n,
        self_intersections=tuple(entries[i][i] for i in range(n)),
        edges=tuple(edges),
        valencies=tuple(valencies),
        classes=classes,
        is_connected=connected,
        is_tree=connected and total_mult == n - 1,
        labels=m.labels,
    )


def require_connected(m: IntersectionMatrix) -> DualGraph:
    graph = to_dual_graph(m)
    if not graph.is_connected:
        raise Disconnected("dual graph is not connected")
    return graph


def matrix_to_json(m: IntersectionMatrix, **extra: object) -> str:
    """Serialize to the on-disk JSON form (keys n, entries, labels)."""
    doc: dict[str, object] = {"n": m.n, "entries": [list(r) for r in m.entries]}
    if m.labels is not None:
        doc["labels"] = list(m.labels)
    doc.update(extra)
    return json.dumps(doc, separators=(", ", ": "))


def matrix_from_json(text: str) -> IntersectionMatrix:
    """Parse and validate the JSON form produced by matrix_to_json.

    Unknown keys (for example the metadata block written by the CLI's
    build subcommand) are ignored.
    """
    doc = json.loads(text)
    if not isinstance(doc, dict) or "entries" not in doc:
        raise InvalidMatrix("expected a JSON object with an 'entries' key")
    entries = doc["entries"]
    if "n" in doc and doc["n"] != len(entries):
        raise InvalidMatrix(f"declared n={doc['n']} but {len(entries)} rows given")
    return validate(entries, doc.get("labels"))


def to_dot(m: IntersectionMatrix, name: str = "dual") -> str:
    """Graphviz source for the dual graph; labels read ``name (-s)``."""
    lines = [f"graph {name} {{"]
    for i in range(m.n):
        lines.append(f'  v{i} [label="{m.label(i)} ({m.entries[i][i]})"];')
    for i in range(m.n):
        for j in range(i + 1, m.n):
            lines.extend(f"  v{i} -- v{j};" for _ in range(m.entries[i][j]))
    lines.append("}")
    return "\n".join(lines) + "\n"
