"""Star-shaped intersection matrices.

A star N(s0 | a_1/b_1, ..., a_m/b_m) is a tree with one central vertex
of self-intersection -s0 carrying one chain per fraction a_j/b_j > 1,
attached at the chain's first vertex.  The degenerate fraction 1/1
(whose chain is the single (-1)-curve marker) stands for an absent arm
and is skipped during assembly, so specs produced by the catalog
constructors can carry it without special-casing.

Closed forms used throughout, with a = prod a_j and the sums over the
arms that actually exist:

    det N          = (-1)^n * a * (s0 - sum b_j/a_j)
    order of class of the central vertex = lcm(a_j) * (s0 - sum b_j/a_j)

Both are exact rational computations that always land in the integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import BadFraction
from .hj import ChainSpec, cf_expand
from .matrix import IntersectionMatrix, validate

FractionLike = Fraction | tuple[int, int] | int


def _arm_fraction(f: FractionLike) -> Fraction:
    if isinstance(f, Fraction):
        a, b = f.numerator, f.denominator
    elif isinstance(f, int):
        a, b = f, 1
    else:
        a, b = f
    if b < 1 or a < b or gcd(a, b) != 1:
        raise BadFraction(f"arm fraction {a}/{b} must be reduced with a >= b >= 1")
    return Fraction(a, b)


@dataclass(frozen=True)
class StarSpec:
    """Central self-intersection and one fraction per arm, in arm order."""

    s0: int
    arms: tuple[Fraction, ...]

    def __init__(self, s0: int, arms: tuple[FractionLike, ...] | list[FractionLike]):
        object.__setattr__(self, "s0", int(s0))
        object.__setattr__(self, "arms", tuple(_arm_fraction(f) for f in arms))

    def real_arms(self) -> tuple[Fraction, ...]:
        """The arms that contribute vertices (everything but 1/1)."""
        return tuple(f for f in self.arms if f != 1)


@dataclass(frozen=True)
class StarLayout:
    """Vertex bookkeeping for a built star.

    ``spans[j]`` is the (first, last) vertex index range of real arm j,
    inclusive; the first vertex is the one attached to the center and
    the last is the terminal vertex of the arm.  ``chains[j]`` is the
    arm's chain.  The central vertex is always index 0.
    """

    spec: StarSpec
    node: int
    spans: tuple[tuple[int, int], ...]
    chains: tuple[ChainSpec, ...]


def star_layout(spec: StarSpec) -> StarLayout:
    spans = []
    chains = []
    next_index = 1
    for f in spec.real_arms():
        chain = cf_expand(f)
        spans.append((next_index, next_index + len(chain) - 1))
        chains.append(chain)
        next_index += len(chain)
    return StarLayout(spec=spec, node=0, spans=tuple(spans), chains=tuple(chains))


def build_star(spec: StarSpec) -> IntersectionMatrix:
    """Assemble the intersection matrix of a star.

    Vertex order: the central vertex first, then the arms in spec order,
    each listed from the vertex adjacent to the center outward.  The
    result passes full validation, so an inconsistent spec raises
    NotNegativeDefinite with the witnessing leading minor.
    """
    layout = star_layout(spec)
    n = 1 + sum(len(c) for c in layout.chains)
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = -spec.s0
    labels = ["node"]
    for j, ((first, _last), chain) in enumerate(zip(layout.spans, layout.chains)):
        rows[0][first] = rows[first][0] = 1
        for k, s in enumerate(chain):
            v = first + k
            rows[v][v] = -s
            if k + 1 < len(chain):
                rows[v][v + 1] = rows[v + 1][v] = 1
            labels.append(f"a{j + 1}.{k + 1}")
    return validate(rows, labels)


def _deficiency(spec: StarSpec) -> Fraction:
    # s0 - sum b_j/a_j, and 1/f is exactly b_j/a_j for the arm f = a_j/b_j
    return spec.s0 - sum((1 / f for f in spec.real_arms()), Fraction(0))


def star_determinant(spec: StarSpec) -> int:
    """det of build_star(spec) without building it, sign included."""
    arms = spec.real_arms()
    n = 1 + sum(len(cf_expand(f)) for f in arms)
    prod_a = 1
    for f in arms:
        prod_a *= f.numerator
    value = prod_a * _deficiency(spec)
    assert value.denominator == 1
    return (-1) ** n * value.numerator


def node_order(spec: StarSpec) -> int:
    """Order of the class of the central vertex in the discriminant group.

    Equals lcm(a_j) * (s0 - sum b_j/a_j); in particular it divides the
    group order and is 1 exactly when the central class is trivial.
    """
    arms = spec.real_arms()
    value = lcm(*(f.numerator for f in arms), 1) * _deficiency(spec)
    assert value.denominator == 1 and value.numerator >= 1
    return value.numerator


def spec_to_dict(spec: StarSpec) -> dict[str, object]:
    """Plain-data form with run-length-grouped arms, preserving arm order."""
    groups: list[dict[str, int]] = []
    for f in spec.arms:
        if groups and groups[-1]["a"] == f.numerator and groups[-1]["b"] == f.denominator:
            groups[-1]["count"] += 1
        else:
            groups.append({"a": f.numerator, "b": f.denominator, "count": 1})
    return {"s0": spec.s0, "chains": groups}


def spec_to_json(spec: StarSpec) -> str:
    """Serialize with run-length-grouped arms, preserving arm order."""
    return json.dumps(spec_to_dict(spec), separators=(", ", ": "))


def spec_from_json(text: str) -> StarSpec:
    doc = json.loads(text)
    arms: list[Fraction] = []
    for group in doc["chains"]:
        count = int(group.get("count", 1))
        if count < 1:
            raise BadFraction(f"chain count {count} must be >= 1")
        arms.extend([Fraction(int(group["a"]), int(group["b"]))] * count)
    return StarSpec(int(doc["s0"]), arms)
