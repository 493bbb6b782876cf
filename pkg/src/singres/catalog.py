"""Built-in resolution graphs and what is known about them.

Each entry pairs a star spec with the invariants predicted for it
(determinant, discriminant group or a known part of it, cycle data) and
a status recording whether the construction behind the prediction is
proven or still conjectural.  Constructors validate their parameters
with typed errors, so a returned entry always carries a buildable,
negative-definite graph.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Callable

from .cycles import fundamental_cycle
from .errors import (
    GcdConditionViolated,
    GcdViolation,
    InternalDisagreement,
    NonIntegralGenus,
    NonIntegralS0,
    PreconditionFailed,
)
from .hj import hj_fraction_type
from .lattice import discriminant_group
from .matrix import IntersectionMatrix
from .star import StarSpec, build_star, spec_to_dict, star_determinant

PROVEN = "proven"
CONJECTURAL = "conjectural"

Params = tuple[tuple[str, int], ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=512)
def _built(spec: StarSpec) -> IntersectionMatrix:
    return build_star(spec)


@dataclass(frozen=True)
class CatalogEntry:
    """A named graph plus its predicted invariants.

    ``predicted`` holds scalars and invariant-factor lists only; facts
    about specific cycles are re-derived by the verify suites instead of
    being stored.  ``flags`` carries caveats, currently just
    "non-rational-node" for graphs whose central curve has positive
    genus (where the cycle operations assume too much).
    """

    family: str
    params: Params
    star: StarSpec
    status: str
    provenance: str
    predicted: dict[str, object]
    flags: tuple[str, ...] = ()

    def matrix(self) -> IntersectionMatrix:
        return _built(self.star)

    def to_dict(self) -> dict[str, object]:
        return {
            "family": self.family,
            "params": dict(self.params),
            "star": spec_to_dict(self.star),
            "status": self.status,
            "provenance": self.provenance,
            "predicted": dict(self.predicted),
            "flags": list(self.flags),
        }


def brieskorn(q: int, c: int, d: int) -> CatalogEntry:
    """Resolution star of the surface z^q = x^c + y^d, for gcd(q, cd) = 1.

    With g = gcd(c, d) and a1 = c/g, a2 = d/g the graph is a star with
    one arm a1/b1, one arm a2/b2 (each dropped when its a_i is 1, in
    which case b_i = 0) and g arms q/b0, where each b is the least
    positive solution of b * l == -1 modulo a for the complementary
    exponent product l.  The determinant is q^(g-1) up to sign, and for
    prime q the discriminant group is elementary abelian of that order.
    """
    if q < 2 or c < 2 or d < 2:
        raise ValueError("brieskorn needs q, c, d >= 2")
    if gcd(q, c * d) != 1:
        raise GcdViolation(f"gcd({q}, {c}*{d}) must be 1")
    g = gcd(c, d)
    a1, a2 = c // g, d // g
    b1 = (-pow(d * q // g, -1, a1)) % a1 if a1 > 1 else 0
    b2 = (-pow(c * q // g, -1, a2)) % a2 if a2 > 1 else 0
    b0 = (-pow(c * d // g, -1, q)) % q
    s0 = (
        Fraction(g * g, q * c * d)
        + Fraction(b1, a1)
        + Fraction(b2, a2)
        + g * Fraction(b0, q)
    )
    assert s0.denominator == 1, "central self-intersection must be integral"
    arms: list[Fraction] = []
    if a1 > 1:
        arms.append(Fraction(a1, b1))
    if a2 > 1:
        arms.append(Fraction(a2, b2))
    arms.extend([Fraction(q, b0)] * g)
    predicted: dict[str, object] = {"det_abs": q ** (g - 1)}
    if _is_prime(q):
        predicted["group"] = [q] * (g - 1)
        predicted["killed_by"] = q
    return CatalogEntry(
        family="brieskorn",
        params=(("q", q), ("c", c), ("d", d)),
        star=StarSpec(int(s0), arms),
        status=PROVEN,
        provenance="brieskorn",
        predicted=predicted,
    )


def weighted_homogeneous(
    q: int, a: int, b: int, c: int, d: int, p: int | None = None
) -> CatalogEntry:
    """Resolution star of z^q = x^a y^b (y^d - x^c), all exponents >= 1.

    Writing m = ad + bc + cd, g = gcd(c, d), w = gcd(q, m/g),
    w_a = gcd(w, a) and w_b = gcd(w, b), the graph is a star with w_a
    arms of type alpha, w_b of type beta and g of type gamma, where the
    types are fraction types of triples in q, m and the exponents; arms
    of type 0 are absent.  Admissibility needs gcd(a, c/g) = 1,
    gcd(b, d/g) = 1 and a characteristic p coprime to w*g; p defaults
    to q when q is prime and to 1 otherwise.  When q = p the group is
    elementary abelian of order p^(g + 1 - a_p - b_p) with a_p, b_p the
    indicators of p | a and p | b.  The central curve has genus
    (g(w - 1) + 2 - w_a - w_b)/2, which is 0 unless w > 1.
    """
    if min(q, a, b, c, d) < 1:
        raise ValueError("weighted_homogeneous needs q, a, b, c, d >= 1")
    if p is None:
        p = q if _is_prime(q) else 1
    if p < 1:
        raise ValueError("characteristic p must be >= 1")
    g = gcd(c, d)
    m = a * d + b * c + c * d
    w = gcd(q, m // g)
    wa = gcd(w, a)
    wb = gcd(w, b)
    if gcd(a, c // g) != 1 or gcd(b, d // g) != 1:
        raise GcdConditionViolated(
            f"need gcd({a}, {c // g}) = gcd({b}, {d // g}) = 1"
        )
    if gcd(p, w * g) != 1:
        raise GcdConditionViolated(f"characteristic {p} must be coprime to {w * g}")
    alpha = hj_fraction_type(q * c // (g * wa), m // (g * wa), a // wa)
    beta = hj_fraction_type(q * d // (g * wb), m // (g * wb), b // wb)
    gamma = hj_fraction_type(q, m // g, 1)
    s0 = Fraction(w * w * g * g, q * c * d) + wa * alpha + wb * beta + g * gamma
    if s0.denominator != 1:
        raise NonIntegralS0(f"s0 = {s0} is not an integer")
    arms: list[Fraction] = []
    for kind, count in ((alpha, wa), (beta, wb), (gamma, g)):
        if kind:
            arms.extend([1 / kind] * count)
    spec = StarSpec(int(s0), arms)
    twice_genus = g * (w - 1) + 2 - wa - wb
    if twice_genus % 2 or twice_genus < 0:
        raise NonIntegralGenus(f"2 * node genus = {twice_genus}")
    node_genus = twice_genus // 2
    # |det| in closed form: the product of arm numerators times the
    # deficiency s0 - sum(1/arm), and the type sum telescopes so the
    # deficiency is exactly w^2 g^2 / (qcd).
    det_abs = Fraction(w * w * g * g, q * c * d)
    for f in spec.real_arms():
        det_abs *= f.numerator
    assert det_abs.denominator == 1
    predicted: dict[str, object] = {
        "det_abs": int(det_abs),
        "node_genus": node_genus,
    }
    if p == q and _is_prime(q):
        ap = 1 if a % p == 0 else 0
        bp = 1 if b % p == 0 else 0
        predicted["group"] = [p] * (g + 1 - ap - bp)
        predicted["killed_by"] = p
    return CatalogEntry(
        family="weighted-homogeneous",
        params=(("q", q), ("a", a), ("b", b), ("c", c), ("d", d), ("p", p)),
        star=spec,
        status=PROVEN,
        provenance="weighted-homogeneous",
        predicted=predicted,
        flags=("non-rational-node",) if node_genus else (),
    )


def peskin(p: int) -> CatalogEntry:
    """The star N(2 | p/(p-1), p/(p-1), ((p+1)/2)/1) for an odd prime p.

    Two arms of p - 1 vertices of weight -2 and one extra -(p+1)/2
    vertex on a -2 node; p = 3 gives the E6 diagram.  The group is
    cyclic of order p, the fundamental cycle has Z^2 = -2 and genus
    (p-3)/2, and K = -((p-3)/2) Z.
    """
    if not _is_prime(p) or p < 3:
        raise ValueError("peskin needs an odd prime p >= 3")
    spec = StarSpec(
        2, [Fraction(p, p - 1), Fraction(p, p - 1), Fraction((p + 1) // 2)]
    )
    predicted: dict[str, object] = {
        "det_abs": p,
        "group": [p],
        "killed_by": p,
        "z_self": -2,
        "genus": (p - 3) // 2,
    }
    return CatalogEntry(
        family="peskin",
        params=(("p", p),),
        star=spec,
        status=PROVEN,
        provenance="peskin-family",
        predicted=predicted,
    )


def e8_analogue(p: int) -> CatalogEntry:
    """The unimodular star N(2 | p/(p-1), (p+1)/p, (2p+1)/4), odd prime p.

    p = 3 gives a graph with |det| = 1 extending the E8 pattern; the
    group is trivial for every p, Z^2 = -(p+1)/2, and the canonical
    cycle is -(2p-4) Z + ((p-3)/2) e_w with w the terminal -4 vertex.
    The genus value recorded here is the one adjunction forces.
    """
    if not _is_prime(p) or p < 3:
        raise ValueError("e8_analogue needs an odd prime p >= 3")
    spec = StarSpec(
        2, [Fraction(p, p - 1), Fraction(p + 1, p), Fraction(2 * p + 1, 4)]
    )
    predicted: dict[str, object] = {
        "det_abs": 1,
        "group": [],
        "z_self": -(p + 1) // 2,
        "genus": (p - 1) ** 2 // 2,
    }
    return CatalogEntry(
        family="e8-analogue",
        params=(("p", p),),
        star=spec,
        status=PROVEN,
        provenance="e8-analogue",
        predicted=predicted,
    )


def e7_analogue(p: int) -> CatalogEntry:
    """The candidate star N(2 | p/(p-1), (p+1)/p, p^2/(2p-1)), prime p.

    p = 2 gives the E7 diagram.  |det| = p and the group is cyclic of
    order p; the realization this family is modeled on is conjectural,
    so entries carry that status.
    """
    if not _is_prime(p):
        raise ValueError("e7_analogue needs a prime p")
    spec = StarSpec(
        2, [Fraction(p, p - 1), Fraction(p + 1, p), Fraction(p * p, 2 * p - 1)]
    )
    predicted: dict[str, object] = {"det_abs": p, "group": [p], "killed_by": p}
    return CatalogEntry(
        family="e7-analogue",
        params=(("p", p),),
        star=spec,
        status=CONJECTURAL,
        provenance="e7-analogue",
        predicted=predicted,
    )


def d4_analogue(p: int) -> CatalogEntry:
    """The star N(p | p/(p-1) repeated p+1 times), for a prime p.

    A -p node with p + 1 arms of p - 1 vertices of weight -2; p = 2
    gives the D4 diagram.  The group is elementary abelian of order
    p^p, Z^2 = -p and K = -(p-2) Z.  The genus value recorded here is
    the one adjunction forces.
    """
    if not _is_prime(p):
        raise ValueError("d4_analogue needs a prime p")
    spec = StarSpec(p, [Fraction(p, p - 1)] * (p + 1))
    predicted: dict[str, object] = {
        "det_abs": p**p,
        "group": [p] * p,
        "killed_by": p,
        "z_self": -p,
        "genus": (p - 1) * (p - 2) // 2,
    }
    return CatalogEntry(
        family="d4-analogue",
        params=(("p", p),),
        star=spec,
        status=PROVEN,
        provenance="d4-analogue",
        predicted=predicted,
    )


def non_gorenstein_example(p: int) -> CatalogEntry:
    """The star N(2 | p/(p-1), p/(p-1), p/1) for an odd prime p.

    A rational singularity that is not numerically Gorenstein: with R
    the positive cycle solving N R = -p e_C at the terminal -p vertex C,
    the canonical cycle is -((p-2)/p) R, which is not integral.  The
    class of e_C has order exactly p and |det| = p^2.
    """
    if not _is_prime(p) or p < 3:
        raise ValueError("non_gorenstein_example needs an odd prime p >= 3")
    spec = StarSpec(2, [Fraction(p, p - 1), Fraction(p, p - 1), Fraction(p)])
    predicted: dict[str, object] = {
        "det_abs": p * p,
        "gorenstein": False,
        "terminal_class_order": p,
    }
    return CatalogEntry(
        family="non-gorenstein",
        params=(("p", p),),
        star=spec,
        status=PROVEN,
        provenance="non-gorenstein-example",
        predicted=predicted,
    )


def star_extend(spec: StarSpec, i: int) -> CatalogEntry:
    """Append one arm to an integral star so that |det| scales by i.

    The input must be a star N(s0 | s_1, ..., s_k) with integer arms,
    at least one s_j even, at most one s_j divisible by 4, discriminant
    group killed by 2 and |Z^2| <= 2; each violated clause raises
    PreconditionFailed naming it.  The new arm is a single vertex of
    weight s = i + prod(s_j)/|Phi| for i in {1, 2}.  The constructor
    re-verifies the three facts the extension guarantees (determinant
    scaled by i, group still killed by 2, |Z^2| still <= 2) and raises
    InternalDisagreement if any fails, since that would mean a bug.
    """
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    if any(f.denominator != 1 for f in spec.arms):
        raise PreconditionFailed("arms must be integers s_j/1")
    s = [f.numerator for f in spec.real_arms()]
    if not s:
        raise PreconditionFailed("need at least one arm")
    if all(v % 2 for v in s):
        raise PreconditionFailed("some s_j must be even")
    if sum(1 for v in s if v % 4 == 0) > 1:
        raise PreconditionFailed("at most one s_j may be divisible by 4")
    base = _built(spec)
    group = discriminant_group(base)
    if not group.is_killed_by(2):
        raise PreconditionFailed("discriminant group must be killed by 2")
    _, z_self = fundamental_cycle(base)
    if z_self < -2:
        raise PreconditionFailed("fundamental cycle must have |Z^2| <= 2")
    prod_s = 1
    for v in s:
        prod_s *= v
    if prod_s % group.order:
        raise InternalDisagreement("group order does not divide the arm product")
    s_new = i + prod_s // group.order
    extended = StarSpec(spec.s0, spec.arms + (Fraction(s_new),))
    new_matrix = _built(extended)
    if abs(star_determinant(extended)) != i * abs(star_determinant(spec)):
        raise InternalDisagreement("determinant did not scale by i")
    if not discriminant_group(new_matrix).is_killed_by(2):
        raise InternalDisagreement("extended group is not killed by 2")
    _, z_new = fundamental_cycle(new_matrix)
    if z_new < -2:
        raise InternalDisagreement("extended fundamental cycle has |Z^2| > 2")
    predicted: dict[str, object] = {
        "det_abs": i * abs(star_determinant(spec)),
        "killed_by": 2,
    }
    return CatalogEntry(
        family="star-extension",
        params=(("i", i), ("s_new", s_new)),
        star=extended,
        status=PROVEN,
        provenance="star-extension",
        predicted=predicted,
    )


def sylvester_star(n: int) -> CatalogEntry:
    """N(1 | s_1, ..., s_n) for the Sylvester sequence 2, 3, 7, 43, ...

    Each term is one more than the lcm of its predecessors (their
    product; the terms are pairwise coprime), so sum(1/s_j) approaches 1
    from below and every truncation has |det| = 1.  The same stars arise
    by repeatedly applying star_extend with i = 1 starting from N(1|2).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    terms = [2]
    while len(terms) < n:
        terms.append(lcm(*terms) + 1)
    spec = StarSpec(1, [Fraction(v) for v in terms])
    predicted: dict[str, object] = {"det_abs": 1, "group": []}
    return CatalogEntry(
        family="sylvester",
        params=(("n", n),),
        star=spec,
        status=PROVEN,
        provenance="sylvester-stars",
        predicted=predicted,
    )


def explicit8(n: int, variant: int) -> CatalogEntry:
    """star_extend applied to the seed star of 2n+1 arms of -2 vertices.

    The seed N0(n) = N(n+1 | 2 repeated 2n+1 times) has group (Z/2)^2n;
    variant 1 appends a -3 vertex (order 4^n preserved), variant 2 a -4
    vertex (order doubled to 2^(2n+1)).
    """
    if n < 0:
        raise ValueError("need n >= 0")
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    seed = StarSpec(n + 1, [Fraction(2)] * (2 * n + 1))
    inner = star_extend(seed, variant)
    exponent = 2 * n + (variant - 1)
    predicted: dict[str, object] = {
        "det_abs": 2**exponent,
        "group": [2] * exponent,
        "killed_by": 2,
    }
    return dataclasses.replace(
        inner,
        family="explicit8",
        params=(("n", n), ("variant", variant)),
        provenance="explicit-order-8",
        predicted=predicted,
    )


def alls_params(p: int, r: int) -> tuple[int, int]:
    """Exponents (m, n) making gcd(pn+1, pm+1) equal pr+2.

    For an odd prime p and r >= 1, n = (pr + r + 2)/2 and
    m = n + pr + 2 give pn + 1 = (pr+2)(p+1)/2 and
    pm + 1 = (pr+2)(3p+1)/2, whose gcd is exactly pr + 2; the returned
    pair therefore feeds brieskorn(p, pm+1, pn+1) a surface whose group
    is elementary abelian of rank pr + 1.  The gcd is re-checked and a
    failure raises GcdViolation.
    """
    if not _is_prime(p) or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    if r < 1:
        raise ValueError("r must be >= 1")
    # r(p + 1) is even for odd p, so n is an integer
    n = (p * r + r + 2) // 2
    m = n + p * r + 2
    got = gcd(p * n + 1, p * m + 1)
    if got != p * r + 2:
        raise GcdViolation(f"gcd({p * n + 1}, {p * m + 1}) = {got} != {p * r + 2}")
    return m, n


def conjectural_graphs() -> tuple[CatalogEntry, ...]:
    """The candidate graphs whose realization is still open.

    Two small stars over a -1 node checked only by machine computation,
    the e7-analogue family at small primes, and the variant-2 members of
    the explicit8 family (whose matrix facts are proven but whose
    realization is the open part).
    """
    out: list[CatalogEntry] = []
    for arms, det in (((2, 7, 3), 1), ((2, 8, 3), 2)):
        spec = StarSpec(1, [Fraction(v) for v in arms])
        predicted: dict[str, object] = {
            "det_abs": det,
            "group": [] if det == 1 else [det],
        }
        params = tuple((f"a{k + 1}", v) for k, v in enumerate(arms))
        out.append(
            CatalogEntry(
                family="candidate-star",
                params=(("s0", 1),) + params,
                star=spec,
                status=CONJECTURAL,
                provenance="candidate-star",
                predicted=predicted,
            )
        )
    out.extend(e7_analogue(p) for p in (2, 3, 5))
    for n in (1, 2, 3):
        out.append(dataclasses.replace(explicit8(n, 2), status=CONJECTURAL))
    return tuple(out)


def _alls_builder(p: int, r: int) -> CatalogEntry:
    m, n = alls_params(p, r)
    return brieskorn(p, p * m + 1, p * n + 1)


@dataclass(frozen=True)
class Family:
    """CLI-facing description of a catalog constructor."""

    builder: Callable[..., CatalogEntry]
    required: tuple[str, ...]
    optional: tuple[str, ...] = ()


FAMILIES: dict[str, Family] = {
    "brieskorn": Family(brieskorn, ("q", "c", "d")),
    "weighted-homogeneous": Family(
        weighted_homogeneous, ("q", "a", "b", "c", "d"), ("p",)
    ),
    "peskin": Family(peskin, ("p",)),
    "e8-analogue": Family(e8_analogue, ("p",)),
    "e7-analogue": Family(e7_analogue, ("p",)),
    "d4-analogue": Family(d4_analogue, ("p",)),
    "non-gorenstein": Family(non_gorenstein_example, ("p",)),
    "sylvester": Family(sylvester_star, ("n",)),
    "explicit8": Family(explicit8, ("n", "variant")),
    "alls": Family(_alls_builder, ("p", "r")),
}
