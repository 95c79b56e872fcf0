"""Exact rational lower bounds on the dissociation number."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cycles import DEFAULT_CYCLE_CAP, DEFAULT_PACKING_LIMIT, c1_count, max_disjoint_c1_packing
from .errors import PackingLimitExceeded
from .graph import Graph, components, is_forest
from .solver import DissociationCertificate, SearchLimits, diss_exact

E0_ROWS = (
    "e0_degree",
    "e0_inverse_degree",
    "e0_goharasc",
    "e0_tree",
    "e0_density",
    "e0_two_thirds",
)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def component_bound(n: int, m: int, k: int, cycles: int) -> Fraction:
    return n - Fraction(m + k + cycles, 3)


def bound_e1(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> Fraction:
    """n - (m + k + c1)/3, possibly negative. Raises CycleCapExceeded if c1 is unknown."""
    return component_bound(g.n, g.m, len(components(g)), c1_count(g, cap))


def bound_e1_packing(
    g: Graph, cap: int = DEFAULT_CYCLE_CAP, limit: int = DEFAULT_PACKING_LIMIT
) -> Fraction:
    """Same bound with c1 replaced by the disjoint-packing number."""
    return component_bound(
        g.n, g.m, len(components(g)), max_disjoint_c1_packing(g, cap, limit)
    )


def e0_degree(g: Graph) -> Fraction:
    return Fraction(g.n, _ceil_div(g.max_degree() + 1, 2))


def e0_inverse_degree(g: Graph) -> Fraction | None:
    if any(not a for a in g.adj):
        return None
    return Fraction(4, 3) * sum((Fraction(1, len(a) + 1) for a in g.adj), Fraction(0))


def e0_goharasc(g: Graph) -> Fraction:
    total = sum((Fraction(1, len(a) + 1) for a in g.adj), Fraction(0))
    closed = [m | (1 << v) for v, m in enumerate(g.masks)]
    for u, v in g.edges():
        total += Fraction(1, comb((closed[u] | closed[v]).bit_count(), 2))
    return total


def e0_tree(g: Graph) -> Fraction | None:
    return Fraction(2 * g.n, 3) if is_forest(g) else None


def e0_density(g: Graph) -> Fraction | None:
    if g.m < 1:
        return None
    t = _ceil_div(g.m, g.n) - 1
    return Fraction(2 * g.n, t + 2) - Fraction(g.m, (t + 1) * (t + 2))


def e0_two_thirds(g: Graph) -> Fraction:
    return Fraction(2 * g.n, 3) - Fraction(g.m, 6)


@dataclass
class BoundReport:
    n: int
    m: int
    k: int
    c1: int
    nu1: int | None
    max_degree: int
    e1: Fraction
    e1_packing: Fraction | None
    e0_degree: Fraction
    e0_inverse_degree: Fraction | None
    e0_goharasc: Fraction
    e0_tree: Fraction | None
    e0_density: Fraction | None
    e0_two_thirds: Fraction
    inapplicable: dict[str, str] = field(default_factory=dict)

    def applicable_e0(self) -> dict[str, Fraction]:
        return {
            name: getattr(self, name)
            for name in E0_ROWS
            if getattr(self, name) is not None
        }

    def to_json(self) -> dict:
        out: dict = {}
        for name in ("n", "m", "k", "c1", "nu1", "max_degree"):
            out[name] = getattr(self, name)
        for name in ("e1", "e1_packing") + E0_ROWS:
            out[name] = rational_json(getattr(self, name))
        out["e0_outerplanar"] = None
        out["inapplicable"] = dict(sorted(self.inapplicable.items()))
        return out


def rational_json(x: Fraction | None):
    if x is None:
        return None
    return {"num": x.numerator, "den": x.denominator}


def bounds_report(
    g: Graph, cap: int = DEFAULT_CYCLE_CAP, packing_limit: int = DEFAULT_PACKING_LIMIT
) -> BoundReport:
    """Every bound at once. Rows that do not apply are None with a reason."""
    k = len(components(g))
    c1 = c1_count(g, cap)
    reasons = {"e0_outerplanar": "not evaluated"}
    try:
        nu1 = max_disjoint_c1_packing(g, cap, packing_limit)
        e1p = component_bound(g.n, g.m, k, nu1)
    except PackingLimitExceeded as exc:
        nu1, e1p = None, None
        reasons["e1_packing"] = str(exc)
    inv = e0_inverse_degree(g)
    if inv is None:
        reasons["e0_inverse_degree"] = "graph has an isolated vertex"
    tree = e0_tree(g)
    if tree is None:
        reasons["e0_tree"] = "graph is not a forest"
    dens = e0_density(g)
    if dens is None:
        reasons["e0_density"] = "graph has no edges"
    return BoundReport(
        n=g.n,
        m=g.m,
        k=k,
        c1=c1,
        nu1=nu1,
        max_degree=g.max_degree(),
        e1=component_bound(g.n, g.m, k, c1),
        e1_packing=e1p,
        e0_degree=e0_degree(g),
        e0_inverse_degree=inv,
        e0_goharasc=e0_goharasc(g),
        e0_tree=tree,
        e0_density=dens,
        e0_two_thirds=e0_two_thirds(g),
        inapplicable=reasons,
    )


@dataclass(frozen=True)
class InequalityCheck:
    bound: Fraction
    diss: int
    slack: Fraction
    tight: bool
    witness: DissociationCertificate

    def to_json(self) -> dict:
        return {
            "bound": rational_json(self.bound),
            "diss": self.diss,
            "slack": rational_json(self.slack),
            "tight": self.tight,
            "witness": list(self.witness.vertices),
        }


def check_inequality(
    g: Graph, limits: SearchLimits | None = None, cap: int = DEFAULT_CYCLE_CAP
) -> InequalityCheck:
    """Compare diss(G) with n - (m + k + c1)/3 exactly."""
    bound = bound_e1(g, cap)
    cert = diss_exact(g, limits)
    slack = cert.size - bound
    return InequalityCheck(bound, cert.size, slack, slack == 0, cert)
