"""Graph families built from direct products of character degree graphs.

Every builder returns a :class:`Built` pair: the graph and a
:class:`Recipe` tree that :func:`replay` turns back into the same graph.
Fresh vertex labels come from a :class:`PrimePool`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, NamedTuple, Optional

from .algorithms import degree_sequence, diameter, is_block, is_eulerian_direct, is_regular, is_k_regular
from .canon import canonical_form
from .conditions import necessary_pipeline
from .errors import BadN, EvenP, InternalCheckFailed, LabelCollision, PoolExhausted
from .graph import LabeledGraph, is_prime

RECIPE_KINDS = (
    "base-figure",
    "two-component",
    "direct-product",
    "operation-d",
    "regular-family",
    "catalog-member",
)


@dataclass(frozen=True)
class Recipe:
    kind: str
    parameters: dict[str, Any] = field(default_factory=dict)
    children: tuple[Recipe, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in RECIPE_KINDS:
            raise ValueError(f"unknown recipe kind {self.kind!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "parameters": self.parameters,
            "children": [c.to_dict() for c in self.children],
        }

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> Recipe:
        return cls(
            doc["kind"],
            dict(doc.get("parameters", {})),
            tuple(cls.from_dict(c) for c in doc.get("children", [])),
        )


class Built(NamedTuple):
    graph: LabeledGraph
    recipe: Recipe


def base_recipe(g: LabeledGraph, figure: str = "input") -> Recipe:
    return Recipe("base-figure", {"figure": figure, "graph": g.to_dict()})


class PrimePool:
    """Hands out unused primes in ascending order.

    Not thread-safe; give each builder its own pool.
    """

    def __init__(self, reserved: Iterable[int] = (), limit: int = 1_000_000):
        self.reserved: set[int] = set(reserved)
        self.limit = limit
        self.issued: list[int] = []

    def reserve(self, labels: Iterable[int]) -> None:
        self.reserved.update(labels)

    def _next(self, odd: bool) -> int:
        k = 3 if odd else 2
        while k <= self.limit:
            if k not in self.reserved and is_prime(k):
                self.reserved.add(k)
                self.issued.append(k)
                return k
            k += 1
        raise PoolExhausted(f"no unused {'odd ' if odd else ''}prime below {self.limit}")

    def take(self) -> int:
        return self._next(odd=False)

    def take_odd(self) -> int:
        return self._next(odd=True)

    def take_many(self, count: int) -> list[int]:
        return [self.take() for _ in range(count)]


# -- primitive constructions ---------------------------------------------


def direct_product(a: LabeledGraph, b: LabeledGraph) -> LabeledGraph:
    """Disjoint union of ``a`` and ``b`` plus every edge between them."""
    clash = set(a.vertices) & set(b.vertices)
    if clash:
        raise LabelCollision(f"labels shared by both factors: {sorted(clash)}")
    cross = [(u, v) for u in a.vertices for v in b.vertices]
    return LabeledGraph.from_edges(
        a.vertices + b.vertices, a.edges() + b.edges() + cross, check_primes=False
    )


def two_component_graph(p: int, qs: Iterable[int]) -> LabeledGraph:
    """Isolated odd prime ``p`` next to a complete graph on ``qs``."""
    qs = sorted(set(qs))
    if not qs:
        raise BadN("need at least one prime besides p")
    if p == 2:
        raise EvenP("the isolated prime must be odd")
    for x in [p, *qs]:
        if not is_prime(x):
            raise ValueError(f"{x} is not prime")
    if p in qs:
        raise LabelCollision(f"{p} appears as both the isolated prime and a clique prime")
    clique = [(u, v) for i, u in enumerate(qs) for v in qs[i + 1 :]]
    return LabeledGraph.from_edges([p, *qs], clique)


def build_two_component(p: int, qs: Iterable[int]) -> Built:
    qs = sorted(set(qs))
    return Built(two_component_graph(p, qs), Recipe("two-component", {"p": p, "qs": qs}))


def build_product(a: Built, b: Built) -> Built:
    return Built(direct_product(a.graph, b.graph), Recipe("direct-product", {}, (a.recipe, b.recipe)))


def operation_d(g: LabeledGraph | Built, pool: Optional[PrimePool] = None) -> Built:
    """Join ``g`` with two fresh non-adjacent primes (the first odd)."""
    src = g if isinstance(g, Built) else Built(g, base_recipe(g))
    pool = pool if pool is not None else PrimePool()
    pool.reserve(src.graph.vertices)
    p = pool.take_odd()
    q = pool.take()
    pair = build_two_component(p, [q])
    graph = direct_product(src.graph, pair.graph)
    return Built(graph, Recipe("operation-d", {"p": p, "q": q}, (src.recipe, pair.recipe)))


def replay(recipe: Recipe) -> LabeledGraph:
    kind, params = recipe.kind, recipe.parameters
    if kind == "base-figure":
        doc = params["graph"]
        return LabeledGraph.from_edges(doc["vertices"], doc["edges"], check_primes=False)
    if kind == "two-component":
        return two_component_graph(params["p"], params["qs"])
    if kind in ("direct-product", "operation-d"):
        a, b = recipe.children
        return direct_product(replay(a), replay(b))
    (child,) = recipe.children
    return replay(child)


# -- families ------------------------------------------------------------


def square(pool: Optional[PrimePool] = None) -> Built:
    pool = pool if pool is not None else PrimePool()
    a, b, c, d = pool.take_many(4)
    g = LabeledGraph.from_edges([a, b, c, d], [(a, b), (b, c), (c, d), (d, a)])
    return Built(g, base_recipe(g, "square"))


def regular_family(n: int, pool: Optional[PrimePool] = None) -> Built:
    """An (n-2)-regular graph on ``n`` vertices: the 4-cycle lifted by
    repeated Operation D."""
    if n < 4 or n % 2:
        raise BadN(f"n must be even and at least 4, got {n}")
    pool = pool if pool is not None else PrimePool()
    cur = square(pool)
    for _ in range(6, n + 1, 2):
        cur = operation_d(cur, pool)
    return Built(cur.graph, Recipe("regular-family", {"n": n}, (cur.recipe,)))


def figure5_pair(pool: Optional[PrimePool] = None) -> tuple[Built, Built]:
    """Triangle plus isolated vertex, and two isolated vertices."""
    pool = pool if pool is not None else PrimePool()
    p = pool.take_odd()
    g1 = build_two_component(p, pool.take_many(3))
    p2 = pool.take_odd()
    g2 = build_two_component(p2, [pool.take()])
    return g1, g2


def figure4(pool: Optional[PrimePool] = None) -> Built:
    """Non-regular Eulerian block on six vertices, built as a product."""
    g1, g2 = figure5_pair(pool)
    return build_product(g1, g2)


def fresh_member(n: int, pool: Optional[PrimePool] = None) -> Built:
    """Operation D applied to an isolated odd prime beside K_{n-3}."""
    pool = pool if pool is not None else PrimePool()
    p = pool.take_odd()
    base = build_two_component(p, pool.take_many(n - 3))
    return operation_d(base, pool)


def lower_bound(n: int) -> int:
    """Guaranteed number of non-regular Eulerian diameter-2 blocks on ``n`` vertices."""
    if n < 6 or n % 2:
        raise BadN(f"n must be even and at least 6, got {n}")
    return (n - 4) // 2 + n // 6 - 1


STREAM_FIGURE4 = "figure4-lift"
STREAM_FRESH = "two-component-lift"
STREAM_POWER = "figure4-power"


@dataclass
class CatalogMember:
    built: Built
    stream: str
    origin: int

    @property
    def graph(self) -> LabeledGraph:
        return self.built.graph

    @property
    def recipe(self) -> Recipe:
        return self.built.recipe

    def odd_one_out(self) -> list[int]:
        seq = degree_sequence(self.graph)
        top = seq[0]
        return [d for d in seq if d != top]


def _member_recipe(m: CatalogMember, n: int, step: str) -> CatalogMember:
    inner = m.recipe.children[0] if m.recipe.kind == "catalog-member" else m.recipe
    params = {"n": n, "stream": m.stream, "origin": m.origin, "step": step}
    return CatalogMember(Built(m.graph, Recipe("catalog-member", params, (inner,))), m.stream, m.origin)


def _lift(m: CatalogMember, n: int) -> CatalogMember:
    inner = m.recipe.children[0]
    lifted = operation_d(Built(m.graph, inner), PrimePool())
    return _member_recipe(CatalogMember(lifted, m.stream, m.origin), n, "operation-d")


def build_catalog(n: int) -> list[CatalogMember]:
    """Members for every even size from 6 to ``n``; returns those of size ``n``."""
    if n < 6 or n % 2:
        raise BadN(f"n must be even and at least 6, got {n}")
    members = [_member_recipe(CatalogMember(figure4(PrimePool()), STREAM_FIGURE4, 6), 6, "base")]
    power = members[0]
    for m in range(8, n + 1, 2):
        members = [_lift(x, m) for x in members]
        members.append(_member_recipe(CatalogMember(fresh_member(m, PrimePool()), STREAM_FRESH, m), m, "fresh"))
        if m % 6 == 0:
            pool = PrimePool(power.graph.vertices)
            prod = build_product(Built(power.graph, power.recipe.children[0]), figure4(pool))
            power = _member_recipe(CatalogMember(prod, STREAM_POWER, m), m, "figure4-product")
            members.append(power)
    return members


@dataclass
class CatalogReport:
    n: int
    members: list[CatalogMember]
    checks: list[dict[str, Any]]
    lower_bound: int

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def meets_bound(self) -> bool:
        return self.count >= self.lower_bound

    @property
    def all_verified(self) -> bool:
        return all(c["verified"] for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "count": self.count,
            "lower_bound": self.lower_bound,
            "meets_bound": self.meets_bound,
            "members": [
                {"graph": m.graph.to_dict(), "recipe": m.recipe.to_dict(), "check": c}
                for m, c in zip(self.members, self.checks)
            ],
        }


def verify_member(g: LabeledGraph) -> dict[str, Any]:
    checks = {
        "non_regular": not is_regular(g),
        "block": is_block(g),
        "diameter_two": diameter(g) == 2,
        "eulerian": is_eulerian_direct(g).eulerian,
        "pipeline": necessary_pipeline(g).overall,
    }
    return checks


def eulerian_catalog(n: int, verify: bool = True) -> CatalogReport:
    """Replay the product constructions for ``n`` vertices and check them.

    Each member must be a non-regular block of diameter 2 that is Eulerian
    and passes the necessary conditions; members must be pairwise
    non-isomorphic, which is certified both by degree sequences and by
    canonical forms.  Raises :class:`InternalCheckFailed` otherwise.
    """
    members = build_catalog(n)
    checks: list[dict[str, Any]] = []
    seen_deg: dict[tuple[int, ...], int] = {}
    seen_canon: dict[bytes, int] = {}
    for i, m in enumerate(members):
        entry: dict[str, Any] = {
            "index": i,
            "stream": m.stream,
            "origin": m.origin,
            "degree_sequence": degree_sequence(m.graph),
        }
        if verify:
            props = verify_member(m.graph)
            deg = tuple(entry["degree_sequence"])
            canon = canonical_form(m.graph, max_n=None)
            props["distinct_degree_sequence"] = deg not in seen_deg
            props["distinct_canonical_form"] = canon not in seen_canon
            seen_deg.setdefault(deg, i)
            seen_canon.setdefault(canon, i)
            entry["canonical"] = canon.hex()
            entry["properties"] = props
            failed = [k for k, ok in props.items() if not ok and k != "distinct_degree_sequence"]
            if failed:
                raise InternalCheckFailed(f"catalog member {i} (n={n}, {m.stream}) fails {failed}")
            entry["verified"] = True
        else:
            entry["verified"] = False
        checks.append(entry)
    if replay(members[-1].recipe) != members[-1].graph:
        raise InternalCheckFailed("recipe replay does not reproduce the last member")
    return CatalogReport(n, members, checks, lower_bound(n))


def is_regular_family_member(g: LabeledGraph) -> bool:
    return g.n >= 4 and g.n % 2 == 0 and is_k_regular(g, g.n - 2)
