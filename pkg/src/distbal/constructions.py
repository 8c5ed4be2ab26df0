"""Graph products, the S(.) and R(.) transforms, and named families.

Product vertex ``(a, b)`` gets id ``a * |V(B)| + b``. Transform vertices
for edge ``i`` get id ``|V(A)| + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from distbal.errors import Disconnected, EmptyFactor, ParameterOutOfRange, TrivialFactor
from distbal.graph import UNREACHABLE, DistanceOracle, Graph, build_graph


@dataclass(frozen=True)
class ProductVertexMap:
    """Row-major bijection between product ids and factor coordinates."""

    n_a: int
    n_b: int

    def id(self, a: int, b: int) -> int:
        if not (0 <= a < self.n_a and 0 <= b < self.n_b):
            raise IndexError(f"coordinate ({a}, {b}) outside {self.n_a}x{self.n_b}")
        return a * self.n_b + b

    def pair(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.n_a * self.n_b:
            raise IndexError(f"product vertex {v} out of range")
        return divmod(v, self.n_b)

    def __len__(self):
        return self.n_a * self.n_b


def _check_factors(A: Graph, B: Graph) -> ProductVertexMap:
    if A.n == 0 or B.n == 0:
        raise EmptyFactor("product factors must have at least one vertex")
    return ProductVertexMap(A.n, B.n)


def cartesian_product(A: Graph, B: Graph) -> tuple[Graph, ProductVertexMap]:
    vmap = _check_factors(A, B)
    edges = []
    for a in range(A.n):
        for b1, b2 in B.edges:
            edges.append((vmap.id(a, b1), vmap.id(a, b2)))
    for a1, a2 in A.edges:
        for b in range(B.n):
            edges.append((vmap.id(a1, b), vmap.id(a2, b)))
    edges.sort()
    return build_graph(A.n * B.n, edges), vmap


def lexicographic_product(A: Graph, B: Graph) -> tuple[Graph, ProductVertexMap]:
    """``A[B]``: ``(a1,b1) ~ (a2,b2)`` iff ``a1 ~ a2``, or ``a1 = a2`` and ``b1 ~ b2``."""
    vmap = _check_factors(A, B)
    edges = []
    for a in range(A.n):
        for b1, b2 in B.edges:
            edges.append((vmap.id(a, b1), vmap.id(a, b2)))
    for a1, a2 in A.edges:
        for b1 in range(B.n):
            for b2 in range(B.n):
                edges.append((vmap.id(a1, b1), vmap.id(a2, b2)))
    edges = sorted((min(e), max(e)) for e in edges)
    return build_graph(A.n * B.n, edges), vmap


def product_distance(
    kind: str,
    oracle_a: DistanceOracle,
    oracle_b: DistanceOracle,
    u: tuple[int, int],
    v: tuple[int, int],
):
    """Closed-form distance in ``A x B`` (``kind='cartesian'``) or ``A[B]``
    (``kind='lexicographic'``) from the factor distance tables.

    The lexicographic formula requires ``A`` connected with 2+ vertices.
    """
    (a1, b1), (a2, b2) = u, v
    if kind == "cartesian":
        da, db = oracle_a(a1, a2), oracle_b(b1, b2)
        if da is UNREACHABLE or db is UNREACHABLE:
            return UNREACHABLE
        return da + db
    if kind in ("lexicographic", "lex"):
        if oracle_a.n < 2:
            raise TrivialFactor("lexicographic distance formula needs |V(A)| >= 2")
        if a1 != a2:
            return oracle_a(a1, a2)
        if b1 == b2:
            return 0
        db = oracle_b(b1, b2)
        # leaving the fiber and coming back costs 2, if A has a neighbour to go to
        if not oracle_a.connected:
            raise Disconnected("lexicographic distance formula needs A connected")
        return 2 if db is UNREACHABLE else min(2, db)
    raise ValueError(f"unknown product kind {kind!r}")


def product_edge_distance(
    kind: str,
    oracle_a: DistanceOracle,
    oracle_b: DistanceOracle,
    e: tuple[tuple[int, int], tuple[int, int]],
    f: tuple[tuple[int, int], tuple[int, int]],
):
    """Edge-edge distance in a product: min over the four endpoint pairings."""
    ds = [product_distance(kind, oracle_a, oracle_b, x, y) for x in e for y in f]
    ds = [d for d in ds if d is not UNREACHABLE]
    return min(ds) if ds else UNREACHABLE


def subdivision(A: Graph) -> tuple[Graph, tuple[int, ...]]:
    """S(A): each edge ``uv`` (id ``i``) becomes the path ``u - (n+i) - v``.

    Returns the graph and the edge-id -> new-vertex map.
    """
    new = tuple(A.n + i for i in range(A.m))
    edges = []
    for (u, v), w in zip(A.edges, new):
        edges.append((u, w))
        edges.append((w, v))
    return build_graph(A.n + A.m, edges), new


def triangle_extension(A: Graph) -> tuple[Graph, tuple[int, ...]]:
    """R(A): keep every edge ``uv`` and add a vertex adjacent to ``u`` and ``v``."""
    new = tuple(A.n + i for i in range(A.m))
    edges = list(A.edges)
    for (u, v), w in zip(A.edges, new):
        edges.append((u, w))
        edges.append((v, w))
    return build_graph(A.n + A.m, edges), new


# named families; labelings are part of the public contract


def path(n: int) -> Graph:
    """P_n on ``n`` vertices ``0 - 1 - ... - n-1``."""
    _at_least("path", n, 1)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _at_least("cycle", n, 3)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def star(k: int) -> Graph:
    """S_k: center 0 and leaves ``1..k``."""
    _at_least("star", k, 1)
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel(rim: int) -> Graph:
    """Hub 0, rim cycle ``1..rim``; spokes get edge ids first."""
    _at_least("wheel", rim, 3)
    spokes = [(0, i) for i in range(1, rim + 1)]
    ring = [(i, i + 1) for i in range(1, rim)] + [(rim, 1)]
    return build_graph(rim + 1, spokes + ring)


def friendship(n: int) -> Graph:
    """F_n: triangles ``{0, 2t+1, 2t+2}`` for ``t < n``."""
    _at_least("friendship", n, 1)
    edges = []
    for t in range(n):
        a, b = 2 * t + 1, 2 * t + 2
        edges += [(0, a), (0, b), (a, b)]
    return build_graph(2 * n + 1, edges)


def complete(n: int) -> Graph:
    _at_least("complete", n, 1)
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """Parts ``0..m-1`` and ``m..m+n-1``."""
    _at_least("complete_bipartite", m, 1)
    _at_least("complete_bipartite", n, 1)
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def petersen() -> Graph:
    """Outer 5-cycle ``0..4``, spokes ``i - i+5``, inner pentagram on ``5..9``."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def _at_least(name: str, value: int, low: int) -> None:
    if value < low:
        raise ParameterOutOfRange(f"{name} parameter must be >= {low}, got {value}")


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "friendship": (friendship, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterOutOfRange(
                f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}"
            )
        arity = FAMILIES[self.family][1]
        if len(self.params) != arity:
            raise ParameterOutOfRange(f"{self.family} takes {arity} parameter(s), got {len(self.params)}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """``"star:3"``, ``"complete_bipartite:2,3"``, ``"petersen"``."""
        name, _, rest = text.partition(":")
        params = tuple(int(x) for x in rest.split(",")) if rest else ()
        return cls(name, params)

    def __str__(self):
        return self.family + (":" + ",".join(map(str, self.params)) if self.params else "")


def generate(spec: FamilySpec) -> Graph:
    return FAMILIES[spec.family][0](*spec.params)
