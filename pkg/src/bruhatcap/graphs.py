"""Bruhat, quantum Bruhat and weighted Cayley graphs, with exact shortest paths.

Degrees are integer tuples over the simple coroots (over S - S_P for the
parabolic Bruhat graph); path areas pair a dominant weight with a degree and
are exact rationals throughout.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from heapq import heappop, heappush

from .errors import ConsistencyError, SizeLimitError, ValidationError
from .linalg import Vector, vec
from .rootsystem import rational_str, vector_strs
from .weyl import ParabolicData, WeylGroup

DEFAULT_CAYLEY_CAP = 7

Degree = tuple[int, ...]


def degree_leq(c: Degree, d: Degree) -> bool:
    """Componentwise partial order on degrees."""
    return all(a <= b for a, b in zip(c, d))


def degree_add(c: Degree, d: Degree) -> Degree:
    return tuple(a + b for a, b in zip(c, d))


# ---------------------------------------------------------------------------
# Bruhat graph on W/W_P


@dataclass
class BruhatGraph:
    """Undirected multigraph on W/W_P; edges carry the reflecting root."""

    parabolic: ParabolicData
    # (u, v, root index, degree over S - S_P), with u < v
    edges: list[tuple[int, int, int, Degree]]

    @property
    def weyl(self) -> WeylGroup:
        return self.parabolic.weyl

    @property
    def n_vertices(self) -> int:
        return self.parabolic.n_cosets


def bruhat_graph(weyl: WeylGroup, parabolic: ParabolicData | None = None) -> BruhatGraph:
    """All edges u -- u*s_alpha mod W_P for alpha in R+ - R+_P.

    Each torus-invariant curve is emitted once, from its smaller endpoint;
    distinct roots joining the same coset pair stay as distinct edges.
    """
    pd = parabolic if parabolic is not None else weyl.parabolic(())
    rs = weyl.rs
    free = pd.free_simple
    rp = set(pd.rp_plus)
    moving = [a for a in rs.positive if a not in rp]
    refl_perms = {a: weyl.perms[weyl.reflection(a)] for a in moving}
    edges = []
    for cu, rep in enumerate(pd.coset_reps):
        wp = weyl.perms[rep]
        for a in moving:
            gp = refl_perms[a]
            target = weyl.index[tuple(wp[k] for k in gp)]
            cv = pd.coset_of[target]
            if cv <= cu:
                continue
            cocoeff = rs.signed_cocoefficients(a)
            edges.append((cu, cv, a, tuple(cocoeff[k] for k in free)))
    edges.sort()
    return BruhatGraph(parabolic=pd, edges=edges)


def min_path_area(graph: BruhatGraph, lam: Vector, src: int, dst: int) -> Fraction:
    """Dijkstra over edge areas <lam, coroot(alpha)>; exact minimal total area."""
    rs = graph.weyl.rs
    adj: list[list[tuple[int, Fraction]]] = [[] for _ in range(graph.n_vertices)]
    for u, v, a, _deg in graph.edges:
        w = rs.pairing(lam, a)
        if w < 0:
            raise ValidationError("negative edge area; lambda is not dominant")
        adj[u].append((v, w))
        adj[v].append((u, w))
    dist: dict[int, Fraction] = {src: Fraction(0)}
    done: set[int] = set()
    counter = itertools.count()
    heap: list[tuple[Fraction, int, int]] = [(Fraction(0), next(counter), src)]
    while heap:
        d, _, u = heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == dst:
            return d
        for v, w in adj[u]:
            nd = d + w
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                heappush(heap, (nd, next(counter), v))
    raise ConsistencyError("Bruhat graph is disconnected; this cannot happen for valid input")


# ---------------------------------------------------------------------------
# Quantum Bruhat graph on W


@dataclass
class QuantumBruhatGraph:
    """Directed graph on W; up-edges carry degree 0, down-edges the coroot."""

    weyl: WeylGroup
    out: list[list[tuple[int, int, Degree]]]  # per u: (v, root index, degree)
    zero: Degree

    @property
    def n_vertices(self) -> int:
        return len(self.weyl)


def quantum_bruhat_graph(weyl: WeylGroup) -> QuantumBruhatGraph:
    rs = weyl.rs
    zero = (0,) * rs.rank
    heights = {a: rs.coroot_height(a) for a in rs.positive}
    refl_perms = {a: weyl.perms[weyl.reflection(a)] for a in rs.positive}
    out: list[list[tuple[int, int, Degree]]] = [[] for _ in range(len(weyl))]
    for u, up in enumerate(weyl.perms):
        lu = weyl.lengths[u]
        for a in rs.positive:
            gp = refl_perms[a]
            v = weyl.index[tuple(up[k] for k in gp)]
            lv = weyl.lengths[v]
            if lv == lu + 1:
                out[u].append((v, a, zero))
            elif lv == lu + 1 - 2 * heights[a]:
                out[u].append((v, a, rs.coroot_coefficients(a)))
    return QuantumBruhatGraph(weyl=weyl, out=out, zero=zero)


def d_min_all(graph: QuantumBruhatGraph, u: int) -> tuple[list[int], list[Degree]]:
    """Shortest directed distances from u, and the common shortest-path degrees.

    The uniqueness of the shortest-path degree is a checked theorem: if two
    shortest paths to any vertex disagree, ConsistencyError is raised.
    """
    n = graph.n_vertices
    dist = [-1] * n
    dist[u] = 0
    order = [u]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y, _a, _d in graph.out[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                order.append(y)
    if len(order) != n:
        raise ConsistencyError("quantum Bruhat graph is not strongly connected from u")
    degs: list[set[Degree] | None] = [None] * n
    degs[u] = {graph.zero}
    for x in order:
        dx = degs[x]
        assert dx is not None
        for y, _a, dd in graph.out[x]:
            if dist[y] == dist[x] + 1:
                acc = degs[y]
                if acc is None:
                    acc = degs[y] = set()
                for base in dx:
                    acc.add(degree_add(base, dd))
    final: list[Degree] = [graph.zero] * n
    for x in order:
        dx = degs[x]
        assert dx is not None
        if len(dx) != 1:
            raise ConsistencyError(
                f"shortest paths {u} -> {x} carry {len(dx)} distinct degrees {sorted(dx)}; "
                "the shortest-path degree must be unique"
            )
        final[x] = next(iter(dx))
    return dist, final


def d_min(graph: QuantumBruhatGraph, u: int, v: int) -> tuple[Degree, int]:
    """The common degree and length of all shortest directed paths u -> v."""
    dist, degs = d_min_all(graph, u)
    return degs[v], dist[v]


def random_walk_degree(graph: QuantumBruhatGraph, rng, u: int, steps: int) -> tuple[int, Degree]:
    """Follow `steps` random directed edges from u; return endpoint and path degree."""
    x = u
    total = graph.zero
    for _ in range(steps):
        v, _a, dd = rng.choice(graph.out[x])
        total = degree_add(total, dd)
        x = v
    return x, total


# ---------------------------------------------------------------------------
# Weighted Cayley graph of S_n


@dataclass
class WeightedCayleyGraph:
    n: int
    lam: Vector
    perms: list[tuple[int, ...]]
    index: dict[tuple[int, ...], int]
    # (u, v, i, j, |lam_i - lam_j|) for a swap of positions i < j, u < v
    edges: list[tuple[int, int, int, int, Fraction]] = field(repr=False)

    @property
    def identity_index(self) -> int:
        return self.index[tuple(range(1, self.n + 1))]


def cayley_graph(n: int, lam, cap: int = DEFAULT_CAYLEY_CAP) -> WeightedCayleyGraph:
    """The Cayley graph of S_n on all transpositions, weighted by |lam_i - lam_j|."""
    if n < 1:
        raise ValidationError("n must be positive")
    if n > cap:
        raise SizeLimitError(f"n = {n} exceeds the Cayley cap {cap} ({n}! vertices)")
    lam = vec(lam)
    if len(lam) != n:
        raise ValidationError(f"lambda has {len(lam)} entries, expected {n}")
    perms = sorted(itertools.permutations(range(1, n + 1)))
    index = {p: i for i, p in enumerate(perms)}
    edges = []
    for u, p in enumerate(perms):
        q = list(p)
        for i in range(n):
            for j in range(i + 1, n):
                q[i], q[j] = q[j], q[i]
                v = index[tuple(q)]
                q[i], q[j] = q[j], q[i]
                if v > u:
                    edges.append((u, v, i, j, abs(lam[i] - lam[j])))
    return WeightedCayleyGraph(n=n, lam=lam, perms=perms, index=index, edges=edges)


def cayley_distances(graph: WeightedCayleyGraph, src: int) -> list[Fraction]:
    """Single-source Dijkstra over the weighted Cayley graph."""
    n = len(graph.perms)
    adj: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
    for u, v, _i, _j, w in graph.edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    inf = None
    dist: list[Fraction | None] = [inf] * n
    dist[src] = Fraction(0)
    counter = itertools.count()
    heap = [(Fraction(0), next(counter), src)]
    done = [False] * n
    while heap:
        d, _, u = heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            nd = d + w
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heappush(heap, (nd, next(counter), v))
    assert all(d is not None for d in dist)
    return dist  # type: ignore[return-value]


def transposition_distance_formula(lam, perm: tuple[int, ...]) -> Fraction:
    """The closed-form candidate (1/2) sum_i |lam_i - lam_{perm(i)}|."""
    lam = vec(lam)
    return Fraction(1, 2) * sum(
        (abs(lam[i] - lam[perm[i] - 1]) for i in range(len(perm))), Fraction(0)
    )


def cayley_diameter(n: int, lam, cap: int = DEFAULT_CAYLEY_CAP) -> Fraction:
    """max_sigma d(e, sigma); equals the graph diameter by left-invariance."""
    lam = vec(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValidationError("lambda must be sorted in nonincreasing order")
    graph = cayley_graph(n, lam, cap=cap)
    dist = cayley_distances(graph, graph.identity_index)
    return max(dist)


# ---------------------------------------------------------------------------
# Exports


def _weyl_vertex_order(weyl: WeylGroup, vertices: list[int], rep_of) -> list[int]:
    return sorted(vertices, key=lambda c: (weyl.lengths[rep_of(c)], rep_of(c)))


def _bruhat_payload(graph: BruhatGraph, lam: Vector | None) -> dict:
    weyl = graph.weyl
    rs = weyl.rs
    pd = graph.parabolic
    order = _weyl_vertex_order(weyl, list(range(graph.n_vertices)), lambda c: pd.coset_reps[c])
    pos = {c: i for i, c in enumerate(order)}
    vertices = [
        {
            "id": i,
            "label": weyl.word_label(pd.coset_reps[c]),
            "length": weyl.lengths[pd.coset_reps[c]],
        }
        for i, c in enumerate(order)
    ]
    edges = []
    for u, v, a, deg in graph.edges:
        e = {
            "u": pos[u],
            "v": pos[v],
            "root": vector_strs(rs.roots[a]),
            "degree": list(deg),
        }
        if lam is not None:
            e["area"] = rational_str(rs.pairing(lam, a))
        edges.append(e)
    edges.sort(key=lambda e: (e["u"], e["v"], e["root"]))
    return {
        "kind": "bruhat",
        "family": rs.family,
        "rank": rs.rank,
        "s_p": list(pd.s_p),
        "directed": False,
        "vertices": vertices,
        "edges": edges,
    }


def _quantum_payload(graph: QuantumBruhatGraph, lam: Vector | None) -> dict:
    weyl = graph.weyl
    rs = weyl.rs
    order = _weyl_vertex_order(weyl, list(range(len(weyl))), lambda w: w)
    pos = {w: i for i, w in enumerate(order)}
    vertices = [
        {"id": i, "label": weyl.word_label(w), "length": weyl.lengths[w]}
        for i, w in enumerate(order)
    ]
    edges = []
    for u in range(len(weyl)):
        for v, a, deg in graph.out[u]:
            e = {
                "u": pos[u],
                "v": pos[v],
                "root": vector_strs(rs.roots[a]),
                "degree": list(deg),
            }
            if lam is not None:
                area = sum(
                    (deg[k] * rs.pairing(lam, rs.simple[k]) for k in range(rs.rank)),
                    Fraction(0),
                )
                e["area"] = rational_str(area)
            edges.append(e)
    edges.sort(key=lambda e: (e["u"], e["v"], e["root"], e["degree"]))
    return {
        "kind": "quantum",
        "family": rs.family,
        "rank": rs.rank,
        "directed": True,
        "vertices": vertices,
        "edges": edges,
    }


def _cayley_payload(graph: WeightedCayleyGraph) -> dict:
    vertices = [{"id": i, "label": "".join(map(str, p))} for i, p in enumerate(graph.perms)]
    edges = [
        {"u": u, "v": v, "swap": [i + 1, j + 1], "weight": rational_str(w)}
        for u, v, i, j, w in sorted(graph.edges)
    ]
    return {
        "kind": "cayley",
        "n": graph.n,
        "lambda": vector_strs(graph.lam),
        "directed": False,
        "vertices": vertices,
        "edges": edges,
    }


def _payload_to_dot(payload: dict) -> str:
    directed = payload["directed"]
    name = payload["kind"]
    arrow = "->" if directed else "--"
    lines = [("digraph " if directed else "graph ") + name + " {"]
    labels = {v["id"]: v["label"] for v in payload["vertices"]}
    for v in payload["vertices"]:
        lines.append(f'  "{v["label"]}";')
    for e in payload["edges"]:
        if "root" in e:
            parts = ["(" + ",".join(e["root"]) + ")",
                     "(" + ",".join(map(str, e["degree"])) + ")"]
            if "area" in e:
                parts.append(e["area"])
        else:
            parts = ["(" + ",".join(map(str, e["swap"])) + ")", e["weight"]]
        label = " / ".join(parts)
        lines.append(f'  "{labels[e["u"]]}" {arrow} "{labels[e["v"]]}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(graph, fmt: str, lam: Vector | None = None) -> str:
    """Serialize a graph as 'json' or 'dot'; output is deterministic."""
    if isinstance(graph, BruhatGraph):
        payload = _bruhat_payload(graph, lam)
    elif isinstance(graph, QuantumBruhatGraph):
        payload = _quantum_payload(graph, lam)
    elif isinstance(graph, WeightedCayleyGraph):
        payload = _cayley_payload(graph)
    else:
        raise ValidationError(f"cannot export object of type {type(graph).__name__}")
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "dot":
        return _payload_to_dot(payload)
    raise ValidationError(f"unknown export format {fmt!r}; expected 'json' or 'dot'")
