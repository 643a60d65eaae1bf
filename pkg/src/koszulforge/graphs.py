"""Finite simple graphs: construction, transforms, classification, enumeration.

Vertices are 1..n.  Everything here is brute-force but exact, intended for
the small graphs the stable-set pipeline consumes (n up to ~20 for stable
set enumeration, ~12 for classification, 7 for isomorphism-free listing).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, ResourceCapError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise InputError("graph needs at least one vertex")
        for e in self.edges:
            i, j = e
            if not (1 <= i < j <= self.n):
                raise InputError(f"bad edge {e} for n={self.n}")

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return (min(i, j), max(i, j)) in self.edges

    def adjacency_masks(self) -> list[int]:
        """Bitmask neighbours; bit v-1 set in masks[u-1] iff {u,v} is an edge."""
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)
        return masks

    def degree_sequence(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i - 1] += 1
            deg[j - 1] += 1
        return tuple(deg)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": sorted(list(e) for e in self.edges)}

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def graph(n: int, edges) -> Graph:
    """Normalizing constructor: sorts endpoints, rejects loops and duplicates."""
    norm = set()
    for e in edges:
        i, j = e
        if i == j:
            raise InputError(f"loop at vertex {i}")
        norm.add((min(i, j), max(i, j)))
    return Graph(n, frozenset(norm))


# ---------------------------------------------------------------------------
# families and transforms
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete(n) needs n >= 1")
    return graph(n, itertools.combinations(range(1, n + 1), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle(n) needs n >= 3")
    return graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InputError("path(n) needs n >= 1")
    return graph(n, [(i, i + 1) for i in range(1, n)])


def complement(g: Graph) -> Graph:
    return graph(g.n, (e for e in itertools.combinations(range(1, g.n + 1), 2)
                       if e not in g.edges))


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are relabelled to g.n+1 .. g.n+h.n."""
    shifted = [(i + g.n, j + g.n) for i, j in h.edges]
    return graph(g.n + h.n, list(g.edges) + shifted)


def induced(g: Graph, vertices) -> Graph:
    """Induced subgraph, relabelled to 1..k preserving the vertex order."""
    vs = sorted(set(vertices))
    if not vs or vs[0] < 1 or vs[-1] > g.n:
        raise InputError(f"invalid vertex subset {vertices}")
    pos = {v: k + 1 for k, v in enumerate(vs)}
    kept = [(pos[i], pos[j]) for i, j in g.edges if i in pos and j in pos]
    return graph(len(vs), kept)


# Six-vertex fixtures: a hexagon 1..6 plus chords, transcribed from the
# figures; validated indirectly by the acceptance results on their rings.
_HEX = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]
PAPER_FIXTURES = {
    "G1": _HEX + [(1, 5), (2, 6)],
    "G2": _HEX + [(2, 4), (2, 6), (4, 6)],
    "G3": _HEX + [(1, 3), (2, 5), (4, 6)],
    "G4": _HEX + [(1, 3), (1, 4), (2, 6)],
    "G5": _HEX + [(1, 4), (2, 4), (3, 5), (4, 6)],
}


def paper_fixture(name: str) -> Graph:
    if name not in PAPER_FIXTURES:
        raise InputError(f"unknown fixture {name!r}")
    return graph(6, PAPER_FIXTURES[name])


def odd_cycle_complement(k: int) -> Graph:
    """The complement of the odd cycle on 2k+1 vertices, k >= 3."""
    if k < 3:
        raise InputError("odd cycle complement needs k >= 3")
    return complement(cycle(2 * k + 1))


def heptagon_matching_family(k: int) -> Graph:
    """Graph on [2k+7] whose complement is C7 on 1..7 plus k disjoint edges
    {8,9}, ..., {2k+6, 2k+7}."""
    if k < 1:
        raise InputError("family graph needs k >= 1")
    n = 2 * k + 7
    comp = [(i, i + 1) for i in range(1, 7)] + [(1, 7)]
    comp += [(2 * i + 6, 2 * i + 7) for i in range(1, k + 1)]
    return complement(graph(n, comp))


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_graph(spec: str) -> Graph:
    """Parse a JSON edge list, an edge-list text, or a family DSL term.

    DSL terms: cycle(n), complete(n), path(n), complement(g), union(g1,g2),
    paper:G1..paper:G5, paper:cbar(k), paper:family(k).
    """
    text = spec.strip()
    if not text:
        raise InputError("empty graph spec")
    if text.startswith("{"):
        return _graph_from_json_text(text)
    if "\n" in text or _looks_like_edge_lines(text):
        return _graph_from_edge_text(text)
    g, rest = _parse_dsl(text)
    if rest.strip():
        raise InputError(f"trailing input in graph spec: {rest!r}")
    return g


def _looks_like_edge_lines(text: str) -> bool:
    head = text.split("\n", 1)[0].strip()
    parts = head.split()
    return len(parts) == 2 and all(p.isdigit() for p in parts)


def _graph_from_json_text(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad graph JSON: {exc}") from exc
    return graph_from_json(data)


def graph_from_json(data: dict) -> Graph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise InputError('graph JSON needs {"n": int, "edges": [[i,j], ...]}')
    n = data["n"]
    if not isinstance(n, int):
        raise InputError("graph JSON: n must be an integer")
    return graph(n, [tuple(e) for e in data["edges"]])


def _graph_from_edge_text(text: str) -> Graph:
    edges = []
    top = 0
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise InputError(f"bad edge line: {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if i < 1 or j < 1:
            raise InputError(f"vertices must be >= 1: {line!r}")
        top = max(top, i, j)
        edges.append((i, j))
    if not edges:
        raise InputError("edge-list text contains no edges")
    return graph(top, edges)


def _parse_dsl(text: str) -> tuple[Graph, str]:
    text = text.lstrip()
    if text.startswith("paper:"):
        rest = text[len("paper:"):]
        for name in PAPER_FIXTURES:
            if rest.startswith(name):
                return paper_fixture(name), rest[len(name):]
        for name, builder in (("cbar", odd_cycle_complement),
                              ("family", heptagon_matching_family)):
            if rest.startswith(name + "("):
                arg, rest2 = _parse_int(rest[len(name) + 1:])
                rest2 = _expect(rest2, ")")
                return builder(arg), rest2
        raise InputError(f"unknown paper term: {text!r}")
    for name, builder in (("cycle", cycle), ("complete", complete), ("path", path)):
        if text.startswith(name + "("):
            arg, rest = _parse_int(text[len(name) + 1:])
            rest = _expect(rest, ")")
            return builder(arg), rest
    if text.startswith("complement("):
        g, rest = _parse_dsl(text[len("complement("):])
        rest = _expect(rest, ")")
        return complement(g), rest
    if text.startswith("union("):
        g1, rest = _parse_dsl(text[len("union("):])
        rest = _expect(rest, ",")
        g2, rest = _parse_dsl(rest)
        rest = _expect(rest, ")")
        return union(g1, g2), rest
    raise InputError(f"cannot parse graph spec: {text!r}")


def _parse_int(text: str) -> tuple[int, str]:
    text = text.lstrip()
    i = 0
    while i < len(text) and text[i].isdigit():
        i += 1
    if i == 0:
        raise InputError(f"expected an integer at: {text!r}")
    return int(text[:i]), text[i:]


def _expect(text: str, ch: str) -> str:
    text = text.lstrip()
    if not text.startswith(ch):
        raise InputError(f"expected {ch!r} at: {text!r}")
    return text[1:]


# ---------------------------------------------------------------------------
# stable sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StableSetFamily:
    graph: Graph
    sets: tuple[tuple[int, ...], ...]
    alpha: int


def stable_sets(g: Graph) -> StableSetFamily:
    """All stable sets in canonical order (cardinality, then lexicographic).

    Exponential in n by nature; intended for n up to ~20.
    """
    masks = g.adjacency_masks()
    found: list[tuple[int, ...]] = []

    def extend(current: tuple[int, ...], blocked: int, start: int) -> None:
        found.append(current)
        for v in range(start, g.n + 1):
            if not (blocked >> (v - 1)) & 1:
                extend(current + (v,), blocked | masks[v - 1] | (1 << (v - 1)), v + 1)

    extend((), 0, 1)
    found.sort(key=lambda s: (len(s), s))
    alpha = max(len(s) for s in found)
    return StableSetFamily(g, tuple(found), alpha)


def indicator_vector(n: int, subset: tuple[int, ...]) -> tuple[int, ...]:
    """0/1 vector of length n marking the members of the subset."""
    v = [0] * n
    for i in subset:
        v[i - 1] = 1
    return tuple(v)


def maximal_stable_sets(g: Graph) -> list[tuple[int, ...]]:
    masks = g.adjacency_masks()
    fam = stable_sets(g)
    out = []
    for s in fam.sets:
        closed = 0
        for v in s:
            closed |= masks[v - 1] | (1 << (v - 1))
        if all((closed >> (v - 1)) & 1 for v in range(1, g.n + 1)):
            out.append(s)
    return out


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphClassFlags:
    bipartite: bool
    almost_bipartite: bool
    comparability: bool
    perfect: bool
    complement_bipartite: bool
    max_cliques_equicardinal: bool


DEFAULT_CLASSIFY_CAP = 12


def classify(g: Graph, max_n: int = DEFAULT_CLASSIFY_CAP) -> GraphClassFlags:
    """Brute-force membership in the graph classes the pipeline cares about."""
    if g.n > max_n:
        raise ResourceCapError(
            f"classify supports n <= {max_n} (got n={g.n}); raise the cap explicitly")
    comp = complement(g)
    cliques = maximal_stable_sets(comp)
    sizes = {len(c) for c in cliques}
    return GraphClassFlags(
        bipartite=is_bipartite(g),
        almost_bipartite=is_almost_bipartite(g),
        comparability=has_transitive_orientation(g),
        perfect=is_perfect(g),
        complement_bipartite=is_bipartite(comp),
        max_cliques_equicardinal=len(sizes) == 1,
    )


def is_bipartite(g: Graph) -> bool:
    masks = g.adjacency_masks()
    color = [0] * (g.n + 1)
    for start in range(1, g.n + 1):
        if color[start]:
            continue
        color[start] = 1
        queue = [start]
        while queue:
            u = queue.pop()
            for v in range(1, g.n + 1):
                if (masks[u - 1] >> (v - 1)) & 1:
                    if color[v] == color[u]:
                        return False
                    if not color[v]:
                        color[v] = -color[u]
                        queue.append(v)
    return True


def is_almost_bipartite(g: Graph) -> bool:
    if g.n == 1:
        return True
    return any(is_bipartite(induced(g, [u for u in range(1, g.n + 1) if u != v]))
               for v in range(1, g.n + 1))


def has_transitive_orientation(g: Graph) -> bool:
    """Search for a transitive orientation with forcing propagation."""
    edges = sorted(g.edges)
    if not edges:
        return True
    edge_set = set(edges)

    def propagate(orient: dict[Edge, int], queue: list[tuple[int, int]]) -> bool:
        # orient[(i,j)] = +1 for i->j, -1 for j->i
        arcs = {(i, j) if d > 0 else (j, i) for (i, j), d in orient.items()}
        while queue:
            a, b = queue.pop()
            for c in range(1, g.n + 1):
                if c in (a, b):
                    continue
                # a->b, b->c forces a->c
                if (b, c) in arcs:
                    if not g.has_edge(a, c):
                        return False
                    if not _force(orient, arcs, queue, a, c):
                        return False
                # c->a, a->b forces c->b
                if (c, a) in arcs:
                    if not g.has_edge(c, b):
                        return False
                    if not _force(orient, arcs, queue, c, b):
                        return False
        return True

    def _force(orient, arcs, queue, u, v) -> bool:
        key = (min(u, v), max(u, v))
        want = 1 if u < v else -1
        have = orient.get(key)
        if have is None:
            orient[key] = want
            arcs.add((u, v))
            queue.append((u, v))
            return True
        return have == want

    def search(orient: dict[Edge, int]) -> bool:
        free = next((e for e in edges if e not in orient), None)
        if free is None:
            return True
        for direction in (1, -1):
            trial = dict(orient)
            arc = free if direction > 0 else (free[1], free[0])
            trial[free] = direction
            if propagate(trial, [arc]) and search(trial):
                return True
        return False

    assert edge_set  # non-empty checked above
    return search({})


def _induced_is_chordless_cycle(g: Graph, vs: tuple[int, ...]) -> bool:
    h = induced(g, vs)
    k = len(vs)
    if len(h.edges) != k:
        return False
    if any(d != 2 for d in h.degree_sequence()):
        return False
    # degree-2 with k edges: connected iff a single cycle
    masks = h.adjacency_masks()
    seen = {1}
    queue = [1]
    while queue:
        u = queue.pop()
        for v in range(1, k + 1):
            if (masks[u - 1] >> (v - 1)) & 1 and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == k


def has_odd_hole(g: Graph) -> bool:
    """An induced odd cycle of length >= 5."""
    for size in range(5, g.n + 1, 2):
        for vs in itertools.combinations(range(1, g.n + 1), size):
            if _induced_is_chordless_cycle(g, vs):
                return True
    return False


def is_perfect(g: Graph) -> bool:
    return not has_odd_hole(g) and not has_odd_hole(complement(g))


# ---------------------------------------------------------------------------
# isomorphism-free enumeration
# ---------------------------------------------------------------------------

def _wl_classes(n: int, masks: list[int]) -> list[list[int]]:
    """1-WL colour classes (0-based vertices), ordered by colour signature."""
    colors = [bin(masks[v]).count("1") for v in range(n)]
    for _ in range(n):
        sigs = []
        for v in range(n):
            neigh = sorted(colors[u] for u in range(n) if (masks[v] >> u) & 1)
            sigs.append((colors[v], tuple(neigh)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            break
        colors = new
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


def _canonical_bits(n: int, masks: list[int]) -> int:
    """Lexicographically minimal adjacency bitstring over colour-respecting
    vertex orderings (sound: isomorphic graphs share WL colour signatures)."""
    classes = _wl_classes(n, masks)
    best: int | None = None
    for perm_parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [v for part in perm_parts for v in part]
        bits = 0
        shift = 0
        for a in range(n):
            for b in range(a + 1, n):
                bits = (bits << 1) | ((masks[order[a]] >> order[b]) & 1)
                shift += 1
        if best is None or bits < best:
            best = bits
    assert best is not None
    return best


def _graph_from_bits(n: int, bits: int) -> Graph:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    total = len(pairs)
    edges = [pairs[k] for k in range(total) if (bits >> (total - 1 - k)) & 1]
    return graph(n, edges)


def canonical_form(g: Graph) -> Graph:
    return _graph_from_bits(g.n, _canonical_bits(g.n, g.adjacency_masks()))


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class, deterministic order."""
    if not 1 <= n <= 7:
        raise InputError("enumerate_graphs supports 1 <= n <= 7")
    pairs = list(itertools.combinations(range(n), 2))
    total = len(pairs)
    seen: set[int] = set()
    for subset in range(1 << total):
        masks = [0] * n
        k = subset
        idx = 0
        while k:
            if k & 1:
                a, b = pairs[idx]
                masks[a] |= 1 << b
                masks[b] |= 1 << a
            k >>= 1
            idx += 1
        seen.add(_canonical_bits(n, masks))
    out = [_graph_from_bits(n, bits) for bits in sorted(seen)]
    out.sort(key=lambda g: (len(g.edges), _canonical_bits(g.n, g.adjacency_masks())))
    return out


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test (permutation search), for small n."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return False
    gm, hm = g.adjacency_masks(), h.adjacency_masks()
    for perm in itertools.permutations(range(g.n)):
        ok = True
        for i, j in g.edges:
            if not (hm[perm[i - 1]] >> perm[j - 1]) & 1:
                ok = False
                break
        if ok:
            return True
    return False


@lru_cache(maxsize=None)
def _cached_enumeration(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_graphs(n))
