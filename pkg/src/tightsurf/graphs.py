"""Small simple graphs: exact colouring and complete-graph subdivisions."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

DEFAULT_COLOURING_CAP = 16


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: frozenset  # of frozenset({u, v})

    def __post_init__(self):
        es = set()
        for e in self.edges:
            u, v = tuple(e) if len(e) == 2 else (None, None)
            if u is None or u == v:
                raise ValueError(f"bad edge {tuple(e)}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge {tuple(e)} out of range")
            es.add(frozenset((u, v)))
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable) -> "Graph":
        return cls(n, frozenset(frozenset(p) for p in pairs))

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.num_vertices)]
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def relabel(self, perm) -> "Graph":
        return Graph.from_pairs(self.num_vertices, ((perm[u], perm[v]) for u, v in map(tuple, self.edges)))


def complete_graph(n: int) -> Graph:
    return Graph.from_pairs(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_pairs(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_pairs(n, ((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_pairs(10, outer + spokes + inner)


def cube_graph() -> Graph:
    return Graph.from_pairs(
        8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    )


def _greedy_clique(adj) -> list[int]:
    best: list[int] = []
    for start in range(len(adj)):
        clique = [start]
        for v in sorted(adj[start], key=lambda x: -len(adj[x])):
            if all(v in adj[c] for c in clique):
                clique.append(v)
        if len(clique) > len(best):
            best = clique
    return best


def _greedy_colouring(adj) -> list[int]:
    order = sorted(range(len(adj)), key=lambda v: -len(adj[v]))
    colour = [-1] * len(adj)
    for v in order:
        used = {colour[u] for u in adj[v]}
        colour[v] = next(c for c in range(len(adj)) if c not in used)
    return colour


def colouring(g: Graph, cap: int = DEFAULT_COLOURING_CAP) -> list[int]:
    """An optimal proper colouring, found by DSATUR-ordered branch and bound."""
    n = g.num_vertices
    if n > cap:
        raise ValueError(
            f"{n} vertices exceeds the exact-colouring cap of {cap}; "
            "use the clique/greedy bounds instead"
        )
    if n == 0:
        return []
    adj = g.adjacency()
    best = _greedy_colouring(adj)
    best_k = max(best) + 1
    lower = len(_greedy_clique(adj))
    colour = [-1] * n

    def pick():
        v_best, key_best = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = len({colour[u] for u in adj[v] if colour[u] >= 0})
            key = (sat, len(adj[v]), -v)
            if key_best is None or key > key_best:
                v_best, key_best = v, key
        return v_best

    def search(k_used, coloured):
        nonlocal best, best_k
        if best_k == lower:
            return
        if coloured == n:
            best, best_k = list(colour), k_used
            return
        v = pick()
        used = {colour[u] for u in adj[v]}
        for c in range(min(k_used + 1, best_k - 1)):
            if c in used:
                continue
            colour[v] = c
            search(max(k_used, c + 1), coloured + 1)
            colour[v] = -1

    search(0, 0)
    return best


def chromatic_number(g: Graph, cap: int = DEFAULT_COLOURING_CAP) -> int:
    c = colouring(g, cap)
    return max(c) + 1 if c else 0


def _route(adj, pairs, blocked, k):
    """Internally disjoint paths for every pair; vertices in ``blocked`` may not be interior."""
    if k == len(pairs):
        return []
    a, b = pairs[k]
    # depth-first over simple paths, shortest-first via iterative deepening
    limit = len(adj)
    for max_len in range(1, limit):
        found = _paths(adj, a, b, blocked, max_len)
        for path in found:
            inner = set(path[1:-1])
            rest = _route(adj, pairs, blocked | inner, k + 1)
            if rest is not None:
                return [path] + rest
    return None


def _paths(adj, a, b, blocked, length):
    """Simple a-b paths with exactly ``length`` edges avoiding ``blocked`` inside."""
    out = []
    stack = [(a, [a])]
    while stack:
        v, path = stack.pop()
        if len(path) - 1 == length:
            if v == b:
                out.append(path)
            continue
        for w in sorted(adj[v], reverse=True):
            if w == b:
                if len(path) == length:
                    stack.append((w, path + [w]))
                continue
            if w in blocked or w in path:
                continue
            stack.append((w, path + [w]))
    return out


def has_complete_subdivision(g: Graph, k: int):
    """Search for a subdivision of K_k in ``g``.

    Returns ``(found, witness)`` where the witness maps each branch pair
    ``(a, b)`` to the vertex path realising that edge.
    """
    if k < 1:
        raise ValueError("k must be positive")
    adj = g.adjacency()
    if k == 1:
        return (g.num_vertices >= 1), ({} if g.num_vertices else None)
    candidates = [v for v in range(g.num_vertices) if len(adj[v]) >= k - 1]
    if len(candidates) < k:
        return False, None
    if 2 * len(g.edges) < k * (k - 1):
        return False, None
    for branch in combinations(candidates, k):
        bset = set(branch)
        pairs = list(combinations(branch, 2))
        # direct edges first keeps the search shallow
        pairs.sort(key=lambda p: (p[1] not in adj[p[0]], p))
        paths = _route(adj, pairs, bset, 0)
        if paths is not None:
            return True, {p: tuple(path) for p, path in zip(pairs, paths)}
    return False, None


def largest_complete_subdivision(g: Graph) -> int:
    best = 1 if g.num_vertices else 0
    for k in range(2, g.num_vertices + 1):
        if has_complete_subdivision(g, k)[0]:
            best = k
        else:
            break
    return best
