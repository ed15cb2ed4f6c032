"""Directed graphs of evolution algebras and their vertex-set combinatorics.

The graph of an algebra has an edge i -> j exactly when the j-th coordinate of
the square of basis vector i is nonzero; it is row-finite and carries at most
one edge per ordered pair, so adjacency lists are all we store.

Vertex sets are ``frozenset`` instances over ``0..n-1``.  Wherever a family of
vertex sets is returned, it is sorted by the bitmask integer with bit ``i``
standing for vertex ``i``, which fixes a deterministic output order.

Paths are never materialised: trees, strong connectivity and closed paths are
all phrased through reachability, and hereditary-set enumeration walks
down-closed unions of strongly connected components.
"""

from __future__ import annotations

import heapq
from functools import cached_property

from .errors import EnumerationLimitError

__all__ = [
    "DEFAULT_ENUM_LIMIT",
    "Digraph",
    "associated_graph",
    "vertex_set_mask",
]

DEFAULT_ENUM_LIMIT = 10**6


def vertex_set_mask(vertices) -> int:
    """Bitmask with bit i set for each vertex i; the canonical sort key."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _mask_to_frozenset(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


class Digraph:
    """A finite directed graph with at most one edge per ordered pair."""

    def __init__(self, n, out, labels=None):
        if n < 0:
            raise ValueError("negative vertex count")
        out = tuple(tuple(sorted(set(targets))) for targets in out)
        if len(out) != n:
            raise ValueError(f"{len(out)} adjacency lists for {n} vertices")
        for i, targets in enumerate(out):
            for j in targets:
                if not 0 <= j < n:
                    raise ValueError(f"edge {i}->{j} leaves the vertex range")
        self.n = n
        self.out = out
        self.labels = tuple(labels) if labels is not None else tuple(
            f"e{i + 1}" for i in range(n)
        )
        if len(self.labels) != n:
            raise ValueError("label count differs from vertex count")

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        out = [[] for _ in range(n)]
        for i, j in edges:
            out[i].append(j)
        return cls(n, out, labels)

    def _check_vertices(self, vertices):
        vs = frozenset(vertices)
        for v in vs:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")
        return vs

    @property
    def edges(self):
        return tuple((i, j) for i in range(self.n) for j in self.out[i])

    @property
    def edge_count(self):
        return sum(len(t) for t in self.out)

    @cached_property
    def _out_masks(self):
        return tuple(vertex_set_mask(t) for t in self.out)

    @cached_property
    def _in_degree(self):
        deg = [0] * self.n
        for targets in self.out:
            for j in targets:
                deg[j] += 1
        return tuple(deg)

    def sinks(self):
        return frozenset(i for i in range(self.n) if not self.out[i])

    def sources(self):
        return frozenset(i for i in range(self.n) if self._in_degree[i] == 0)

    def bifurcations(self):
        return frozenset(i for i in range(self.n) if len(self.out[i]) >= 2)

    # -- reachability ------------------------------------------------------

    def tree(self, vertices):
        """All vertices reachable from the set, the set itself included."""
        seen = set(self._check_vertices(vertices))
        stack = list(seen)
        while stack:
            u = stack.pop()
            for v in self.out[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return frozenset(seen)

    def is_hereditary(self, vertices):
        vs = self._check_vertices(vertices)
        return all(v in vs for u in vs for v in self.out[u])

    def is_saturated(self, vertices):
        vs = self._check_vertices(vertices)
        for u in range(self.n):
            if self.out[u] and u not in vs and all(v in vs for v in self.out[u]):
                return False
        return True

    def saturated_closure(self, vertices):
        """Smallest saturated superset of a hereditary set; stays hereditary."""
        vs = self._check_vertices(vertices)
        if not self.is_hereditary(vs):
            raise ValueError("saturated closure requires a hereditary set")
        cur = set(vs)
        changed = True
        while changed:
            changed = False
            for u in range(self.n):
                if u not in cur and self.out[u] and all(v in cur for v in self.out[u]):
                    cur.add(u)
                    changed = True
        return frozenset(cur)

    # -- strongly connected components --------------------------------------

    @cached_property
    def _condensation(self):
        """Components in topological order plus the condensation DAG.

        Returns ``(components, comp_of, dag_out)`` with components sorted so
        that every condensation edge goes from an earlier to a later entry,
        ties broken by smallest member vertex.
        """
        n = self.n
        index = [-1] * n
        low = [0] * n
        on_stack = [False] * n
        stack = []
        comps = []
        counter = 0
        for root in range(n):
            if index[root] != -1:
                continue
            work = [(root, 0)]
            while work:
                v, pi = work[-1]
                if pi == 0:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack[v] = True
                advanced = False
                for k in range(pi, len(self.out[v])):
                    w = self.out[v][k]
                    if index[w] == -1:
                        work[-1] = (v, k + 1)
                        work.append((w, 0))
                        advanced = True
                        break
                    if on_stack[w]:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                work.pop()
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(frozenset(comp))
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])

        comp_of = [0] * n
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        dag = [set() for _ in comps]
        for i in range(n):
            for j in self.out[i]:
                if comp_of[i] != comp_of[j]:
                    dag[comp_of[i]].add(comp_of[j])

        # Deterministic topological order: Kahn with a min-heap on the
        # smallest vertex of each component.
        indeg = [0] * len(comps)
        for ci, targets in enumerate(dag):
            for cj in targets:
                indeg[cj] += 1
        heap = [(min(comp), ci) for ci, comp in enumerate(comps) if indeg[ci] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            _, ci = heapq.heappop(heap)
            order.append(ci)
            for cj in dag[ci]:
                indeg[cj] -= 1
                if indeg[cj] == 0:
                    heapq.heappush(heap, (min(comps[cj]), cj))
        renum = {old: new for new, old in enumerate(order)}
        components = tuple(comps[old] for old in order)
        comp_of = tuple(renum[comp_of[v]] for v in range(n))
        dag_out = tuple(
            frozenset(renum[cj] for cj in dag[old]) for old in order
        )
        return components, comp_of, dag_out

    def condensation(self):
        """The strongly connected components and the DAG between them."""
        components, _, dag_out = self._condensation
        return components, dag_out

    def source_components(self):
        components, _, dag_out = self._condensation
        indeg = [0] * len(components)
        for targets in dag_out:
            for cj in targets:
                indeg[cj] += 1
        return tuple(
            components[ci] for ci in range(len(components)) if indeg[ci] == 0
        )

    def maximal_hereditary_sets(self):
        """Complements of source components; ``[frozenset()]`` for one component.

        A proper hereditary set is maximal exactly when its complement is a
        source component of the condensation; when the whole graph is a single
        component the only proper hereditary set is the empty one.
        """
        components, _, _ = self._condensation
        if self.n == 0:
            return []
        if len(components) == 1:
            return [frozenset()]
        everything = frozenset(range(self.n))
        out = [everything - c for c in self.source_components()]
        out.sort(key=vertex_set_mask)
        return out

    @cached_property
    def _component_closure_masks(self):
        """Vertex mask of everything reachable from each component."""
        components, _, dag_out = self._condensation
        k = len(components)
        closure = [0] * k
        for ci in range(k - 1, -1, -1):  # reverse topological order
            m = vertex_set_mask(components[ci])
            for cj in dag_out[ci]:
                m |= closure[cj]
            closure[ci] = m
        return tuple(closure)

    def _iter_hereditary_masks(self, limit):
        closures = self._component_closure_masks
        seen = {0}
        frontier = [0]
        while frontier:
            m = frontier.pop()
            for cm in closures:
                nm = m | cm
                if nm not in seen:
                    if len(seen) >= limit:
                        raise EnumerationLimitError(
                            f"more than {limit} hereditary sets"
                        )
                    seen.add(nm)
                    frontier.append(nm)
        return seen

    def hereditary_sets(self, limit=DEFAULT_ENUM_LIMIT):
        """Every hereditary vertex set, sorted by bitmask; may hit the limit.

        A set is hereditary iff it is a union of components closed under the
        condensation's successor relation, so the walk adds whole component
        closures and never leaves the hereditary family.
        """
        masks = self._iter_hereditary_masks(limit)
        return [_mask_to_frozenset(m) for m in sorted(masks)]

    def hereditary_saturated_sets(self, limit=DEFAULT_ENUM_LIMIT):
        return [h for h in self.hereditary_sets(limit) if self.is_saturated(h)]

    # -- simplicity and quotients -------------------------------------------

    def is_simple(self):
        """True when the only hereditary sets are empty and everything."""
        if self.n == 0:
            return False
        components, _, _ = self._condensation
        return len(components) == 1

    def has_spanning_closed_path(self):
        """True when one closed path visits every vertex: strongly connected
        with at least one edge."""
        return self.is_simple() and self.edge_count > 0

    def quotient(self, hereditary):
        """Remove a hereditary set; keep edges with both endpoints outside."""
        h = self._check_vertices(hereditary)
        if not self.is_hereditary(h):
            raise ValueError("quotient requires a hereditary set")
        keep = [v for v in range(self.n) if v not in h]
        renum = {v: i for i, v in enumerate(keep)}
        out = [
            [renum[w] for w in self.out[v] if w not in h]
            for v in keep
        ]
        return Digraph(len(keep), out, tuple(self.labels[v] for v in keep))

    def min_generating_vertex_set(self):
        """Smallest set whose tree is everything: one vertex per source
        component (the lowest-numbered one), with its size."""
        witness = frozenset(min(c) for c in self.source_components())
        return len(witness), witness

    # -- output --------------------------------------------------------------

    def to_dot(self):
        def quoted(s):
            if s and (s[0].isalpha() or s[0] == "_") and all(
                ch.isalnum() or ch == "_" for ch in s
            ):
                return s
            return '"' + s.replace('"', '\\"') + '"'

        lines = ["digraph {"]
        for i in range(self.n):
            lines.append(f"  {quoted(self.labels[i])};")
        for i in range(self.n):
            for j in self.out[i]:
                lines.append(f"  {quoted(self.labels[i])} -> {quoted(self.labels[j])};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out and self.labels == other.labels

    def __hash__(self):
        return hash((self.n, self.out, self.labels))

    def __repr__(self):
        return f"Digraph(n={self.n}, edges={self.edge_count})"


def associated_graph(algebra) -> Digraph:
    """Graph with an edge i -> j when the square of e_i has j-th coordinate
    nonzero."""
    out = [
        [j for j, x in enumerate(sq) if x]
        for sq in algebra.squares
    ]
    return Digraph(algebra.n, out, algebra.labels)
