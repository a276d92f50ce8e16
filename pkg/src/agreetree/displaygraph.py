"""The display graph of a profile, with decremental connectivity.

Vertices are label ids; an edge joins two labels whenever one is the
parent of the other in some input tree (multi-edges collapse).  The only
mutation is deleting a label: its live edges go one by one, and every
deletion that disconnects a component reports a split event carrying the
members of the smaller side, so per-component bookkeeping stays
proportional to the smaller half.

Two interchangeable connectivity backends:

  "hdt"     spanning-forest levels (see hdt.py), poly-log per deletion;
  "rescan"  interleaved two-frontier search from both edge endpoints on
            every deletion, cost charged to the smaller side.
"""

from collections import deque
from dataclasses import dataclass

from agreetree.errors import AlreadyDeletedError, DeadVertexError
from agreetree.hdt import HdtConnectivity

BACKENDS = ("rescan", "hdt")


@dataclass(frozen=True)
class SplitEvent:
    """One component split: the larger side keeps old_component."""
    old_component: int
    new_component: int
    smaller_members: tuple


class DisplayGraph:
    def __init__(self, vertices, edges, backend="rescan"):
        if backend not in BACKENDS:
            raise ValueError("unknown backend %r" % backend)
        self.backend = backend
        self.adj = {v: set() for v in vertices}
        for u, v in edges:
            if u != v:
                self.adj[u].add(v)
                self.adj[v].add(u)
        self.alive = set(self.adj)
        self.n_edges = sum(len(s) for s in self.adj.values()) // 2
        self.edges_deleted = 0
        self.vertices_deleted = 0

        self.comp_of = {}
        self.comp_size = {}
        self._next_comp = 0
        for start in self.adj:
            if start in self.comp_of:
                continue
            cid = self._next_comp
            self._next_comp += 1
            q = deque([start])
            self.comp_of[start] = cid
            n = 0
            while q:
                x = q.popleft()
                n += 1
                for y in self.adj[x]:
                    if y not in self.comp_of:
                        self.comp_of[y] = cid
                        q.append(y)
            self.comp_size[cid] = n

        self._hdt = None
        if backend == "hdt":
            self._hdt = HdtConnectivity(list(self.adj), self.adj)

    @classmethod
    def from_profile(cls, profile, backend="rescan"):
        """Build the display graph: trees unioned by shared labels."""
        edges = set()
        for t in profile.trees:
            for v in range(len(t)):
                p = t.parent[v]
                if p is None:
                    continue
                for a in t.labels[p]:
                    for b in t.labels[v]:
                        if a != b and (b, a) not in edges:
                            edges.add((a, b))
        return cls(profile.label_universe, edges, backend)

    # -- queries ---------------------------------------------------------------

    def is_alive(self, v):
        return v in self.alive

    def component_of(self, v):
        if v not in self.alive:
            raise DeadVertexError("label id %r was deleted" % (v,))
        return self.comp_of[v]

    def same_component(self, u, v):
        return self.component_of(u) == self.component_of(v)

    def components(self):
        """Current components as {component id: set of members} (testing)."""
        out = {}
        for v, c in self.comp_of.items():
            out.setdefault(c, set()).add(v)
        return out

    # -- mutation ----------------------------------------------------------------

    def delete_label(self, label):
        """Delete all live edges at label, then the vertex itself.

        Returns the SplitEvents in deletion order.  Deleting an edge that
        disconnects its component assigns a fresh component id to the
        smaller side (ties go to the side away from `label`)."""
        if label not in self.alive:
            raise AlreadyDeletedError("label id %r already deleted" % (label,))
        events = []
        for v in sorted(self.adj[label]):
            self.adj[label].discard(v)
            self.adj[v].discard(label)
            self.edges_deleted += 1
            if self._hdt is not None:
                smaller = self._hdt.delete_edge(label, v)
            else:
                smaller = self._rescan_split(label, v)
            if smaller is not None:
                old = self.comp_of[smaller[0]]
                new = self._next_comp
                self._next_comp += 1
                for m in smaller:
                    self.comp_of[m] = new
                self.comp_size[new] = len(smaller)
                self.comp_size[old] -= len(smaller)
                events.append(SplitEvent(old, new, tuple(smaller)))
        cid = self.comp_of.pop(label)
        self.comp_size[cid] -= 1
        if not self.comp_size[cid]:
            del self.comp_size[cid]
        self.alive.discard(label)
        self.vertices_deleted += 1
        return events

    def _rescan_split(self, u, v):
        """Two-frontier search after removing edge u-v; None if still
        connected, else the members of the smaller side."""
        adj = self.adj
        seen_u, seen_v = {u}, {v}
        qu, qv = deque([u]), deque([v])
        while qu and qv:
            x = qu.popleft()
            for y in adj[x]:
                if y in seen_v:
                    return None
                if y not in seen_u:
                    seen_u.add(y)
                    qu.append(y)
            x = qv.popleft()
            for y in adj[x]:
                if y in seen_u:
                    return None
                if y not in seen_v:
                    seen_v.add(y)
                    qv.append(y)
        # one frontier exhausted: that side is a complete component
        pre = self.comp_size[self.comp_of[u]]
        if not qu:
            size_u = len(seen_u)
            if size_u < pre - size_u:
                return list(seen_u)
            return self._finish(seen_v, qv)   # v's side smaller, or a tie
        size_v = len(seen_v)
        if size_v <= pre - size_v:
            return list(seen_v)
        return self._finish(seen_u, qu)

    def _finish(self, seen, q):
        adj = self.adj
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    q.append(y)
        return list(seen)
