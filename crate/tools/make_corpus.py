#!/usr/bin/env python3
"""Generate the corpus data files (edge lists + rotation systems).

Edge ids are positions in the lexicographically sorted list of (u,v), u<v.
Rotation files list, per vertex, the incident edge ids in the cyclic order
of a planar embedding computed with networkx. Face tracing rule used for
verification: after traversing directed edge (u,v), leave v along the
successor of (v,u) in v's rotation.
"""

import itertools
import math
import random
import sys
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "crates" / "cli" / "data"


def canon_edges(edges):
    es = sorted({(min(u, v), max(u, v)) for (u, v) in edges})
    return es


def edge_ids(edges):
    return {e: i for i, e in enumerate(edges)}


def rotation_from_embedding(G, edges):
    ok, emb = nx.check_planarity(G)
    assert ok, "graph is not planar"
    eid = edge_ids(edges)
    rot = {}
    for v in sorted(G.nodes()):
        order = list(emb.neighbors_cw_order(v))
        rot[v] = [eid[(min(v, w), max(v, w))] for w in order]
    return rot


def trace_faces(n, edges, rot):
    """Face degrees under the successor-of-reverse-edge rule."""
    eid = edge_ids(edges)
    # directed edge = (tail, head)
    darts = set()
    for (u, v) in edges:
        darts.add((u, v))
        darts.add((v, u))
    pos = {v: {e: i for i, e in enumerate(rot[v])} for v in rot}
    faces = []
    while darts:
        u, v = next(iter(darts))
        face = []
        a, b = u, v
        while True:
            face.append((a, b))
            darts.discard((a, b))
            e_back = eid[(min(a, b), max(a, b))]
            i = pos[b][e_back]
            e_next = rot[b][(i + 1) % len(rot[b])]
            x, y = edges[e_next]
            c = y if x == b else x
            a, b = b, c
            if (a, b) == (u, v):
                break
        faces.append(face)
    assert sum(len(f) for f in faces) == 2 * len(edges)
    return faces


def write_graph(name, edges, rot=None):
    OUT.mkdir(parents=True, exist_ok=True)
    edges = canon_edges(edges)
    n = max(max(e) for e in edges) + 1
    with open(OUT / f"{name}.edges", "w") as fh:
        fh.write(f"# {name}: {n} vertices, {len(edges)} edges\n")
        for (u, v) in edges:
            fh.write(f"{u} {v}\n")
    if rot is not None:
        faces = trace_faces(n, edges, rot)
        euler = n - len(edges) + len(faces)
        assert euler == 2, f"{name}: Euler check failed ({euler})"
        degs = sorted(len(f) for f in faces)
        with open(OUT / f"{name}.rot", "w") as fh:
            fh.write(f"# {name}: planar rotation, {len(faces)} faces, degrees {degs}\n")
            for v in sorted(rot):
                fh.write(f"{v}: " + " ".join(str(e) for e in rot[v]) + "\n")
        print(f"{name}: n={n} m={len(edges)} faces={len(faces)} degrees={degs}")
    else:
        print(f"{name}: n={n} m={len(edges)} (no rotation)")


def planar_rot(edges):
    G = nx.Graph()
    G.add_edges_from(edges)
    return rotation_from_embedding(G, canon_edges(edges))


# ---------------------------------------------------------------- herschel

def find_herschel():
    """Smallest 3-connected planar quadrangulation: 11 vertices, parts 5+6.

    Part A = vertices 0..4 (three of degree 4, two of degree 3),
    part B = vertices 5..10, all of degree 3, each joined to a 3-subset of A.
    """
    A = list(range(5))
    triples = list(itertools.combinations(A, 3))
    for combo in itertools.combinations_with_replacement(triples, 6):
        degA = [0] * 5
        for t in combo:
            for a in t:
                degA[a] += 1
        if sorted(degA) != [3, 3, 4, 4, 4]:
            continue
        edges = [(a, 5 + i) for i, t in enumerate(combo) for a in t]
        G = nx.Graph(edges)
        if G.number_of_nodes() != 11:
            continue
        if not nx.check_planarity(G)[0]:
            continue
        if nx.node_connectivity(G) < 3:
            continue
        return edges
    raise RuntimeError("no quadrangulation found")


# ---------------------------------------------------------- grinberg graph

class Triangulation:
    """Simple sphere triangulation with edge flips."""

    def __init__(self, triangles):
        self.tri = set(frozenset(t) for t in triangles)
        self.adj = {}
        for t in self.tri:
            for e in itertools.combinations(sorted(t), 2):
                self.adj.setdefault(frozenset(e), set()).add(t)
        assert all(len(ts) == 2 for ts in self.adj.values())

    def degree(self, v):
        return sum(1 for e in self.adj if v in e)

    def degrees(self):
        verts = set()
        for t in self.tri:
            verts |= t
        return sorted(self.degree(v) for v in verts)

    def flippable(self, e):
        t1, t2 = self.adj[e]
        a = next(iter(t1 - e))
        b = next(iter(t2 - e))
        if a == b or frozenset((a, b)) in self.adj:
            return None
        u, v = sorted(e)
        if self.degree(u) <= 3 or self.degree(v) <= 3:
            return None
        return (u, v, a, b)

    def flip(self, e):
        u, v, a, b = self.flippable(e)
        t1, t2 = self.adj[e]
        for t in (t1, t2):
            for ee in itertools.combinations(sorted(t), 2):
                self.adj[frozenset(ee)].discard(t)
            self.tri.discard(t)
        del self.adj[frozenset((u, v))]
        for t in (frozenset((u, a, b)), frozenset((v, a, b))):
            self.tri.add(t)
            for ee in itertools.combinations(sorted(t), 2):
                self.adj.setdefault(frozenset(ee), set()).add(t)


def random_sphere_triangulation(nv, rng):
    from scipy.spatial import ConvexHull
    import numpy as np
    while True:
        pts = rng.standard_normal((nv, 3))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        hull = ConvexHull(pts)
        if len(hull.vertices) == nv:
            return Triangulation([tuple(s) for s in hull.simplices])


def find_grinberg46(seed=1):
    """Cubic planar graph on 46 vertices with 21 pentagonal, 3 octagonal
    and 1 enneagonal face, built as the dual of a 25-vertex sphere
    triangulation with degree multiset {5^21, 8^3, 9}."""
    import numpy as np
    rng = np.random.default_rng(seed)
    pyrng = random.Random(seed)
    target = sorted([5] * 21 + [8, 8, 8, 9])

    def cost(tri):
        return sum(abs(a - b) for a, b in zip(tri.degrees(), target))

    for attempt in range(50):
        tri = random_sphere_triangulation(25, rng)
        c = cost(tri)
        temp = 2.0
        for step in range(400000):
            if c == 0:
                break
            e = pyrng.choice(list(tri.adj.keys()))
            fl = tri.flippable(e)
            if fl is None:
                continue
            _, _, a, b = fl
            tri.flip(e)
            c2 = cost(tri)
            if c2 <= c or pyrng.random() < math.exp((c - c2) / temp):
                c = c2
            elif tri.flippable(frozenset((a, b))) is not None:
                tri.flip(frozenset((a, b)))  # undo
            else:
                c = c2  # undo blocked, keep the move
            temp = max(0.05, temp * 0.99995)
        if c != 0:
            continue
        # dualize
        tris = sorted(tuple(sorted(t)) for t in tri.tri)
        tid = {frozenset(t): i for i, t in enumerate(tris)}
        dual_edges = set()
        for e, (t1, t2) in tri.adj.items():
            dual_edges.add(tuple(sorted((tid[t1], tid[t2]))))
        G = nx.Graph(dual_edges)
        if G.number_of_nodes() != 46 or G.number_of_edges() != 69:
            continue
        if not all(d == 3 for _, d in G.degree()):
            continue
        if not nx.check_planarity(G)[0] or nx.node_connectivity(G) < 3:
            continue
        edges = canon_edges(dual_edges)
        rot = planar_rot(edges)
        degs = sorted(len(f) for f in trace_faces(46, edges, rot))
        if degs == sorted([5] * 21 + [8, 8, 8, 9]):
            return edges
    raise RuntimeError("annealing failed")


def main():
    write_graph("triangle", [(0, 1), (1, 2), (0, 2)],
                planar_rot([(0, 1), (1, 2), (0, 2)]))
    sq = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]
    write_graph("chorded-square", sq, planar_rot(sq))
    k4 = list(itertools.combinations(range(4), 2))
    write_graph("k4", k4, planar_rot(k4))
    k24 = [(u, v) for u in (0, 1) for v in (2, 3, 4, 5)]
    write_graph("k24", k24, planar_rot(k24))
    prism = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
             (0, 3), (1, 4), (2, 5)]
    write_graph("prism", prism, planar_rot(prism))

    herschel = find_herschel()
    write_graph("herschel", herschel, planar_rot(herschel))

    pet = nx.petersen_graph()
    write_graph("petersen", list(pet.edges()))

    dod = nx.dodecahedral_graph()
    write_graph("dodecahedron", list(dod.edges()),
                planar_rot(list(dod.edges())))

    tut = nx.tutte_graph()
    write_graph("tutte", list(tut.edges()), planar_rot(list(tut.edges())))

    grin = find_grinberg46()
    write_graph("grinberg-graph", grin, planar_rot(grin))


if __name__ == "__main__":
    sys.exit(main())
