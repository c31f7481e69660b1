#!/usr/bin/env python3
"""Generate the cage edge-list fixtures under data/.

The (3,8)- and (4,8)-cages are built as incidence graphs of the symplectic
quadrangle W(q), q = 2, 3, then renumbered so that the reference cycle
orderings in data/sequences/ are squares of Hamiltonian cycles in the two
antipodal components (points 0..N-1, lines N..2N-1).

The (3,12)-cage is the incidence graph of the split Cayley hexagon H(2):
points of the quadric X0X4 + X1X5 + X2X6 = X3^2 in PG(6,2), lines the
quadric lines whose Grassmann coordinates satisfy p12=p34, p20=p35,
p01=p36, p56=p30, p64=p31, p45=p32.

Everything here is written independently of the C++ library so the fixtures
can serve as an outside reference. Only prime q is supported.
"""

import argparse
import itertools
import pathlib
import sys
from collections import deque

REFERENCE_SEQUENCES = {
    2: (
        [0, 1, 2, 4, 5, 6, 7, 14, 13, 12, 3, 8, 11, 9, 10, 0],
        [15, 19, 23, 25, 16, 18, 29, 22, 20, 26, 21, 17, 24, 28, 27, 15],
    ),
    3: (
        [0, 1, 2, 3, 5, 7, 8, 6, 9, 10, 12, 11, 13, 22, 4, 14, 16, 17, 15, 18,
         19, 21, 20, 24, 26, 25, 23, 27, 28, 31, 29, 30, 33, 34, 35, 32, 36,
         37, 39, 38, 0],
        [40, 45, 50, 43, 44, 49, 42, 47, 48, 41, 46, 51, 52, 57, 59, 55, 56,
         61, 64, 54, 58, 60, 53, 62, 67, 69, 72, 65, 63, 70, 71, 79, 75, 66,
         77, 76, 68, 78, 73, 74, 40],
    ),
}


def projective_points(dim, q):
    """Canonical points of PG(dim-1, q): leftmost nonzero coordinate is 1."""
    pts = []
    for v in itertools.product(range(q), repeat=dim):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def normalize(v, q):
    for c in v:
        if c:
            inv = pow(c, q - 2, q)
            return tuple((x * inv) % q for x in v)
    raise ValueError("zero vector")


def symplectic_quadrangle(q):
    pts = projective_points(4, q)
    index = {p: i for i, p in enumerate(pts)}

    def form(u, v):
        return (u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2]) % q

    lines = set()
    for a, b in itertools.combinations(pts, 2):
        if form(a, b):
            continue
        members = {index[a], index[b]}
        for lam in range(1, q):
            members.add(index[normalize(tuple((x + lam * y) % q for x, y in zip(a, b)), q)])
        lines.add(tuple(sorted(members)))
    lines = sorted(lines)
    n = len(pts)
    edges = [(p, n + li) for li, line in enumerate(lines) for p in line]
    return n, edges


def split_cayley_hexagon_2():
    pts = [v for v in itertools.product(range(2), repeat=7)
           if any(v) and (v[0] * v[4] + v[1] * v[5] + v[2] * v[6] + v[3] * v[3]) % 2 == 0]
    index = {p: i for i, p in enumerate(pts)}
    rules = [((1, 2), 4), ((2, 0), 5), ((0, 1), 6), ((5, 6), 0), ((6, 4), 1), ((4, 5), 2)]
    lines = set()
    for a, b in itertools.combinations(pts, 2):
        c = tuple((x + y) % 2 for x, y in zip(a, b))
        if c not in index:
            continue

        def grass(i, j):
            return (a[i] * b[j] - a[j] * b[i]) % 2

        if all(grass(i, j) == grass(3, k) for (i, j), k in rules):
            lines.add(tuple(sorted((index[a], index[b], index[c]))))
    lines = sorted(lines)
    n = len(pts)
    edges = [(p, n + li) for li, line in enumerate(lines) for p in line]
    return 2 * n, edges


def adjacency(order, edges):
    adj = [set() for _ in range(order)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs(adj, s):
    dist = [-1] * len(adj)
    dist[s] = 0
    dq = deque([s])
    while dq:
        u = dq.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                dq.append(w)
    return dist


def check_cage(order, edges, degree, diameter, girth):
    adj = adjacency(order, edges)
    assert all(len(a) == degree for a in adj), "not regular"
    best_girth = None
    diam = 0
    for s in range(order):
        dist = bfs(adj, s)
        assert min(dist) >= 0, "disconnected"
        diam = max(diam, max(dist))
        # shortest cycle through s: a non-tree edge closing two BFS branches
        parent = {s: None}
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    dq.append(w)
                elif parent[u] != w:
                    cyc = dist[u] + dist[w] + 1
                    best_girth = cyc if best_girth is None else min(best_girth, cyc)
    assert diam == diameter, f"diameter {diam}"
    assert best_girth == girth, f"girth {best_girth}"


def square_cycle(vertices, far):
    """Backtracking search for the square of a Hamiltonian cycle."""
    n = len(vertices)
    sys.setrecursionlimit(10000)
    order = [vertices[0]]
    used = {vertices[0]}

    def ok_wrap(seq):
        return (far(seq[-1], seq[0]) and far(seq[-1], seq[1]) and far(seq[-2], seq[0]))

    def extend():
        if len(order) == n:
            return ok_wrap(order)
        cands = [v for v in vertices if v not in used and far(order[-1], v)
                 and (len(order) < 2 or far(order[-2], v))]
        cands.sort(key=lambda v: sum(1 for w in vertices if w not in used and far(v, w)))
        for v in cands:
            order.append(v)
            used.add(v)
            if extend():
                return True
            order.pop()
            used.discard(v)
        return False

    if not extend():
        raise RuntimeError("no square of a Hamiltonian cycle found")
    return order


def relabel_to_reference(q):
    n, edges = symplectic_quadrangle(q)
    order = 2 * n
    adj = adjacency(order, edges)
    dist = [bfs(adj, s) for s in range(order)]

    def far(u, v):
        return dist[u][v] == 4

    point_seq, line_seq = REFERENCE_SEQUENCES[q]
    mapping = {}
    for part, ref in ((list(range(n)), point_seq[:-1]), (list(range(n, order)), line_seq[:-1])):
        assert sorted(ref) == list(range(min(ref), min(ref) + n)), "reference not a permutation"
        cyc = square_cycle(part, far)
        for old, new in zip(cyc, ref):
            mapping[old] = new
    relabelled = sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in edges)
    return order, relabelled


def write_edge_list(path, order, edges, header):
    with open(path, "w", encoding="ascii") as out:
        for line in header:
            out.write(f"# {line}\n")
        out.write(f"# order {order}\n")
        for u, v in edges:
            out.write(f"{u} {v}\n")


def write_sequence(path, seq):
    with open(path, "w", encoding="ascii") as out:
        out.write(" ".join(str(v) for v in seq) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parents[2] / "data"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    (out / "cages").mkdir(parents=True, exist_ok=True)
    (out / "sequences").mkdir(parents=True, exist_ok=True)

    for q, name in ((2, "gq2"), (3, "gq3")):
        order, edges = relabel_to_reference(q)
        check_cage(order, edges, q + 1, 4, 8)
        half = order // 2
        write_edge_list(out / "cages" / f"{name}.el", order, edges, [
            f"({q + 1},8)-cage: incidence graph of the symplectic quadrangle W({q})",
            f"points 0..{half - 1}, lines {half}..{order - 1}",
        ])
        point_seq, line_seq = REFERENCE_SEQUENCES[q]
        write_sequence(out / "sequences" / f"{name}_points.txt", point_seq)
        write_sequence(out / "sequences" / f"{name}_lines.txt", line_seq)

    order, edges = split_cayley_hexagon_2()
    edges = sorted(edges)
    check_cage(order, edges, 3, 6, 12)
    write_edge_list(out / "cages" / "gh2.el", order, edges, [
        "(3,12)-cage: incidence graph of the split Cayley hexagon H(2)",
        f"points 0..{order // 2 - 1}, lines {order // 2}..{order - 1}",
    ])


if __name__ == "__main__":
    main()
