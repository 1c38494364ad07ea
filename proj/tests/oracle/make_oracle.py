"""Independent per-graph invariants for every connected graph of order <= 7.

Uses networkx, numpy and scipy only; writes tests/data/oracle.tsv.
"""
import itertools
import sys
from fractions import Fraction
from pathlib import Path

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher
from scipy.optimize import linprog

PATTERNS = {
    "K3": nx.complete_graph(3),
    "K4": nx.complete_graph(4),
    "K5": nx.complete_graph(5),
    "C4": nx.cycle_graph(4),
    "C5": nx.cycle_graph(5),
    "C6": nx.cycle_graph(6),
    "bull": nx.Graph([(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]),
    "bowtie": nx.Graph([(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
    "open_bowtie": nx.Graph([(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)]),
    "diamond": nx.Graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
}


def canonical_bits(g):
    nodes = list(g.nodes)
    n = len(nodes)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    best = None
    for p in itertools.permutations(nodes):
        seq = tuple(1 if g.has_edge(p[i], p[j]) else 0 for i, j in pairs)
        if best is None or seq < best:
            best = seq
    return sum(b << k for k, b in enumerate(best))


def circumference(g):
    return max((len(c) for c in nx.simple_cycles(g)), default=0)


def automorphisms(g):
    return sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter())


def subgraph_count(g, pattern):
    embeddings = sum(1 for _ in GraphMatcher(g, pattern).subgraph_monomorphisms_iter())
    return embeddings // automorphisms(pattern)


def hosoya(g):
    edges = list(g.edges)
    if not edges:
        return 1
    u, v = edges[0]
    rest = g.copy()
    rest.remove_edge(u, v)
    both = g.copy()
    both.remove_nodes_from([u, v])
    return hosoya(rest) + hosoya(both)


def chromatic_number(g):
    nodes = list(g.nodes)
    for k in range(1, len(nodes) + 1):
        colour = {}

        def place(i):
            if i == len(nodes):
                return True
            v = nodes[i]
            for c in range(k):
                if all(colour.get(w) != c for w in g[v]):
                    colour[v] = c
                    if place(i + 1):
                        return True
                    del colour[v]
            return False

        if place(0):
            return k
    raise AssertionError


def strongly_regular(g):
    if len({d for _, d in g.degree}) != 1:
        return False
    lam, mu = set(), set()
    for u, v in itertools.combinations(g.nodes, 2):
        common = len(set(g[u]) & set(g[v]))
        (lam if g.has_edge(u, v) else mu).add(common)
    return len(lam) <= 1 and len(mu) <= 1


def fractional_chromatic(g):
    sets = list(nx.find_cliques(nx.complement(g)))
    nodes = list(g.nodes)
    a = np.array([[-1.0 if v in s else 0.0 for s in sets] for v in nodes])
    res = linprog(np.ones(len(sets)), A_ub=a, b_ub=-np.ones(len(nodes)), bounds=(0, None), method="highs")
    return Fraction(res.fun).limit_denominator(1000)


def int_poly(matrix):
    coeffs = np.poly(matrix) if len(matrix) else np.array([1.0])
    return ",".join(str(int(round(c))) for c in reversed(coeffs))


def row(g):
    n = g.number_of_nodes()
    a = nx.to_numpy_array(g, nodelist=sorted(g.nodes))
    lap = np.diag(a.sum(axis=1)) - a
    eig = np.linalg.eigvalsh(a)
    girth = nx.girth(g)
    frac = fractional_chromatic(g)
    values = {
        "order": n,
        "bits": canonical_bits(g),
        "edges": g.number_of_edges(),
        "diameter": nx.diameter(g),
        "radius": nx.radius(g),
        "girth": 0 if girth == float("inf") else int(girth),
        "circumference": circumference(g),
        "articulation_points": len(list(nx.articulation_points(g))),
        "endpoints": sum(1 for _, d in g.degree if d == 1),
        "vertex_connectivity": nx.node_connectivity(g) if n > 1 else 0,
        "edge_connectivity": nx.edge_connectivity(g) if n > 1 else 0,
        "is_bipartite": int(nx.is_bipartite(g)),
        "is_tree": int(nx.is_tree(g)),
        "is_eulerian": int(nx.is_eulerian(g)),
        "is_hamiltonian": int(n == 1 or (n >= 3 and circumference(g) == n)),
        "is_chordal": int(nx.is_chordal(g)),
        "is_planar": int(nx.check_planarity(g)[0]),
        "is_regular": int(n > 1 and nx.is_regular(g)),
        "is_strongly_regular": int(strongly_regular(g)),
        "is_distance_regular": int(n == 1 or nx.is_distance_regular(g)),
        "independence_number": max(len(c) for c in nx.find_cliques(nx.complement(g))),
        "clique_number": max(len(c) for c in nx.find_cliques(g)),
        "matching_number": len(nx.max_weight_matching(g, maxcardinality=True)),
        "hosoya_index": hosoya(g),
    }
    for name, pattern in PATTERNS.items():
        values["subgraph_" + name] = subgraph_count(g, pattern)
    values.update({
        "automorphism_count": automorphisms(g),
        "chromatic_number": chromatic_number(g),
        "is_integral": int(all(abs(x - round(x)) < 1e-7 for x in eig)),
        "simple_spectrum": int(all(abs(x - y) > 1e-7 for x, y in zip(eig, eig[1:]))),
        "fractional_chromatic": f"{frac.numerator}/{frac.denominator}",
        "spanning_trees": int(round(np.linalg.det(lap[1:, 1:]))) if n > 1 else 1,
        "char_poly": int_poly(a),
        "laplacian_poly": int_poly(lap),
    })
    return values


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "data" / "oracle.tsv"
    rows = [row(g) for g in nx.graph_atlas_g() if g.number_of_nodes() > 0 and nx.is_connected(g)]
    rows.sort(key=lambda r: (r["order"], r["bits"]))
    with out.open("w") as f:
        f.write("\t".join(rows[0]) + "\n")
        for r in rows:
            f.write("\t".join(str(v) for v in r.values()) + "\n")


if __name__ == "__main__":
    main()
