#!/usr/bin/env python3
"""Regenerates the graph6 fixture corpora under tests/fixtures/.

Sources:
  * all graphs on 1..7 vertices: networkx.graph_atlas_g(), i.e. the graphs of
    Read & Wilson's "An Atlas of Graphs" (one representative per isomorphism
    class);
  * trees on 1..8 vertices: networkx.nonisomorphic_trees();
  * unicyclic graphs (connected, m = n) on 3..8 vertices: every tree plus one
    extra edge, deduplicated up to isomorphism.

Counts are asserted against OEIS A000088 (graphs), A000055 (trees) and
A001429 (unicyclic graphs) before anything is written.

Usage: python3 scripts/gen_fixtures.py
"""

import itertools
from pathlib import Path

import networkx as nx

GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}  # A000088
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}  # A000055
UNICYCLIC_COUNTS = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89}  # A001429

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def g6(graph):
    return nx.to_graph6_bytes(graph, header=False).decode("ascii").strip()


def write_lines(name, lines):
    path = FIXTURE_DIR / name
    path.write_text("".join(line + "\n" for line in lines), encoding="ascii")
    print(f"{path}: {len(lines)} graphs")


def all_graphs_by_order():
    by_order = {n: [] for n in GRAPH_COUNTS}
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if n in by_order:
            by_order[n].append(g6(graph))
    for n, lines in by_order.items():
        assert len(lines) == GRAPH_COUNTS[n], (n, len(lines))
        assert len(set(lines)) == len(lines), f"duplicate record at n={n}"
        lines.sort()
    return by_order


def trees_by_order():
    by_order = {}
    for n in TREE_COUNTS:
        if n == 1:
            trees = [nx.empty_graph(1)]
        else:
            trees = list(nx.nonisomorphic_trees(n))
        assert len(trees) == TREE_COUNTS[n], (n, len(trees))
        by_order[n] = trees
    return by_order


def unicyclic_by_order(trees):
    by_order = {}
    for n in UNICYCLIC_COUNTS:
        seen = []
        for tree in trees[n]:
            for u, v in itertools.combinations(range(n), 2):
                if tree.has_edge(u, v):
                    continue
                candidate = tree.copy()
                candidate.add_edge(u, v)
                if not any(nx.is_isomorphic(candidate, other) for other in seen):
                    seen.append(candidate)
        assert len(seen) == UNICYCLIC_COUNTS[n], (n, len(seen))
        by_order[n] = seen
    return by_order


def main():
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)

    graphs = all_graphs_by_order()
    for n, lines in graphs.items():
        write_lines(f"all_n{n}.g6", lines)
    write_lines("all_upto7.g6", [line for n in sorted(graphs) for line in graphs[n]])

    trees = trees_by_order()
    tree_lines = {n: sorted(g6(t) for t in ts) for n, ts in trees.items()}
    write_lines("trees_upto7.g6", [l for n in range(1, 8) for l in tree_lines[n]])
    write_lines("trees_upto8.g6", [l for n in range(1, 9) for l in tree_lines[n]])

    unicyclic = unicyclic_by_order(trees)
    uni_lines = {n: sorted(g6(u) for u in us) for n, us in unicyclic.items()}
    write_lines("unicyclic_upto7.g6", [l for n in range(3, 8) for l in uni_lines[n]])
    write_lines("unicyclic_upto8.g6", [l for n in range(3, 9) for l in uni_lines[n]])


if __name__ == "__main__":
    main()
