"""Seeded random graphs shared by the property tests."""

import random

import networkx as nx

from src.graph import Graph


def random_connected_graphs(count: int, n_min: int, n_max: int, seed: int = 20240601) -> list[Graph]:
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < count:
        n = rng.randint(n_min, n_max)
        p = rng.uniform(0.25, 0.65)
        nxg = nx.gnp_random_graph(n, p, seed=rng.randrange(2**31))
        if nx.is_connected(nxg):
            graphs.append(Graph.from_networkx(nxg))
    return graphs


def atlas_graphs(max_n: int, connected_only: bool = True) -> list[Graph]:
    """Every graph on 2..max_n vertices up to isomorphism (max_n <= 7)."""
    graphs = []
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if n < 2 or n > max_n:
            continue
        if connected_only and not nx.is_connected(nxg):
            continue
        graphs.append(Graph.from_networkx(nxg))
    return graphs
