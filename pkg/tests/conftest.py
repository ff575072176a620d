import random

from lapmoments import Digraph


def random_digraph(rng: random.Random, n: int) -> Digraph:
    density = rng.uniform(0.1, 0.9)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < density
    ]
    return Digraph(n, arcs)
