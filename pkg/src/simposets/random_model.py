"""Random simplicial posets from clique complexes of random graphs.

Randomness comes from splitmix64, a fixed 64-bit generator that is easy to
reimplement anywhere (state advances by the golden-gamma constant, output
is finalized by two xor-multiply rounds).  Doubles take the top 53 bits of
one output word.  Test vectors live in the test suite and the README.

``rand_simplicial_poset`` draws one graph for each of the two probability
parameters from a single stream (the first graph's edges are drawn first,
in canonical pair order), takes clique complexes, and glues the pair with
``theta_glue``.  Identical parameters therefore reproduce identical posets
bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import Graph, SimplicialComplex, clique_complex, make_graph
from .errors import SizeLimitError
from .gluing import theta_glue
from .poset import Poset

RAND_N_MAX = 12
_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 sequence; seed is any 64-bit unsigned integer."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        if not isinstance(seed, int):
            raise ValueError(f"seed must be an integer, got {seed!r}")
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53


@dataclass(frozen=True)
class RandomModelParams:
    n: int
    p1: float
    p2: float
    seed: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if self.n > RAND_N_MAX:
            raise SizeLimitError(f"the random model is guarded at n <= {RAND_N_MAX}")
        for name, p in (("p1", self.p1), ("p2", self.p2)):
            if not 0.0 <= float(p) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 1 << 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")


def erdos_renyi_graph(n: int, p: float, rng: SplitMix64) -> Graph:
    """G(n, p) on vertices v1..vn.

    One draw is consumed per vertex pair, in index order (v1,v2), (v1,v3),
    ..., regardless of p, so the stream position after a graph is a
    function of n alone.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if not 0.0 <= float(p) <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    vertices = [f"v{i + 1}" for i in range(n)]
    edges = []
    for i, j in combinations(range(n), 2):
        if rng.random() < p:
            edges.append((vertices[i], vertices[j]))
    return make_graph(vertices, edges)


def kahle_complex(n: int, p: float, rng: SplitMix64) -> SimplicialComplex:
    """Clique complex of G(n, p)."""
    return clique_complex(erdos_renyi_graph(n, p, rng))


def rand_simplicial_poset(params: RandomModelParams) -> Poset:
    rng = SplitMix64(params.seed)
    first = kahle_complex(params.n, params.p1, rng)
    second = kahle_complex(params.n, params.p2, rng)
    return theta_glue(first, second)


def run_batch(params: RandomModelParams, count: int) -> dict:
    """Sample ``count`` posets on derived seeds (base seed + index) and
    report per-sample facts plus the face-poset tally."""
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")
    per_sample = []
    hits = 0
    for i in range(count):
        seed_i = (params.seed + i) & _MASK64
        sample = rand_simplicial_poset(
            RandomModelParams(n=params.n, p1=params.p1, p2=params.p2, seed=seed_i)
        )
        fp = sample.is_face_poset()
        hits += fp
        per_sample.append(
            {
                "seed": seed_i,
                "is_face_poset": fp,
                "atoms": len(sample.atoms()),
                "elements": len(sample),
            }
        )
    return {
        "params": {"n": params.n, "p1": params.p1, "p2": params.p2, "seed": params.seed},
        "samples": count,
        "face_poset_count": hits,
        "per_sample": per_sample,
    }
