"""Exact and approximate counting of proper graph colourings.

Graphs are plain ``(n, edges)`` pairs with 0-based vertices. Report
functions return the same JSON documents as the command-line tool, parsed
into dictionaries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import _colcount
from ._colcount import SCHEMA_VERSION, ColcountError

__all__ = [
    "SCHEMA_VERSION",
    "ColcountError",
    "Graph",
    "generate_gnp",
    "read_edge_list",
    "estimate",
    "error_decomposition",
    "verify",
    "count_exact",
    "chromatic_polynomial",
    "first_moment",
    "exact_tv",
    "tv_check",
    "percolation_exact",
    "percolation_mc",
    "coupling_map",
    "decay_profile",
    "glauber",
]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple = field(default_factory=tuple)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((int(a), int(b)) for a, b in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def to_edge_list(self) -> str:
        return _colcount.write_edge_list(self.n, list(self.edges))


def _args(g: Graph):
    return g.n, list(g.edges)


def generate_gnp(n: int, d: float, seed: int) -> Graph:
    return Graph.from_edges(n, _colcount.generate_gnp(n, d, seed))


def read_edge_list(text: str) -> Graph:
    n, edges = _colcount.read_edge_list(text)
    return Graph.from_edges(n, edges)


def estimate(
    g: Graph,
    k: int,
    *,
    t: Optional[int] = None,
    ell: Optional[int] = None,
    d: Optional[float] = None,
    r_exponent: float = 0.3,
    threads: int = 1,
) -> dict:
    return json.loads(
        _colcount.estimate_json(*_args(g), k, t=t, ell=ell, d=d, r_exponent=r_exponent, threads=threads)
    )


def error_decomposition(
    g: Graph, k: int, *, t: Optional[int] = None, ell: Optional[int] = None, threads: int = 1
) -> dict:
    return json.loads(_colcount.error_decomposition_json(*_args(g), k, t=t, ell=ell, threads=threads))


def verify(
    g: Graph, d: float, k: int, epsilon1: float, *, ell: Optional[int] = None, threads: int = 1
) -> dict:
    return json.loads(_colcount.verify_json(*_args(g), d, k, epsilon1, ell=ell, threads=threads))


def count_exact(g: Graph, k: int) -> int:
    return int(_colcount.brute_force_count(*_args(g), k))


def chromatic_polynomial(g: Graph) -> list[int]:
    """Coefficients in the monomial basis, constant term first."""
    return [int(c) for c in _colcount.chromatic_polynomial(*_args(g))]


def first_moment(d: float, k: int) -> float:
    return _colcount.first_moment(d, k)


def exact_tv(g: Graph, x: int, sigma: int, eta: int, lam: Sequence[int], k: int) -> Optional[float]:
    return _colcount.exact_tv(*_args(g), x, sigma, eta, list(lam), k)


def tv_check(g: Graph, x: int, lam: Sequence[int], k: int) -> dict:
    return json.loads(_colcount.tv_check_json(*_args(g), x, list(lam), k))


def percolation_exact(g: Graph, root: int, target: Sequence[int], s: int) -> float:
    return _colcount.percolation_exact(*_args(g), root, list(target), s)


def percolation_mc(
    g: Graph, root: int, target: Sequence[int], s: int, samples: int, seed: int, threads: int = 1
) -> tuple[float, float]:
    """Returns the estimate and its 95% half-width."""
    return _colcount.percolation_mc(*_args(g), root, list(target), s, samples, seed, threads)


def coupling_map(g: Graph, x: int, sigma: int, eta: int, xi: Sequence[int], k: int) -> list[int]:
    return _colcount.coupling_map(*_args(g), x, sigma, eta, list(xi), k)


def decay_profile(g: Graph, x: int, k: int, t_max: int) -> dict:
    return json.loads(_colcount.decay_json(*_args(g), x, k, t_max))


def glauber(g: Graph, k: int, v: int, u: int, sweeps: int, burn_in: int, seed: int) -> dict:
    return json.loads(_colcount.glauber_json(*_args(g), k, v, u, sweeps, burn_in, seed))
