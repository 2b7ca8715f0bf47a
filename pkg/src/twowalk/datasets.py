"""Bundled example graphs."""

from __future__ import annotations

from importlib import resources

from .core import Graph
from .formats import parse_edgelist


def _load(name: str) -> Graph:
    text = resources.files(__package__).joinpath("data", name).read_text()
    return parse_edgelist(text)


def similar_square_pair() -> tuple[Graph, Graph]:
    """The bundled 12-vertex 4-regular pair: connected, nonbipartite,
    non-isomorphic graphs whose adjacency squares are permutation-similar
    (though not equal under the shipped labelings)."""
    return _load("pair12_a.edges"), _load("pair12_b.edges")
