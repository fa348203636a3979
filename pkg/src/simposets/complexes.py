"""Abstract simplicial complexes and graphs.

A complex is stored by its vertex list and its facets (inclusion-maximal
faces).  Construction normalizes arbitrary face families: faces contained in
another are absorbed, and vertices not covered by any given face become
singleton facets, so every vertex of the complex is a face.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import FormatError, StructureError
from .labels import Label, valid_vertex_name
from .poset import Poset


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    facets: tuple  # tuples of vertex names, each sorted; canonical row order

    def facet_sets(self):
        return [frozenset(f) for f in self.facets]

    def is_face(self, face) -> bool:
        fs = frozenset(face)
        return any(fs <= g for g in self.facet_sets())

    def faces(self):
        """All faces, the empty face included, in canonical order."""
        seen = {frozenset()}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                for sub in combinations(f, k):
                    seen.add(frozenset(sub))
        return sorted((tuple(sorted(f)) for f in seen), key=lambda t: (len(t), t))

    def face_poset(self) -> Poset:
        """Faces ordered by inclusion, with the empty face as bottom."""
        faces = self.faces()
        vidx = {v: i for i, v in enumerate(self.vertices)}
        labels, masks = [], []
        for f in faces:
            labels.append(Label.bottom() if not f else Label.atom_set(f))
            m = 0
            for v in f:
                m |= 1 << vidx[v]
            masks.append(m)
        arr = np.asarray(masks, dtype=np.int64)
        leq = (arr[:, None] & ~arr[None, :]) == 0
        by_mask = {m: lab for m, lab in zip(masks, labels)}
        covers = []
        for f, lab, fm in zip(faces, labels, masks):
            for v in f:
                covers.append((by_mask[fm ^ (1 << vidx[v])], lab))
        return Poset._trusted(labels, leq, covers=covers)

    def minimal_nonfaces(self):
        """Inclusion-minimal vertex subsets that are not faces.

        Brute force by increasing cardinality; exponential in the vertex
        count, intended for small complexes.
        """
        found = []
        verts = sorted(self.vertices)
        for k in range(2, len(verts) + 1):
            for cand in combinations(verts, k):
                cs = frozenset(cand)
                if any(m <= cs for m in found):
                    continue
                if not self.is_face(cs):
                    found.append(cs)
        return sorted((tuple(sorted(m)) for m in found), key=lambda t: (len(t), t))

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "facets": [list(f) for f in self.facets],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, obj) -> "SimplicialComplex":
        if not isinstance(obj, dict) or "vertices" not in obj or "facets" not in obj:
            raise FormatError("complex JSON needs 'vertices' and 'facets'")
        if not isinstance(obj["vertices"], list) or not isinstance(obj["facets"], list):
            raise FormatError("complex JSON fields have the wrong shape")
        for f in obj["facets"]:
            if not isinstance(f, list):
                raise FormatError(f"facet has the wrong shape: {f!r}")
        return make_complex(obj["vertices"], obj["facets"])

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_json_dict(json.loads(text))


def make_complex(vertices, facet_candidates) -> SimplicialComplex:
    """Normalize a vertex list and a face family into a complex.

    Contained candidates are absorbed into larger ones and uncovered
    vertices are added as singleton facets.
    """
    verts = list(vertices)
    for v in verts:
        if not valid_vertex_name(v):
            raise FormatError(f"invalid vertex name: {v!r}")
    if len(set(verts)) != len(verts):
        raise StructureError("vertex names must be unique")
    known = set(verts)
    sets = []
    for cand in facet_candidates:
        fs = frozenset(cand)
        for v in fs:
            if v not in known:
                raise StructureError(f"facet uses unknown vertex: {v!r}")
        if fs:
            sets.append(fs)
    covered = set().union(*sets) if sets else set()
    for v in verts:
        if v not in covered:
            sets.append(frozenset([v]))
    maximal = [f for f in set(sets) if not any(f < g for g in sets)]
    facets = tuple(sorted((tuple(sorted(f)) for f in maximal), key=lambda t: (len(t), t)))
    return SimplicialComplex(vertices=tuple(verts), facets=facets)


def parse_facet_string(text: str) -> SimplicialComplex:
    """Parse shorthand like ``a*b*c,b*c*d`` into a complex.

    Vertices are the names appearing in the string, in sorted order.
    """
    if not isinstance(text, str) or not text.strip():
        raise FormatError("empty facet string")
    facets = []
    for part in text.split(","):
        names = [n.strip() for n in part.strip().split("*")]
        if any(not n for n in names):
            raise FormatError(f"malformed facet in string: {part!r}")
        facets.append(names)
    verts = sorted({v for f in facets for v in f})
    return make_complex(verts, facets)


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: frozenset  # frozenset of sorted 2-tuples

    def neighbors(self, v):
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out


def make_graph(vertices, edges) -> Graph:
    verts = tuple(vertices)
    known = set(verts)
    if len(known) != len(verts):
        raise StructureError("vertex names must be unique")
    norm = set()
    for e in edges:
        a, b = tuple(e)
        if a not in known or b not in known:
            raise StructureError(f"edge uses unknown vertex: {e!r}")
        if a == b:
            raise StructureError(f"loops are not allowed: {e!r}")
        norm.add(tuple(sorted((a, b))))
    return Graph(vertices=verts, edges=frozenset(norm))


def _bron_kerbosch(r, p, x, neighbors, out):
    # Pivot variant; reports maximal cliques including isolated vertices.
    if not p and not x:
        out.append(frozenset(r))
        return
    pivot = max(p | x, key=lambda u: len(neighbors[u] & p))
    for v in sorted(p - neighbors[pivot]):
        _bron_kerbosch(r | {v}, p & neighbors[v], x & neighbors[v], neighbors, out)
        p = p - {v}
        x = x | {v}


def clique_complex(graph: Graph) -> SimplicialComplex:
    """The complex whose faces are the cliques of the graph."""
    neighbors = {v: graph.neighbors(v) for v in graph.vertices}
    cliques = []
    _bron_kerbosch(set(), set(graph.vertices), set(), neighbors, cliques)
    return make_complex(graph.vertices, cliques)
