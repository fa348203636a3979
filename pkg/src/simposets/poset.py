"""Finite posets with materialized reachability.

A :class:`Poset` stores its elements in canonical label order together with
a read-only boolean matrix ``leq`` where ``leq[i, j]`` means element ``i`` is
below element ``j``.  Cover pairs are kept alongside and are always the
transitive reduction of ``leq``, so order queries are O(1) and every listing
derived from a poset is deterministic.

The simplicial vocabulary lives here as methods: atoms, atom supports,
``is_simplicial`` (every lower interval is a boolean lattice) and
``is_face_poset`` (additionally, elements are determined by their atom
support).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    ElementNotFoundError,
    FormatError,
    InvariantError,
    MeetUndefinedError,
    PreconditionError,
    SizeLimitError,
    StructureError,
)
from .labels import Label

BOOLEAN_LATTICE_MAX = 20
ISOMORPHISM_MAX = 500


def _closure(adj: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure via repeated boolean squaring."""
    n = adj.shape[0]
    reach = adj | np.eye(n, dtype=bool)
    while True:
        f = reach.astype(np.float32)
        nxt = (f @ f) > 0
        if (nxt == reach).all():
            return reach
        reach = nxt


def _reduction(leq: np.ndarray) -> np.ndarray:
    """Transitive reduction (cover matrix) of a partial order matrix."""
    strict = leq & ~np.eye(leq.shape[0], dtype=bool)
    f = strict.astype(np.float32)
    implied = (f @ f) > 0
    return strict & ~implied


@dataclass(frozen=True)
class AtomSupport:
    """An element together with the set of atoms below it."""

    element: Label
    atoms: frozenset

    def __len__(self):
        return len(self.atoms)


class Poset:
    __slots__ = ("elements", "covers", "_leq", "_index", "_bottom", "_supports", "_simplicial", "_heights")

    def __init__(self, elements, covers, leq):
        # Internal: use from_covers / from_relations / from_json instead.
        self.elements = elements
        self.covers = covers
        self._leq = leq
        self._index = {e: i for i, e in enumerate(elements)}
        self._bottom = None
        self._supports = None
        self._simplicial = None
        self._heights = None

    # ----- construction -------------------------------------------------

    @classmethod
    def _trusted(cls, elements, leq, covers=None):
        """Build from a matrix the caller derived combinatorially.

        Elements are re-sorted into canonical label order.  Reflexivity and
        antisymmetry are always asserted; full closure verification is left
        to from_covers and to the test suite.
        """
        elements = list(elements)
        n = len(elements)
        if n == 0:
            raise StructureError("a poset needs at least one element")
        if len(set(elements)) != n:
            raise StructureError("element labels must be unique")
        order = sorted(range(n), key=lambda i: elements[i].key)
        labels = tuple(elements[i] for i in order)
        perm = np.asarray(order)
        leq = np.asarray(leq, dtype=bool)[np.ix_(perm, perm)]
        if not leq.diagonal().all():
            raise InvariantError("reachability matrix is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise InvariantError("reachability matrix is not antisymmetric")
        if covers is None:
            red = _reduction(leq)
            cover_set = frozenset(
                (labels[i], labels[j]) for i, j in zip(*np.nonzero(red))
            )
        else:
            cover_set = frozenset(covers)
        leq.setflags(write=False)
        return cls(labels, cover_set, leq)

    @classmethod
    def from_covers(cls, elements, covers):
        """Build from explicit cover pairs ``(lower, upper)``.

        The pairs must be exactly the transitive reduction of the order they
        generate; redundant or cyclic input is rejected.
        """
        elements = list(elements)
        if not elements:
            raise StructureError("a poset needs at least one element")
        if len(set(elements)) != len(elements):
            raise StructureError("element labels must be unique")
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        adj = np.zeros((n, n), dtype=bool)
        cover_list = []
        for lo, hi in covers:
            if lo not in index:
                raise ElementNotFoundError(f"unknown element in covers: {lo}")
            if hi not in index:
                raise ElementNotFoundError(f"unknown element in covers: {hi}")
            adj[index[lo], index[hi]] = True
            cover_list.append((lo, hi))
        reach = _closure(adj)
        if (reach & reach.T & ~np.eye(n, dtype=bool)).any():
            raise StructureError("covers contain a cycle")
        red = _reduction(reach)
        if not (red == adj).all():
            raise StructureError("covers must be transitively reduced cover pairs")
        return cls._trusted(elements, reach, covers=cover_list)

    @classmethod
    def from_relations(cls, elements, relations):
        """Build from arbitrary ``lower <= upper`` pairs; closure is taken."""
        elements = list(elements)
        if not elements:
            raise StructureError("a poset needs at least one element")
        if len(set(elements)) != len(elements):
            raise StructureError("element labels must be unique")
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        adj = np.zeros((n, n), dtype=bool)
        for lo, hi in relations:
            if lo not in index or hi not in index:
                raise ElementNotFoundError(f"unknown element in relations: ({lo}, {hi})")
            adj[index[lo], index[hi]] = True
        reach = _closure(adj)
        if (reach & reach.T & ~np.eye(n, dtype=bool)).any():
            raise StructureError("relations contain a cycle")
        return cls._trusted(elements, reach)

    # ----- basic queries ------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label):
        return label in self._index

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and self.covers == other.covers
        )

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        return f"Poset({len(self.elements)} elements, {len(self.covers)} covers)"

    def _require(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ElementNotFoundError(f"element not in poset: {label}") from None

    def leq(self, a, b) -> bool:
        return bool(self._leq[self._require(a), self._require(b)])

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def bottom(self) -> Label:
        """The unique minimum element; StructureError if there is none."""
        if self._bottom is None:
            strict = self._leq & ~np.eye(len(self.elements), dtype=bool)
            mins = np.flatnonzero(~strict.any(axis=0))
            if mins.size != 1:
                raise StructureError("poset has no unique minimal element")
            self._bottom = self.elements[mins[0]]
        return self._bottom

    def atoms(self) -> frozenset:
        """Elements covering the unique minimum."""
        bot = self.bottom()
        return frozenset(hi for lo, hi in self.covers if lo == bot)

    def lower_set(self, v) -> frozenset:
        j = self._require(v)
        return frozenset(self.elements[i] for i in np.flatnonzero(self._leq[:, j]))

    def upper_set(self, v) -> frozenset:
        i = self._require(v)
        return frozenset(self.elements[j] for j in np.flatnonzero(self._leq[i]))

    def maximal_elements(self) -> frozenset:
        strict = self._leq & ~np.eye(len(self.elements), dtype=bool)
        return frozenset(self.elements[i] for i in np.flatnonzero(~strict.any(axis=1)))

    def minimal_elements(self) -> frozenset:
        strict = self._leq & ~np.eye(len(self.elements), dtype=bool)
        return frozenset(self.elements[j] for j in np.flatnonzero(~strict.any(axis=0)))

    # ----- atom supports and simpliciality --------------------------------

    def _support_masks(self):
        """Per-element atom-support bitmasks over the canonical atom order."""
        if self._supports is None:
            bot = self.bottom()
            atom_idx = sorted(self._require(a) for a in self.atoms())
            masks = [0] * len(self.elements)
            for bit, ai in enumerate(atom_idx):
                for j in np.flatnonzero(self._leq[ai]):
                    masks[j] |= 1 << bit
            self._supports = (tuple(masks), tuple(atom_idx))
        return self._supports

    def atom_support(self, v) -> AtomSupport:
        j = self._require(v)
        masks, atom_idx = self._support_masks()
        m = masks[j]
        return AtomSupport(
            element=v,
            atoms=frozenset(
                self.elements[ai] for bit, ai in enumerate(atom_idx) if m >> bit & 1
            ),
        )

    def is_simplicial(self) -> bool:
        """True iff there is a unique minimum and every interval [0,v] is a
        boolean lattice (checked through the atom-support map on each lower
        set: right size, injective, and an order isomorphism)."""
        if self._simplicial is None:
            self._simplicial = self._compute_simplicial()
        return self._simplicial

    def _compute_simplicial(self) -> bool:
        n = len(self.elements)
        strict = self._leq & ~np.eye(n, dtype=bool)
        if np.flatnonzero(~strict.any(axis=0)).size != 1:
            return False
        masks, _ = self._support_masks()
        for j in range(n):
            lower = np.flatnonzero(self._leq[:, j])
            k = masks[j].bit_count()
            if lower.size != (1 << k):
                return False
            if len({masks[i] for i in lower}) != lower.size:
                return False
            for a in lower:
                ma = masks[a]
                for b in lower:
                    if ma & ~masks[b]:
                        if self._leq[a, b]:
                            return False
                    elif not self._leq[a, b]:
                        return False
        return True

    def is_face_poset(self) -> bool:
        """True iff the atom-support map is injective on the whole poset.

        Requires a simplicial poset; raises PreconditionError otherwise.
        """
        if not self.is_simplicial():
            raise PreconditionError("is_face_poset requires a simplicial poset")
        masks, _ = self._support_masks()
        return len(set(masks)) == len(masks)

    # ----- bounds and meets ----------------------------------------------

    def minimal_upper_bounds(self, s, t) -> frozenset:
        i, j = self._require(s), self._require(t)
        ub = self._leq[i] & self._leq[j]
        cand = np.flatnonzero(ub)
        if cand.size == 0:
            return frozenset()
        below = self._leq[np.ix_(cand, cand)] & ~np.eye(cand.size, dtype=bool)
        keep = ~below.any(axis=0)
        return frozenset(self.elements[c] for c in cand[keep])

    def meet(self, s, t) -> Label:
        """Greatest lower bound of two elements of a simplicial poset.

        Defined only when s and t have a common upper bound.  The result is
        asserted to agree with the meet computed inside [0,u] for every
        minimal common upper bound u.
        """
        i, j = self._require(s), self._require(t)
        ub = self._leq[i] & self._leq[j]
        if not ub.any():
            raise MeetUndefinedError(f"{s} and {t} have no common upper bound")
        lb = self._leq[:, i] & self._leq[:, j]
        cand = np.flatnonzero(lb)
        above = self._leq[np.ix_(cand, cand)] & ~np.eye(cand.size, dtype=bool)
        tops = cand[~above.any(axis=1)]
        if tops.size != 1:
            raise InvariantError(
                f"{s} and {t} have {tops.size} maximal common lower bounds; "
                "poset is not simplicial"
            )
        m = int(tops[0])
        ub_cand = np.flatnonzero(ub)
        min_ub = ub_cand[~(self._leq[np.ix_(ub_cand, ub_cand)] & ~np.eye(ub_cand.size, dtype=bool)).any(axis=0)]
        for u in min_ub:
            inside = lb & self._leq[:, u]
            if not (~inside | self._leq[:, m]).all():
                raise InvariantError("meet depends on the enclosing interval")
        return self.elements[m]

    # ----- quotients and restrictions --------------------------------------

    def quotient(self, classes) -> "Poset":
        """Quotient by a partition; class C1 <= C2 iff some v in C1 is below
        some w in C2, closed transitively.  Elements of the result carry
        class labels.  Raises StructureError when the closure is not
        antisymmetric."""
        cls_sets = []
        for c in classes:
            fs = frozenset(c)
            if not fs:
                raise StructureError("quotient classes must be nonempty")
            cls_sets.append(fs)
        total = sum(len(c) for c in cls_sets)
        covered = set().union(*cls_sets) if cls_sets else set()
        if total != len(self.elements) or covered != set(self.elements):
            raise StructureError("classes must partition the elements")
        labels = [Label.class_of(c) for c in cls_sets]
        k, n = len(cls_sets), len(self.elements)
        member = np.zeros((k, n), dtype=np.float32)
        for ci, c in enumerate(cls_sets):
            for v in c:
                member[ci, self._require(v)] = 1.0
        rel = (member @ self._leq.astype(np.float32) @ member.T) > 0
        rel = _closure(rel)
        if (rel & rel.T & ~np.eye(k, dtype=bool)).any():
            raise StructureError("quotient is not a partial order")
        return Poset._trusted(labels, rel)

    def restrict(self, subset) -> "Poset":
        """Induced subposet on the given elements (covers recomputed)."""
        idx = sorted(self._require(v) for v in set(subset))
        if not idx:
            raise StructureError("a poset needs at least one element")
        sub = self._leq[np.ix_(idx, idx)]
        return Poset._trusted([self.elements[i] for i in idx], sub)

    # ----- misc helpers -----------------------------------------------------

    def _height_levels(self):
        """Length of the longest chain below each element (0 for minimal)."""
        if self._heights is None:
            n = len(self.elements)
            children = [[] for _ in range(n)]
            for lo, hi in self.covers:
                children[self._require(hi)].append(self._require(lo))
            topo = np.argsort(self._leq.sum(axis=0), kind="stable")
            h = [0] * n
            for j in topo:
                if children[j]:
                    h[j] = 1 + max(h[i] for i in children[j])
            self._heights = tuple(h)
        return self._heights

    # ----- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        covers = sorted(self.covers, key=lambda p: (p[0].key, p[1].key))
        return {
            "elements": [str(e) for e in self.elements],
            "covers": [[str(lo), str(hi)] for lo, hi in covers],
        }

    @classmethod
    def from_json_dict(cls, obj) -> "Poset":
        if not isinstance(obj, dict) or "elements" not in obj or "covers" not in obj:
            raise FormatError("poset JSON needs 'elements' and 'covers'")
        if not isinstance(obj["elements"], list) or not isinstance(obj["covers"], list):
            raise FormatError("poset JSON fields have the wrong shape")
        elements = [Label.parse(e) for e in obj["elements"]]
        covers = []
        for pair in obj["covers"]:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise FormatError(f"cover pair has the wrong shape: {pair!r}")
            covers.append((Label.parse(pair[0]), Label.parse(pair[1])))
        return cls.from_covers(elements, covers)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        return cls.from_json_dict(json.loads(text))

    def to_dot(self) -> str:
        """Graphviz rendering: one node per element, one edge per cover,
        elements rank-aligned by height (equals atom-support size on
        simplicial posets)."""
        heights = self._height_levels()
        lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=box];"]
        by_level = {}
        for i, e in enumerate(self.elements):
            by_level.setdefault(heights[i], []).append(e)
        for level in sorted(by_level):
            row = " ".join(f'"{e}";' for e in by_level[level])
            lines.append("  { rank=same; " + row + " }")
        for lo, hi in sorted(self.covers, key=lambda p: (p[0].key, p[1].key)):
            lines.append(f'  "{lo}" -> "{hi}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def boolean_lattice(n: int) -> Poset:
    """The lattice of subsets of {x1..xn}; 2^n elements.

    Guarded at n <= 20, though practical sizes sit far below the guard.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"boolean_lattice needs a nonnegative integer, got {n!r}")
    if n > BOOLEAN_LATTICE_MAX:
        raise SizeLimitError(f"boolean_lattice(n) is guarded at n <= {BOOLEAN_LATTICE_MAX}")
    names = [f"x{i + 1}" for i in range(n)]
    size = 1 << n
    labels = [Label.bottom()]
    for mask in range(1, size):
        labels.append(Label.atom_set(names[b] for b in range(n) if mask >> b & 1))
    masks = np.arange(size, dtype=np.int64)
    leq = np.zeros((size, size), dtype=bool)
    step = 4096
    for start in range(0, size, step):
        block = masks[start : start + step]
        leq[start : start + step] = (block[:, None] & ~masks[None, :]) == 0
    covers = []
    for mask in range(1, size):
        for b in range(n):
            if mask >> b & 1:
                covers.append((labels[mask ^ (1 << b)], labels[mask]))
    return Poset._trusted(labels, leq, covers=covers)


# ----- isomorphism ------------------------------------------------------------


def _cover_digraph(p: Poset):
    n = len(p.elements)
    children = [[] for _ in range(n)]  # covered-by lists (towards bottom)
    parents = [[] for _ in range(n)]
    for lo, hi in p.covers:
        i, j = p._require(lo), p._require(hi)
        children[j].append(i)
        parents[i].append(j)
    return children, parents


def _refine_colors(p: Poset, q: Poset):
    """Joint Weisfeiler-Lehman style refinement on the cover digraphs."""
    sides = []
    for poset in (p, q):
        children, parents = _cover_digraph(poset)
        heights = poset._height_levels()
        n = len(poset.elements)
        depth = [0] * n
        topo = np.argsort(poset._leq.sum(axis=1), kind="stable")
        for i in topo:
            if parents[i]:
                depth[i] = 1 + max(depth[j] for j in parents[i])
        sig = [
            (heights[i], depth[i], len(children[i]), len(parents[i]))
            for i in range(n)
        ]
        sides.append((children, parents, sig))
    while True:
        table = {s: c for c, s in enumerate(sorted({s for _, _, sig in sides for s in sig}))}
        colors = [[table[s] for s in sig] for _, _, sig in sides]
        new_sides = []
        stable = True
        for (children, parents, sig), col in zip(sides, colors):
            nxt = [
                (col[i], tuple(sorted(col[c] for c in children[i])), tuple(sorted(col[pj] for pj in parents[i])))
                for i in range(len(col))
            ]
            if len(set(nxt)) != len(set(sig)):
                stable = False
            new_sides.append((children, parents, nxt))
        if stable:
            return colors[0], colors[1], [s[:2] for s in sides]
        sides = new_sides


def find_isomorphism(p: Poset, q: Poset):
    """A label map realizing an order isomorphism, or None.

    Backtracking over the cover digraphs with refinement-based pruning.
    Desk scale only; both posets are guarded at 500 elements.
    """
    if len(p) > ISOMORPHISM_MAX or len(q) > ISOMORPHISM_MAX:
        raise SizeLimitError(f"isomorphism search is guarded at {ISOMORPHISM_MAX} elements")
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return None
    colors_p, colors_q, adj = _refine_colors(p, q)
    if sorted(colors_p) != sorted(colors_q):
        return None
    (children_p, parents_p), (children_q, parents_q) = adj
    n = len(p)
    buckets = {}
    for j, c in enumerate(colors_q):
        buckets.setdefault(c, []).append(j)
    order = sorted(range(n), key=lambda i: (len(buckets[colors_p[i]]), -len(children_p[i]) - len(parents_p[i]), i))
    cov_p = {(p._require(lo), p._require(hi)) for lo, hi in p.covers}
    cov_q = {(q._require(lo), q._require(hi)) for lo, hi in q.covers}
    mapping = [-1] * n
    used = [False] * n
    placed = []

    def consistent(v, w):
        for u in placed:
            mu = mapping[u]
            if ((u, v) in cov_p) != ((mu, w) in cov_q):
                return False
            if ((v, u) in cov_p) != ((w, mu) in cov_q):
                return False
        return True

    def backtrack(pos):
        if pos == n:
            return True
        v = order[pos]
        for w in buckets[colors_p[v]]:
            if not used[w] and consistent(v, w):
                mapping[v] = w
                used[w] = True
                placed.append(v)
                if backtrack(pos + 1):
                    return True
                placed.pop()
                used[w] = False
                mapping[v] = -1
        return False

    if not backtrack(0):
        return None
    return {p.elements[v]: q.elements[mapping[v]] for v in range(n)}


def are_isomorphic(p: Poset, q: Poset) -> bool:
    return find_isomorphism(p, q) is not None
