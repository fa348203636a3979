"""Brute-force reference implementations used to pin expected values.

Everything here is written for clarity over speed and avoids the code
paths under test: faces by powerset expansion, cliques by subset
enumeration, simpliciality by explicit powerset comparison.
"""

from itertools import chain, combinations


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def brute_faces(facets):
    """Every subset of every facet, as a set of frozensets (incl. empty)."""
    faces = {frozenset()}
    for f in facets:
        for s in powerset(f):
            faces.add(frozenset(s))
    return faces


def brute_minimal_nonfaces(vertices, facets):
    """Inclusion-minimal subsets of the vertex set that are not faces."""
    faces = brute_faces(facets)
    nonfaces = [frozenset(s) for s in powerset(vertices) if frozenset(s) not in faces]
    minimal = [s for s in nonfaces if not any(t < s for t in nonfaces)]
    return sorted(minimal, key=lambda s: (len(s), sorted(s)))


def brute_maximal_cliques(vertices, edges):
    """All maximal cliques by checking every vertex subset."""
    edges = {frozenset(e) for e in edges}
    cliques = [
        frozenset(s)
        for s in powerset(vertices)
        if s and all(frozenset((a, b)) in edges for a, b in combinations(s, 2))
    ]
    return {c for c in cliques if not any(c < d for d in cliques)}


def brute_incomparable_pairs(poset):
    """Unordered pairs of distinct non-bottom elements with no order relation."""
    bot = poset.bottom()
    elems = [e for e in poset.elements if e != bot]
    return [
        (a, b)
        for i, a in enumerate(elems)
        for b in elems[i + 1 :]
        if not poset.leq(a, b) and not poset.leq(b, a)
    ]


def brute_is_simplicial(poset):
    """Unique minimum, and each lower set order-isomorphic to a powerset
    via the atoms-below map."""
    if len(poset.minimal_elements()) != 1:
        return False
    atoms = poset.atoms()
    for v in poset.elements:
        lower = sorted(poset.lower_set(v), key=lambda e: e.key)
        support = {u: frozenset(poset.lower_set(u) & atoms) for u in lower}
        expected = {frozenset(s) for s in powerset(support[v])}
        if len(set(support.values())) != len(lower):
            return False
        if set(support.values()) != expected:
            return False
        for u in lower:
            for w in lower:
                if poset.leq(u, w) != (support[u] <= support[w]):
                    return False
    return True


def brute_is_face_poset(poset):
    """Simplicial with a globally injective atoms-below map."""
    if not brute_is_simplicial(poset):
        return None
    atoms = poset.atoms()
    supports = [frozenset(poset.lower_set(v) & atoms) for v in poset.elements]
    return len(set(supports)) == len(supports)
