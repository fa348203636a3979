"""Pulling simplicial posets apart and gluing them back together.

``separation`` splits a simplicial poset into one boolean piece per maximal
element, joined only at the bottom; the result is always a face poset.  A
``GluingRelation`` is a partition of such a poset whose classes satisfy the
two gluing conditions checked by ``validate_gluing``: related elements are
incomparable, of equal rank, with no common upper bound, and their lower
sets match class-by-class.  ``quotient_by_gluing`` collapses the classes and
asserts the result is simplicial again.

``delta_glue`` identifies an order ideal of one poset with an isomorphic
ideal of another, the isomorphism induced by a facet map plus an atom map.
``theta_glue`` glues the separation of a complex's face poset along the
faces it shares with a second complex.  ``reconstruct_theta_pair`` inverts
that construction when the atom family is an antichain and the meet poset
is a face poset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .complexes import SimplicialComplex, make_complex
from .errors import (
    ElementNotFoundError,
    InvalidGluingError,
    InvariantError,
    PreconditionError,
    StructureError,
)
from .labels import Label
from .poset import Poset


@dataclass
class SeparationResult:
    separated: Poset
    projection: dict = field(compare=False)  # separated label -> original label


@dataclass(frozen=True)
class GluingViolation:
    condition: int
    elements: tuple
    reason: str

    def __str__(self):
        names = ", ".join(str(e) for e in self.elements)
        return f"condition ({self.condition}) at {names}: {self.reason}"


@dataclass(frozen=True)
class GluingCheck:
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class GluingRelation:
    """A partition of a poset's elements, candidate for a gluing relation."""

    base: Poset
    classes: tuple

    def __post_init__(self):
        norm = []
        for c in self.classes:
            fs = frozenset(c)
            if not fs:
                raise StructureError("gluing classes must be nonempty")
            norm.append(fs)
        total = sum(len(c) for c in norm)
        union = set().union(*norm) if norm else set()
        if total != len(self.base) or union != set(self.base.elements):
            raise StructureError("gluing classes must partition the poset")
        norm.sort(key=lambda c: min(m.key for m in c))
        object.__setattr__(self, "classes", tuple(norm))


@dataclass(frozen=True)
class GluingSpec:
    """Facet and atom assignments driving delta_glue, as parsed from JSON."""

    facet_map: tuple  # ((element of A, element of B), ...)
    atom_map: tuple

    @classmethod
    def from_json_dict(cls, obj) -> "GluingSpec":
        from .errors import FormatError

        if not isinstance(obj, dict) or "facet_map" not in obj or "atom_map" not in obj:
            raise FormatError("gluing spec JSON needs 'facet_map' and 'atom_map'")
        if not isinstance(obj["facet_map"], dict) or not isinstance(obj["atom_map"], dict):
            raise FormatError("gluing spec maps have the wrong shape")
        fm = tuple(
            (Label.parse(k), Label.parse(v)) for k, v in sorted(obj["facet_map"].items())
        )
        am = tuple(
            (Label.parse(k), Label.parse(v)) for k, v in sorted(obj["atom_map"].items())
        )
        return cls(facet_map=fm, atom_map=am)

    def to_json_dict(self) -> dict:
        return {
            "facet_map": {str(k): str(v) for k, v in self.facet_map},
            "atom_map": {str(k): str(v) for k, v in self.atom_map},
        }


def separation(q: Poset) -> SeparationResult:
    """Disjoint union of the lower sets of the maximal elements, sharing
    only the bottom.  Copy i holds the lower set of the i-th maximal
    element (canonical order, indices from 1)."""
    if not q.is_simplicial():
        raise PreconditionError("separation requires a simplicial poset")
    bot_q = q.bottom()
    maxima = sorted(q.maximal_elements())
    blocks = []  # (copy index, [labels of the lower set, bottom removed])
    for ci, x in enumerate(maxima, start=1):
        blocks.append((ci, sorted(q.lower_set(x) - {bot_q})))
    labels = [Label.bottom()]
    projection = {Label.bottom(): bot_q}
    for ci, members in blocks:
        for v in members:
            lab = Label.copy(ci, v)
            labels.append(lab)
            projection[lab] = v
    n = len(labels)
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    offset = 1
    for ci, members in blocks:
        idx = [q._require(v) for v in members]
        m = len(idx)
        leq[offset : offset + m, offset : offset + m] = q._leq[np.ix_(idx, idx)]
        offset += m
    covers = []
    atoms_q = q.atoms()
    for ci, members in blocks:
        inside = set(members)
        for v in members:
            if v in atoms_q:
                covers.append((Label.bottom(), Label.copy(ci, v)))
        for lo, hi in q.covers:
            if lo in inside and hi in inside:
                covers.append((Label.copy(ci, lo), Label.copy(ci, hi)))
    sep = Poset._trusted(labels, leq, covers=covers)
    if not sep.is_face_poset():
        raise InvariantError("separation produced a non face poset")
    return SeparationResult(separated=sep, projection=projection)


def fiber_relation(result: SeparationResult) -> GluingRelation:
    """The relation identifying all copies of the same original element."""
    fibers = {}
    for ce, orig in result.projection.items():
        fibers.setdefault(orig, []).append(ce)
    classes = tuple(frozenset(v) for _, v in sorted(fibers.items(), key=lambda kv: kv[0].key))
    return GluingRelation(base=result.separated, classes=classes)


def validate_gluing(relation: GluingRelation) -> GluingCheck:
    """Check the two gluing conditions on every pair of related elements."""
    base = relation.base
    leq = base._leq
    masks, _ = base._support_masks()
    idx = base._require
    cls_of = {}
    for ci, cls in enumerate(relation.classes):
        for v in cls:
            cls_of[v] = ci
    violations = []
    for cls in relation.classes:
        members = sorted(cls)
        if len(members) < 2:
            continue
        for a, b in combinations(members, 2):
            ia, ib = idx(a), idx(b)
            if leq[ia, ib] or leq[ib, ia]:
                violations.append(GluingViolation(1, (a, b), "related elements must be incomparable"))
            if masks[ia].bit_count() != masks[ib].bit_count():
                violations.append(GluingViolation(1, (a, b), "related elements must have equal rank"))
            if (leq[ia] & leq[ib]).any():
                violations.append(GluingViolation(1, (a, b), "related elements must not share an upper bound"))
        for a in members:
            ca = [cls_of[base.elements[i]] for i in np.flatnonzero(leq[:, idx(a)])]
            for b in members:
                if a == b:
                    continue
                cb = {cls_of[base.elements[i]] for i in np.flatnonzero(leq[:, idx(b)])}
                for i, c in zip(np.flatnonzero(leq[:, idx(a)]), ca):
                    if c not in cb:
                        violations.append(
                            GluingViolation(
                                2,
                                (a, b),
                                f"{base.elements[i]} below {a} is related to nothing below {b}",
                            )
                        )
    return GluingCheck(violations=tuple(violations))


def quotient_by_gluing(relation: GluingRelation) -> Poset:
    check = validate_gluing(relation)
    if not check.ok:
        shown = "; ".join(str(v) for v in check.violations[:5])
        raise PreconditionError(f"not a gluing relation: {shown}")
    out = relation.base.quotient(relation.classes)
    if not out.is_simplicial():
        raise InvariantError("gluing quotient is not simplicial")
    return out


def delta_glue(a: Poset, b: Poset, facet_map, atom_map) -> Poset:
    """Glue two simplicial posets along isomorphic order ideals.

    ``facet_map`` sends generators of an ideal of ``a`` to elements of
    ``b``; ``atom_map`` sends atoms to atoms.  Together they must induce a
    well-defined isomorphism of ideals: atom sets below matching facets must
    correspond, and elements below several mapped facets must receive one
    image.  Any failure raises InvalidGluingError with the fixed message.

    The result is the quotient of the disjoint union (bottoms identified)
    that glues each ideal element to its image.  Original labels reappear
    with copy prefixes 1@ (side a) and 2@ (side b) inside class labels.
    """
    if not a.is_simplicial() or not b.is_simplicial():
        raise PreconditionError("delta_glue requires simplicial posets")
    facet_map = dict(facet_map)
    atom_map = dict(atom_map)
    bot_a, bot_b = a.bottom(), b.bottom()
    for x, y in facet_map.items():
        if x not in a:
            raise ElementNotFoundError(f"facet_map key not in first poset: {x}")
        if y not in b:
            raise ElementNotFoundError(f"facet_map value not in second poset: {y}")
        if x == bot_a or y == bot_b:
            raise InvalidGluingError("facet_map_domain", f"bottom cannot be a glued facet: {x} -> {y}")
    atoms_a, atoms_b = a.atoms(), b.atoms()
    for s, t in atom_map.items():
        if s not in a:
            raise ElementNotFoundError(f"atom_map key not in first poset: {s}")
        if t not in b:
            raise ElementNotFoundError(f"atom_map value not in second poset: {t}")
        if s not in atoms_a or t not in atoms_b:
            raise InvalidGluingError("atom_map_domain", f"atom_map must send atoms to atoms: {s} -> {t}")
    if len(set(facet_map.values())) != len(facet_map):
        raise InvalidGluingError("facet_map_not_injective")
    if len(set(atom_map.values())) != len(atom_map):
        raise InvalidGluingError("atom_map_not_injective")

    supp_a = {v: a.atom_support(v).atoms for v in a.elements}
    supp_b = {u: b.atom_support(u).atoms for u in b.elements}
    for x, y in sorted(facet_map.items()):
        sx = supp_a[x]
        missing = [s for s in sx if s not in atom_map]
        if missing:
            raise InvalidGluingError("atom_map_incomplete", f"atoms below {x} lack images: {missing}")
        if {atom_map[s] for s in sx} != supp_b[y]:
            raise InvalidGluingError("incompatible", f"atom sets below {x} and {y} do not correspond")

    image = {}
    for x, y in sorted(facet_map.items()):
        table = {supp_b[z]: z for z in b.lower_set(y)}
        for w in sorted(a.lower_set(x) - {bot_a}):
            target = table[frozenset(atom_map[s] for s in supp_a[w])]
            prev = image.get(w)
            if prev is None:
                image[w] = target
            elif prev != target:
                raise InvalidGluingError("ambiguous_image", f"{w} maps to both {prev} and {target}")
    if len(set(image.values())) != len(image):
        raise InvalidGluingError("image_not_injective")

    ea = [v for v in a.elements if v != bot_a]
    eb = [u for u in b.elements if u != bot_b]
    labels = [Label.bottom()]
    labels += [Label.copy(1, v) for v in ea]
    labels += [Label.copy(2, u) for u in eb]
    n = len(labels)
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    ia = [a._require(v) for v in ea]
    ib = [b._require(u) for u in eb]
    leq[1 : 1 + len(ea), 1 : 1 + len(ea)] = a._leq[np.ix_(ia, ia)]
    leq[1 + len(ea) :, 1 + len(ea) :] = b._leq[np.ix_(ib, ib)]
    covers = []
    for v in ea:
        if v in atoms_a:
            covers.append((Label.bottom(), Label.copy(1, v)))
    for lo, hi in a.covers:
        if lo != bot_a:
            covers.append((Label.copy(1, lo), Label.copy(1, hi)))
    for u in eb:
        if u in atoms_b:
            covers.append((Label.bottom(), Label.copy(2, u)))
    for lo, hi in b.covers:
        if lo != bot_b:
            covers.append((Label.copy(2, lo), Label.copy(2, hi)))
    union = Poset._trusted(labels, leq, covers=covers)

    glued_b = set(image.values())
    classes = [frozenset([Label.copy(1, w), Label.copy(2, image[w])]) for w in image]
    classes += [frozenset([Label.copy(1, v)]) for v in ea if v not in image]
    classes += [frozenset([Label.copy(2, u)]) for u in eb if u not in glued_b]
    classes.append(frozenset([Label.bottom()]))
    out = union.quotient(classes)
    if not out.is_simplicial():
        raise InvariantError("delta_glue produced a non simplicial quotient")
    return out


def theta_glue(d1: SimplicialComplex, d2: SimplicialComplex) -> Poset:
    """Glue the separation of d1's face poset along faces shared with d2.

    d2 is first extended with every vertex of d1, so atoms are always
    shared and never duplicated.  Copies of a face are identified exactly
    when the face lies in both complexes.
    """
    p1 = d1.face_poset()
    sep = separation(p1)
    d2_vertices = list(d2.vertices) + [v for v in d1.vertices if v not in set(d2.vertices)]
    ambient = make_complex(d2_vertices, d2.facets)
    common = {frozenset(f) for f in d1.faces()} & {frozenset(f) for f in ambient.faces()}
    groups = {}
    singles = []
    for lab in sep.separated.elements:
        if lab == Label.bottom():
            singles.append(lab)
            continue
        base = lab.value[1]
        if frozenset(base.names) in common:
            groups.setdefault(base, []).append(lab)
        else:
            singles.append(lab)
    classes = [frozenset(v) for v in groups.values()]
    classes += [frozenset([s]) for s in singles]
    return quotient_by_gluing(GluingRelation(base=sep.separated, classes=tuple(classes)))


def atom_family(p: Poset):
    """Atom supports of the maximal elements, kept as a list: duplicate
    supports stay duplicated."""
    if not p.is_simplicial():
        raise PreconditionError("atom_family requires a simplicial poset")
    return [p.atom_support(x).atoms for x in sorted(p.maximal_elements())]


def is_antichain_list(sets) -> bool:
    """No entry contained in another entry at a different index; duplicate
    entries therefore fail."""
    fam = [frozenset(s) for s in sets]
    for i, s in enumerate(fam):
        for j, t in enumerate(fam):
            if i != j and s <= t:
                return False
    return True


def meet_poset(p: Poset) -> Poset:
    """Union of pairwise intersections of the maximal elements' lower sets,
    as an induced subposet.  With at most one maximal element this is just
    the bottom."""
    if not p.is_simplicial():
        raise PreconditionError("meet_poset requires a simplicial poset")
    maxima = sorted(p.maximal_elements())
    if len(maxima) <= 1:
        return p.restrict([p.bottom()])
    keep = set()
    for x, y in combinations(maxima, 2):
        keep |= p.lower_set(x) & p.lower_set(y)
    return p.restrict(keep)


def reconstruct_theta_pair(p: Poset):
    """Invert theta_glue: the complex spanned by the atom family, and the
    complex carried by the meet poset extended with all points.

    Preconditions: p is simplicial, its atom family is an antichain
    (condition i) and its meet poset is a face poset (condition ii).
    """
    if not p.is_simplicial():
        raise PreconditionError("reconstruct_theta_pair requires a simplicial poset")
    fam = atom_family(p)
    if not is_antichain_list(fam):
        raise PreconditionError("condition (i) fails: atom family is not an antichain")
    m = meet_poset(p)
    if not m.is_face_poset():
        raise PreconditionError("condition (ii) fails: meet poset is not a face poset")
    atoms = sorted(p.atoms())
    names = [a.single_vertex_name() for a in atoms]
    if any(nm is None for nm in names) or len(set(names)) != len(names):
        names = [f"p{i + 1}" for i in range(len(atoms))]
    name_of = dict(zip(atoms, names))
    d1 = make_complex(names, [[name_of[a] for a in s] for s in fam])
    supports = {v: p.atom_support(v).atoms for v in m.elements}
    facets = [
        [name_of[a] for a in supports[x]]
        for x in sorted(m.maximal_elements())
        if supports[x]
    ]
    d2 = make_complex(names, facets)
    return d1, d2
