"""Defining ideals of simplicial posets.

``stanley_poset_ideal`` presents the face ring of a simplicial poset: one
variable per non-bottom element and one generator per incomparable pair.
A pair with no common upper bound contributes the plain product; otherwise
the product is corrected by the meet times the sum over minimal upper
bounds, with the bottom variable read as 1.

On a face poset every variable can be replaced by the product of its atoms;
``reduce_face_poset_ideal`` performs that substitution, checks each
generator collapses to zero or to a single monomial, and returns the
minimal monomial generating set.  For the complex itself,
``stanley_reisner_ideal`` lists the minimal non-faces directly, which gives
an independent route to the same ideal.

Coefficients are integers throughout; there is no division anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import SimplicialComplex
from .errors import PreconditionError, InvariantError, StructureError
from .poset import Poset


class Monomial:
    """Exponent map over variable indices; immutable and hashable."""

    __slots__ = ("exponents",)

    def __init__(self, exponents=()):
        if isinstance(exponents, dict):
            items = exponents.items()
        else:
            items = exponents
        norm = tuple(sorted((int(i), int(e)) for i, e in items if e))
        for i, e in norm:
            if i < 0 or e < 0:
                raise ValueError(f"bad exponent entry: ({i}, {e})")
        self.exponents = norm

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def expanded(self):
        """Variable indices with multiplicity; the lexicographic sort key."""
        return tuple(i for i, e in self.exponents for _ in range(e))

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        acc = dict(self.exponents)
        for i, e in other.exponents:
            acc[i] = acc.get(i, 0) + e
        return Monomial(acc)

    def divides(self, other) -> bool:
        theirs = dict(other.exponents)
        return all(theirs.get(i, 0) >= e for i, e in self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial({dict(self.exponents)!r})"


ONE = Monomial()


class Polynomial:
    """Integer linear combination of monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        acc = {}
        for m, c in items:
            c = int(c)
            if c:
                acc[m] = acc.get(m, 0) + c
                if not acc[m]:
                    del acc[m]
        self.terms = acc

    @classmethod
    def variable(cls, index: int):
        return cls({Monomial({index: 1}): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        """Graded order: degree descending, then lexicographic."""
        return sorted(self.terms.items(), key=lambda t: (-t[0].degree, t[0].expanded()))

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial({ONE: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(acc)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial({ONE: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(acc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda t: t[0].exponents)))

    def __repr__(self):
        return f"Polynomial({self.terms!r})"

    def render(self, variable_names) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            body = render_monomial(m, variable_names)
            mag = abs(c)
            if body == "1":
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if k == 0:
                pieces.append(("-" if c < 0 else "") + text)
            else:
                pieces.append((" - " if c < 0 else " + ") + text)
        return "".join(pieces)

    def to_obj(self, variable_names):
        """JSON-friendly term list mirroring the term map."""
        out = []
        for m, c in self.sorted_terms():
            out.append({
                "coefficient": c,
                "monomial": {variable_names[i]: e for i, e in m.exponents},
            })
        return out

    @classmethod
    def from_obj(cls, obj, variable_names):
        index = {name: i for i, name in enumerate(variable_names)}
        terms = {}
        for entry in obj:
            m = Monomial({index[name]: e for name, e in entry["monomial"].items()})
            terms[m] = terms.get(m, 0) + int(entry["coefficient"])
        return cls(terms)


def render_monomial(m: Monomial, variable_names) -> str:
    if not m.exponents:
        return "1"
    parts = []
    for i, e in m.exponents:
        base = f"x[{variable_names[i]}]"
        parts.append(base if e == 1 else f"{base}^{e}")
    return "*".join(parts)


@dataclass(frozen=True)
class IdealPresentation:
    """Generators of the defining ideal, over one variable per element."""

    poset: Poset
    variables: tuple  # non-bottom element labels, canonical order
    generators: tuple

    def variable_names(self):
        return [str(v) for v in self.variables]

    def render_lines(self):
        names = self.variable_names()
        return [g.render(names) for g in self.generators]


@dataclass(frozen=True)
class MonomialIdeal:
    variables: tuple  # variable names, sorted
    generators: tuple

    def render_lines(self):
        return [render_monomial(m, self.variables) for m in self.generators]


def stanley_poset_ideal(p: Poset) -> IdealPresentation:
    """One generator per unordered incomparable pair of non-bottom elements."""
    if not p.is_simplicial():
        raise PreconditionError("stanley_poset_ideal requires a simplicial poset")
    bot = p.bottom()
    variables = tuple(e for e in p.elements if e != bot)
    index = {e: i for i, e in enumerate(variables)}
    gens = []
    for s, t in combinations(variables, 2):
        if p.leq(s, t) or p.leq(t, s):
            continue
        product = Monomial({index[s]: 1, index[t]: 1})
        ubs = p.minimal_upper_bounds(s, t)
        if not ubs:
            gens.append(Polynomial({product: 1}))
            continue
        m = p.meet(s, t)
        meet_part = {} if m == bot else {index[m]: 1}
        terms = {product: 1}
        for z in sorted(ubs):
            mono = Monomial({**meet_part, index[z]: 1})
            terms[mono] = terms.get(mono, 0) - 1
        gens.append(Polynomial(terms))
    return IdealPresentation(poset=p, variables=variables, generators=tuple(gens))


def stanley_reisner_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """Squarefree monomials of the minimal non-faces, one variable per vertex."""
    variables = tuple(sorted(c.vertices))
    index = {v: i for i, v in enumerate(variables)}
    gens = [Monomial({index[v]: 1 for v in nf}) for nf in c.minimal_nonfaces()]
    gens.sort(key=lambda m: (m.degree, m.expanded()))
    return MonomialIdeal(variables=variables, generators=tuple(gens))


def reduce_face_poset_ideal(p: Poset) -> MonomialIdeal:
    """Substitute each variable by the product of its atoms and reduce.

    Works on face posets only.  Every generator must collapse to zero or a
    single monomial under the substitution; anything else signals a bug in
    the face-poset check.
    """
    if not p.is_face_poset():
        raise PreconditionError("reduce_face_poset_ideal requires a face poset")
    pres = stanley_poset_ideal(p)
    atoms = sorted(p.atoms())
    universe = tuple(sorted(str(a) for a in atoms))
    atom_pos = {a: universe.index(str(a)) for a in atoms}
    subs = []
    for v in pres.variables:
        support = p.atom_support(v).atoms
        subs.append(Monomial({atom_pos[a]: 1 for a in support}))
    collected = set()
    for gen in pres.generators:
        acc = {}
        for m, c in gen.terms.items():
            image = ONE
            for i, e in m.exponents:
                for _ in range(e):
                    image = image * subs[i]
            acc[image] = acc.get(image, 0) + c
        acc = {m: c for m, c in acc.items() if c}
        if len(acc) > 1:
            raise InvariantError("substituted generator is neither zero nor a monomial")
        collected.update(acc)
    minimal = [
        m for m in collected
        if not any(o != m and o.divides(m) for o in collected)
    ]
    minimal.sort(key=lambda m: (m.degree, m.expanded()))
    return MonomialIdeal(variables=universe, generators=tuple(minimal))


def monomial_ideals_equal(i1: MonomialIdeal, i2: MonomialIdeal) -> bool:
    """Mutual divisibility of generating sets over the same variables."""
    if tuple(i1.variables) != tuple(i2.variables):
        raise StructureError("monomial ideals live over different variables")
    return all(any(h.divides(g) for h in i2.generators) for g in i1.generators) and all(
        any(h.divides(g) for h in i1.generators) for g in i2.generators
    )
