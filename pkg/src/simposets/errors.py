"""Exception taxonomy shared across the package."""


class SimposetError(Exception):
    pass


class FormatError(SimposetError):
    """Malformed serialized input (labels, poset/complex JSON, facet strings)."""


class StructureError(SimposetError):
    """Input data does not form the promised structure (partial order, partition, ...)."""


class ElementNotFoundError(SimposetError, KeyError):
    """A label was looked up in a poset that does not contain it."""

    def __str__(self):
        # KeyError would repr() the argument.
        return self.args[0] if self.args else ""


class PreconditionError(SimposetError):
    """An operation was called on input that violates its stated precondition."""


class SizeLimitError(SimposetError):
    """Requested size is beyond the guard for desk-scale computations."""


class MeetUndefinedError(SimposetError):
    """meet() was asked for two elements with no common upper bound."""


class InvariantError(SimposetError):
    """Internal invariant violated; indicates a bug, not bad user input."""


class InvalidGluingError(SimposetError):
    """A facet/atom assignment does not describe a valid gluing.

    str() is the fixed message the CLI prints; `code` and `detail`
    distinguish the individual failure modes.
    """

    MESSAGE = "Assignment of atoms-atoms or facets-facets invalid."

    def __init__(self, code, detail=""):
        super().__init__(self.MESSAGE)
        self.code = code
        self.detail = detail

    def __str__(self):
        return self.MESSAGE

    def __repr__(self):
        return f"InvalidGluingError(code={self.code!r}, detail={self.detail!r})"
