"""Exception types used across the toolkit."""


class PetriforgeError(Exception):
    """Base class for all toolkit errors."""


class NotEnabledError(PetriforgeError):
    """Raised when a transition is fired at a marking that does not enable it."""

    def __init__(self, transition, marking):
        self.transition = transition
        self.marking = marking
        super().__init__(f"transition {transition!r} is not enabled at {marking}")


class LimitExceededError(PetriforgeError):
    """State-space exploration hit its node or edge budget.

    Carries the partial counts so callers can report how far exploration got
    before giving up (usually a cue to switch to the coverability graph).
    """

    def __init__(self, nodes, edges, limit_kind):
        self.nodes = nodes
        self.edges = edges
        self.limit_kind = limit_kind
        super().__init__(
            f"exploration exceeded {limit_kind} limit ({nodes} nodes, {edges} edges explored)"
        )


class InvalidParamsError(PetriforgeError, ValueError):
    """Model parameters violate their invariants (for example x > nb*sb)."""


class UnknownPlaceError(PetriforgeError, KeyError):
    """A place name does not exist in the net."""


class UnknownTransitionError(PetriforgeError, KeyError):
    """A transition name or index does not exist in the net."""


class NetDefinitionError(PetriforgeError, ValueError):
    """Net construction violated a structural invariant (bipartiteness, weights, names)."""


class PnmlError(PetriforgeError):
    """Base class for PNML parse errors; `element` names the offending node id."""

    def __init__(self, message, element=None):
        self.element = element
        if element is not None:
            message = f"{message} (element {element!r})"
        super().__init__(message)


class PnmlSyntaxError(PnmlError):
    """The input is not well-formed XML or lacks required PNML structure."""


class PnmlTypeError(PnmlError):
    """The document's net is not a place/transition net."""


class PnmlReferenceError(PnmlError):
    """An arc references a source or target id that does not exist."""


class PnmlMarkingError(PnmlError):
    """A place carries a negative or non-integer initial marking."""
