"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class JointfixError(Exception):
    """Base class for all errors raised by jointfix."""


# -- poset construction and queries ------------------------------------------

class DuplicateLabel(JointfixError):
    def __init__(self, label: str):
        super().__init__(f"duplicate element label {label!r}")
        self.label = label


class UnknownElement(JointfixError):
    def __init__(self, element: object):
        super().__init__(f"unknown element {element!r}")
        self.element = element


class UnknownLabel(UnknownElement):
    pass


class AntisymmetryViolation(JointfixError):
    def __init__(self, a: str, b: str):
        super().__init__(f"antisymmetry violated: {a!r} <= {b!r} and {b!r} <= {a!r}")
        self.pair = (a, b)


class NotReflexive(JointfixError):
    def __init__(self, label: str):
        super().__init__(f"relation is missing the reflexive pair ({label!r}, {label!r})")
        self.label = label


class NotTransitive(JointfixError):
    def __init__(self, a: str, b: str, c: str):
        super().__init__(
            f"relation is not transitive: ({a!r}, {b!r}) and ({b!r}, {c!r}) "
            f"present but ({a!r}, {c!r}) missing"
        )
        self.triple = (a, b, c)


class EmptySubset(JointfixError):
    def __init__(self, what: str = "subset"):
        super().__init__(f"{what} must be non-empty")


class NotALattice(JointfixError):
    def __init__(self, a: str, b: str):
        super().__init__(f"elements {a!r} and {b!r} have no join")
        self.pair = (a, b)


# -- maps and families --------------------------------------------------------

class MissingAssignment(JointfixError):
    def __init__(self, map_name: str, label: str):
        super().__init__(f"map {map_name!r} assigns no image to {label!r}")
        self.map_name = map_name
        self.label = label


class PosetMismatch(JointfixError):
    def __init__(self, left: str, right: str):
        super().__init__(f"maps {left!r} and {right!r} live on different posets")


class ClosureBudgetExceeded(JointfixError):
    def __init__(self, max_size: int):
        super().__init__(f"composition closure exceeds {max_size} distinct maps")
        self.max_size = max_size


# -- fixed-point engine -------------------------------------------------------

class PreconditionViolated(JointfixError):
    """A hypothesis of the fixed-point theorem does not hold.

    ``which`` is one of ``not-chain-complete``, ``not-isotone``,
    ``not-commutative``, ``start-not-extensive``, ``seed-not-extensive``;
    ``witness`` is a JSON-friendly description of the first violation found.
    """

    def __init__(self, which: str, witness: dict | None = None):
        detail = f": {witness}" if witness else ""
        super().__init__(f"precondition violated ({which}){detail}")
        self.which = which
        self.witness = witness or {}


class NoSupremum(JointfixError):
    def __init__(self, seed: str, orbit: list[str]):
        super().__init__(f"orbit of {seed!r} has no least upper bound: {orbit}")
        self.seed = seed
        self.orbit = orbit


class CycleDetected(JointfixError):
    def __init__(self, cycle: list[str]):
        super().__init__("iteration entered a cycle: " + " -> ".join(cycle + cycle[:1]))
        self.cycle = cycle


class SweepBudgetExceeded(JointfixError):
    def __init__(self, budget: int):
        super().__init__(f"round-robin iteration did not stabilize within {budget} sweeps")
        self.budget = budget


# -- generators and I/O -------------------------------------------------------

class BadSpec(JointfixError):
    pass


class ParseError(JointfixError):
    def __init__(self, message: str, where: str | None = None):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where
