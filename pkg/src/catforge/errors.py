"""Exception types carrying witnesses for every failed algebraic check."""


class CatforgeError(Exception):
    """Base class for all catforge errors."""


class NotAssociative(CatforgeError):
    """A table failed associativity; ``witness`` is the first bad triple (x, y, z)."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not associative at triple {witness}")


class NotIdentity(CatforgeError):
    """The claimed identity element fails on ``witness``."""

    def __init__(self, identity, witness):
        self.identity = identity
        self.witness = witness
        super().__init__(f"element {identity} is not an identity (fails on {witness})")


class OrderTooLarge(CatforgeError):
    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(f"monoid enumeration capped at order {limit}, got {n}")


class NotAGroup(CatforgeError):
    """Raised when a group-only operation is applied to a non-group monoid."""

    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"monoid is not a group (no inverse for {witness})")


class NotGrouplike(CatforgeError):
    """Raised when an operation requires a grouplike decomposition that does not exist."""

    def __init__(self, reason=""):
        self.reason = reason
        super().__init__(f"monoid is not grouplike: {reason}")


class LeftActionViolation(CatforgeError):
    def __init__(self, kind, witness):
        self.kind = kind
        self.witness = witness
        super().__init__(f"left action {kind} violation at {witness}")


class RightActionViolation(CatforgeError):
    def __init__(self, kind, witness):
        self.kind = kind
        self.witness = witness
        super().__init__(f"right action {kind} violation at {witness}")


class CommutationViolation(CatforgeError):
    """Left and right actions fail to commute; witness is (a, x, b)."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"actions do not commute at {witness}")


class SearchBudgetExceeded(CatforgeError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"search exceeded node budget of {budget}")


class AssociativityViolation(CatforgeError):
    """Category-level associativity failure.

    ``homsets`` names the three hom-sets the triple spans, e.g. "L,R,L".
    """

    def __init__(self, triple, homsets):
        self.triple = triple
        self.homsets = homsets
        super().__init__(f"associativity fails for {homsets} triple {triple}")


class GrouplikeViolation(CatforgeError):
    """A structural law guaranteed for grouplike categories failed on the input."""

    def __init__(self, law, witness=None):
        self.law = law
        self.witness = witness
        super().__init__(f"grouplike law '{law}' violated (witness {witness})")


class LemmaViolation(CatforgeError):
    def __init__(self, part, witness):
        self.part = part
        self.witness = witness
        super().__init__(f"check '{part}' failed with witness {witness}")


class NotUnigen(CatforgeError):
    """Single-generator analysis failed; ``clause`` names the failed requirement."""

    def __init__(self, index, clause):
        self.index = index
        self.clause = clause
        super().__init__(f"not {index}-unigen: {clause}")


class SpecViolation(CatforgeError):
    """A construction specification does not satisfy its preconditions."""

    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)
