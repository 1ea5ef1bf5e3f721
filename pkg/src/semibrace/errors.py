"""Exception hierarchy.

Validation errors always pinpoint the first witness in element order so
that failures are reproducible; witnesses are raw element indices (the
CLI translates them to labels).
"""

from __future__ import annotations


class SemibraceError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SemibraceError):
    """A candidate pair of Cayley tables is not a left semi-brace."""


class NotAGroup(ValidationError):
    def __init__(self, reason: str, witness=None):
        self.reason = reason
        self.witness = witness
        msg = f"multiplicative table is not a group: {reason}"
        if witness is not None:
            msg += f" (witness {witness})"
        super().__init__(msg)


class NotLeftCancellative(ValidationError):
    def __init__(self, row: int, pair=None):
        self.row = row
        self.pair = pair
        super().__init__(
            f"additive row {row} is not injective"
            + (f": {pair[0]} and {pair[1]} map to the same element" if pair else "")
        )


class AddNotAssociative(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        a, b, c = witness
        super().__init__(f"addition is not associative at ({a}, {b}, {c})")


class CompatibilityViolation(ValidationError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(
            f"a∘(b+c) != a∘b + a∘(a⁻+c) at a={a}, b={b}, c={c}"
        )


class AddNotAGroup(ValidationError):
    def __init__(self, reason: str, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(f"additive table is not a group: {reason}")


class InternalInconsistency(SemibraceError):
    """A theory-guaranteed invariant failed on a validated structure.

    Signals table corruption or an implementation bug, never bad input.
    """


class ConsistencyViolation(SemibraceError):
    """A validated structure violates a proved theorem (implementation bug)."""

    def __init__(self, tag: str, witness=None):
        self.tag = tag
        self.witness = witness
        msg = f"theorem consistency check failed: {tag}"
        if witness is not None:
            msg += f" (witness {witness})"
        super().__init__(msg)


class InconsistentEquivalences(SemibraceError):
    """Provably equivalent predicates disagreed (implementation bug)."""


class NotInG(SemibraceError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"element {witness} is not in the group part G")


class EmptyOperand(SemibraceError):
    pass


class NotASubsemigroup(SemibraceError):
    def __init__(self, witness):
        self.witness = witness
        x, y = witness
        super().__init__(f"subset is not closed under +: {x} + {y} falls outside")


class ENotIdeal(SemibraceError):
    def __init__(self, witness=None):
        self.witness = witness
        super().__init__("the idempotent set E is not an ideal of this semi-brace")


class NotAnIdeal(SemibraceError):
    def __init__(self, condition, witness=None):
        self.condition = condition
        self.witness = witness
        super().__init__(
            f"subset is not an ideal (condition {condition}, witness {witness})"
        )


class QuotientIllDefined(SemibraceError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"coset operations are not well defined: witness {witness}")


class NotClosed(SemibraceError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not closed on the subset: witness {witness}")


class NotEndomorphism(SemibraceError):
    def __init__(self, witness):
        self.witness = witness
        a, b = witness
        super().__init__(f"map is not an endomorphism: fails at ({a}, {b})")


class NotIdempotentMap(SemibraceError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"endomorphism is not idempotent: fails at {witness}")


class NotAHomomorphism(SemibraceError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"action is not a homomorphism: fails at {witness}")


class NotAutomorphism(SemibraceError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"action map is not an automorphism: fails at {witness}")


class OrderMismatch(SemibraceError):
    def __init__(self, n1: int, n2: int):
        super().__init__(f"structures have different orders: {n1} vs {n2}")


class CapExceeded(SemibraceError):
    def __init__(self, requested: int, cap: int):
        self.requested = requested
        self.cap = cap
        super().__init__(
            f"order {requested} exceeds the exhaustive-search cap {cap}; "
            "request family-only mode for larger orders"
        )


class FileFormatError(SemibraceError):
    """Structure file cannot be parsed or fails schema checks."""
