"""Exception types shared across the package."""


class FactGraphError(Exception):
    """Base class for all factgraph errors."""


class EmptyInput(FactGraphError, ValueError):
    """No generators were supplied, or a generator is not a positive integer."""


class NonMinimalGenerators(FactGraphError, ValueError):
    """A generator factors over the others.

    ``generator`` is the redundant value and ``witness`` a factorization of it
    over the remaining generators (coordinates aligned with those generators).
    """

    def __init__(self, generator, others, witness):
        self.generator = generator
        self.others = tuple(others)
        self.witness = tuple(witness)
        parts = " + ".join(
            f"{z}*{g}" for z, g in zip(witness, others) if z
        )
        super().__init__(f"generator {generator} is redundant: {generator} = {parts}")


class ArityTooSmall(FactGraphError, ValueError):
    """Operation requires embedding dimension at least 2."""


class EmptySubset(FactGraphError, ValueError):
    """A nonempty subset of generator indices is required."""


class ValueMismatch(FactGraphError, ValueError):
    """The two factorizations do not factor the same element."""


class IdenticalFactorizations(FactGraphError, ValueError):
    """A trade needs two distinct factorizations."""


class Incomparable(FactGraphError, ValueError):
    """The two poset elements are not comparable."""


class InvalidPair(FactGraphError, ValueError):
    """Not a valid pair of disjoint, nonempty, proper subsets of [k]."""


class TradeArityMismatch(FactGraphError, ValueError):
    """A trade's coordinate length or values do not match the semigroup."""


class BoundTooSmall(FactGraphError, ValueError):
    """The requested scan bound is below the connectivity bound."""


class ArityCapExceeded(FactGraphError, ValueError):
    """Requested arity is above the configured materialization cap."""


class InvalidIndices(FactGraphError, ValueError):
    """The two distinguished indices must be distinct elements of [k]."""


class PresentationParseError(FactGraphError, ValueError):
    """A presentation file failed to parse or violates the trade invariants."""


class FitFailure(FactGraphError, ValueError):
    """A held-out sample disagrees with the interpolated polynomial.

    Signals that the requested degree, period, or start is wrong for the
    sampled sequence.
    """

    def __init__(self, residue, witness):
        self.residue = residue
        self.witness = witness
        super().__init__(
            f"fit validation failed on residue {residue} at n = {witness}"
        )
