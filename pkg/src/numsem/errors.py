"""Exception types shared across the package."""


class NumsemError(Exception):
    """Base class for all errors raised by this package."""


class ClosureViolation(NumsemError):
    """A claimed member set is not closed under addition."""

    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        super().__init__(f"{x} and {y} are members but {x + y} is not")


class FrobeniusPresent(NumsemError):
    """The designated Frobenius number appears among the members."""

    def __init__(self, frobenius: int):
        self.frobenius = frobenius
        super().__init__(f"{frobenius} is listed as a member but must be the largest gap")


class NotAMember(NumsemError):
    """An operation required a nonzero member of the semigroup."""


class ModulusMismatch(NumsemError):
    """Componentwise operations need Apery vectors of equal modulus."""


class FullSemigroup(NumsemError):
    """The operation is undefined on the full semigroup of all non-negative integers."""


class AtRoot(NumsemError):
    """The tree root has no parent."""


class NotInImage(NumsemError):
    """The tuple is not the Apery vector of any numerical semigroup."""


class NotInD(NumsemError):
    """A closure trace was requested for values outside the removable set."""


class NotASolution(NumsemError):
    """Minimality was queried for a set that is not a solution at all."""


class CapacityExceeded(NumsemError):
    """The request is outside the documented resource envelope."""


class Infeasible(NumsemError):
    """No semigroup satisfies the constraints.

    Carries the offending integer together with one explicit combination
    of the required generators that produces it, e.g. ``8 = 2·4``.
    """

    def __init__(self, value: int, combination: list[tuple[int, int]] | None = None):
        self.value = value
        self.combination = combination
        super().__init__(f"{format_combination(value, combination)} ∈ ⟨A⟩")


def format_combination(value: int, combination: list[tuple[int, int]] | None) -> str:
    """Render ``(coefficient, generator)`` pairs as e.g. ``13 = 4 + 9`` or ``8 = 2·4``."""
    if not combination:
        return str(value)
    terms = []
    for coeff, gen in combination:
        terms.append(f"{coeff}·{gen}" if coeff > 1 else f"{gen}")
    return f"{value} = " + " + ".join(terms)
