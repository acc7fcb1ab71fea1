"""Exception types shared across the package."""


class WordError(ValueError):
    """Base class for problems with word input."""


class InvalidCharacterError(WordError):
    def __init__(self, char: str, position: int):
        super().__init__(f"invalid character {char!r} at position {position} (expected one of a, A, b, B)")
        self.char = char
        self.position = position


class EmptyInputError(WordError):
    def __init__(self):
        super().__init__("empty word")


class TrivialWordError(WordError):
    def __init__(self, original: str = ""):
        msg = "word reduces to the identity"
        if original:
            msg += f": {original!r}"
        super().__init__(msg)
        self.original = original


class NonPrimitiveInputError(WordError):
    def __init__(self, word: str, root: str, multiplicity: int):
        super().__init__(
            f"{word!r} is a proper power ({root!r}^{multiplicity}); "
            f"corner counts are defined on primitive words only"
        )
        self.word = word
        self.root = root
        self.multiplicity = multiplicity


class LengthOutOfRangeError(WordError):
    def __init__(self, length: int, low: int, high: int):
        super().__init__(f"length {length} outside supported range [{low}, {high}]")
        self.length = length


class InvalidConfigurationError(ValueError):
    """A disk configuration violates one of its geometric conditions."""

    def __init__(self, condition: str):
        super().__init__(f"invalid configuration: {condition}")
        self.condition = condition


class NumericalDegeneracyError(ArithmeticError):
    """A matrix that should be hyperbolic is not; the configuration is corrupt."""


class BoundaryAmbiguityError(ArithmeticError):
    """An intersection point sits too close to a half-disk boundary to classify."""
