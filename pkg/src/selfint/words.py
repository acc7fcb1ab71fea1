"""Words in the rank-2 free group on a and b.

Letters are written ``a``, ``A``, ``b``, ``B`` where the uppercase letter
is the inverse of its lowercase partner.  A word is a plain ``str`` over
that alphabet; the structured types below (:class:`CyclicWord`,
:class:`BlockForm`, ...) wrap validated strings.  All operations are pure
and all types immutable, so everything here is safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from selfint import _kernel
from selfint.errors import (
    EmptyInputError,
    InvalidCharacterError,
    TrivialWordError,
    WordError,
)

LETTERS = "aAbB"

_INVERT = str.maketrans("aAbB", "AaBb")
_CODE = {c: i for i, c in enumerate(LETTERS)}


def encode(word: str) -> bytes:
    """Letter codes (a=0, A=1, b=2, B=3) for a validated word."""
    return bytes(_CODE[c] for c in word)


def decode(raw: bytes) -> str:
    return "".join(LETTERS[x] for x in raw)


def letter_inverse(letter: str) -> str:
    return letter.translate(_INVERT)


def parse_word(text: str) -> str:
    """Transcribe ``text`` into a word, verbatim.

    No reduction is applied; callers reduce explicitly.  Raises
    EmptyInputError or InvalidCharacterError (with the offending
    position) on bad input.
    """
    if not text:
        raise EmptyInputError()
    for pos, char in enumerate(text):
        if char not in _CODE:
            raise InvalidCharacterError(char, pos)
    return text


def is_reduced(word: str) -> bool:
    return all(word[i + 1] != letter_inverse(word[i]) for i in range(len(word) - 1))


def is_cyclically_reduced(word: str) -> bool:
    return bool(word) and is_reduced(word) and word[0] != letter_inverse(word[-1])


def free_reduce(word: str) -> str:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[str] = []
    for c in word:
        if out and out[-1] == letter_inverse(c):
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def cyclically_reduce(word: str) -> str:
    """Freely reduce, then strip matching first/last inverse pairs.

    Idempotent.  Raises TrivialWordError when everything cancels (the
    word is the identity of the group).
    """
    if not word:
        raise EmptyInputError()
    w = free_reduce(word)
    while len(w) >= 2 and w[0] == letter_inverse(w[-1]):
        w = w[1:-1]
    if not w:
        raise TrivialWordError(word)
    return w


def inverse(word: str) -> str:
    """Reverse the word and invert every letter.  An involution."""
    return word.translate(_INVERT)[::-1]


def rotations(word: str):
    for k in range(len(word)):
        yield word[k:] + word[:k]


@dataclass(frozen=True)
class CyclicWord:
    """Canonical representative of a free-homotopy class.

    ``letters`` is cyclically reduced and is the lexicographically least
    rotation under a < A < b < B; construction validates both.
    """

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise EmptyInputError()
        parse_word(self.letters)
        if not is_cyclically_reduced(self.letters):
            raise WordError(f"{self.letters!r} is not cyclically reduced")
        if not _kernel.is_canonical(encode(self.letters)):
            raise WordError(f"{self.letters!r} is not the least rotation of its class")

    @property
    def canonical(self) -> bool:
        return True

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


def canonical_rotation(word: str | CyclicWord) -> CyclicWord:
    """Least rotation of a cyclically reduced word.

    Every rotation of the same necklace maps to the same CyclicWord.
    """
    if isinstance(word, CyclicWord):
        return word
    parse_word(word)
    if not is_cyclically_reduced(word):
        raise WordError(f"{word!r} is not cyclically reduced")
    return CyclicWord(decode(_kernel.canonical_rotation(encode(word))))


@dataclass(frozen=True)
class PrimitiveDecomposition:
    root: CyclicWord
    multiplicity: int


def primitive_root(word: CyclicWord | str) -> PrimitiveDecomposition:
    """Smallest-period root and multiplicity m with |word| = m * |root|.

    m = 1 iff the word is primitive (not a proper power).
    """
    cw = canonical_rotation(word)
    raw = encode(cw.letters)
    p = _kernel.smallest_period(raw)
    return PrimitiveDecomposition(
        root=CyclicWord(cw.letters[:p]),
        multiplicity=len(cw) // p,
    )


@dataclass(frozen=True)
class Block:
    """One syllable pair s^i r^j with s in {a, A} and r in {b, B}."""

    s: str
    i: int
    r: str
    j: int


@dataclass(frozen=True)
class BlockForm:
    """Alternating syllable decomposition s1^i1 r1^j1 ... sn^in rn^jn.

    ``word`` is the rotation of the source class beginning at the first
    a-type run; the blocks concatenate back to it exactly.
    """

    blocks: tuple[Block, ...]
    word: str

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def length(self) -> int:
        return sum(b.i + b.j for b in self.blocks)


@dataclass(frozen=True)
class SimplePower:
    """A class using only {a, A} or only {b, B}: a power of one letter.

    These are the boundary-type geodesics; they are simple, so no block
    decomposition applies.
    """

    letter: str
    exponent: int


def block_form(word: CyclicWord | str) -> BlockForm | SimplePower:
    """Syllable decomposition of a class, or its simple-power classification.

    The canonical rotation already starts at an a-type run whenever both
    letter types occur, so the block reading starts at position 0.
    """
    cw = canonical_rotation(word)
    w = cw.letters
    kinds = {c in "aA" for c in w}
    if len(kinds) == 1:
        return SimplePower(letter=w[0], exponent=len(w))
    blocks: list[Block] = []
    pos = 0
    n = len(w)
    while pos < n:
        s = w[pos]
        i = 0
        while pos < n and w[pos] == s:
            i += 1
            pos += 1
        r = w[pos]
        j = 0
        while pos < n and w[pos] == r:
            j += 1
            pos += 1
        blocks.append(Block(s=s, i=i, r=r, j=j))
    return BlockForm(blocks=tuple(blocks), word=w)
