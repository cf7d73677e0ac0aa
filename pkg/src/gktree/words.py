"""Reduced-word arithmetic in the free product of k+1 involutions.

Group elements are identified with their unique minimal words: tuples of
1-based generator indices in which no two adjacent letters are equal.
The empty tuple is the identity.  Because every generator squares to the
identity, inversion is letter reversal and reduction is the deletion of
adjacent equal pairs until none remain (confluent: there are no other
relations).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import BoundExceededError, ContextMismatchError, InvalidGeneratorError
from .limits import MAX_K, MAX_WORD_LENGTH


@dataclass(frozen=True)
class GroupContext:
    """Ambient group determined by the tree order k (it has k+1 generators)."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"tree order must be >= 1, got {self.k}")
        if self.k > MAX_K:
            raise BoundExceededError(f"tree order {self.k} exceeds supported maximum {MAX_K}")

    @property
    def generator_count(self) -> int:
        return self.k + 1

    def generators(self) -> range:
        """1-based generator indices 1..k+1."""
        return range(1, self.k + 2)

    def check_generator(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.k + 1:
            raise InvalidGeneratorError(f"generator index {i!r} outside 1..{self.k + 1}")


@dataclass(frozen=True)
class Word:
    """A reduced word over a context; validates reducedness on construction."""

    ctx: GroupContext
    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = 0
        for i in self.letters:
            self.ctx.check_generator(i)
            if i == prev:
                raise ValueError(f"word {self.letters} is not reduced: a{i} repeats")
            prev = i

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_identity(self) -> bool:
        return not self.letters


def identity(ctx: GroupContext) -> Word:
    return Word(ctx, ())


def generator(ctx: GroupContext, i: int) -> Word:
    ctx.check_generator(i)
    return Word(ctx, (i,))


def _reduce_letters(raw: Iterable[int]) -> Tuple[int, ...]:
    """Delete adjacent equal pairs to a fixpoint (stack scan)."""
    stack: List[int] = []
    for i in raw:
        if stack and stack[-1] == i:
            stack.pop()
        else:
            stack.append(i)
    return tuple(stack)


def _concat_reduced(xs: Sequence[int], ys: Sequence[int]) -> Tuple[int, ...]:
    """Product of two already-reduced letter sequences.

    Only the junction can cancel, so the pair cancellation runs inward
    from it.
    """
    n = len(xs)
    j = 0
    while n > j < len(ys) and xs[n - 1 - j] == ys[j]:
        j += 1
    return tuple(xs[: n - j]) + tuple(ys[j:])


def reduce_word(raw: Iterable[int], ctx: GroupContext) -> Word:
    """Reduce a raw generator-index sequence to its minimal word."""
    letters = []
    for i in raw:
        ctx.check_generator(i)
        letters.append(i)
    return Word(ctx, _reduce_letters(letters))


def _same_ctx(x: Word, y: Word) -> None:
    if x.ctx != y.ctx:
        raise ContextMismatchError(f"mixed contexts k={x.ctx.k} and k={y.ctx.k}")


def multiply(x: Word, y: Word) -> Word:
    _same_ctx(x, y)
    return Word(x.ctx, _concat_reduced(x.letters, y.letters))


def inverse(x: Word) -> Word:
    """Inverse by letter reversal (every generator is an involution)."""
    return Word(x.ctx, tuple(reversed(x.letters)))


def conjugate(x: Word, g: Word) -> Word:
    """g^-1 x g."""
    return multiply(multiply(inverse(g), x), g)


def letter_count(x: Word, i: int) -> int:
    """Occurrences of generator a_i in the reduced form of x."""
    x.ctx.check_generator(i)
    return x.letters.count(i)


def word_length(x: Word) -> int:
    return len(x.letters)


def length_lex_key(x: Word) -> Tuple[int, Tuple[int, ...]]:
    """Canonical sort key: length first, then lexicographic on letters."""
    return (len(x.letters), x.letters)


def enumerate_letter_tuples(ctx: GroupContext, max_length: int) -> List[Tuple[int, ...]]:
    """All reduced letter tuples of length <= max_length, length-lex order."""
    if max_length < 0:
        raise ValueError(f"max_length must be >= 0, got {max_length}")
    if max_length > MAX_WORD_LENGTH:
        raise BoundExceededError(
            f"max_length {max_length} exceeds supported maximum {MAX_WORD_LENGTH}"
        )
    out: List[Tuple[int, ...]] = [()]
    level: List[Tuple[int, ...]] = [()]
    gens = list(ctx.generators())
    for _ in range(max_length):
        nxt = []
        for w in level:
            last = w[-1] if w else 0
            for g in gens:
                if g != last:
                    nxt.append(w + (g,))
        level = nxt
        out.extend(level)
    return out


def enumerate_words(ctx: GroupContext, max_length: int) -> List[Word]:
    """All reduced words of length <= max_length in length-lex order.

    Count is 1 + (k+1) * sum_{j=1..max_length} k^(j-1).
    """
    return [Word(ctx, t) for t in enumerate_letter_tuples(ctx, max_length)]


def format_word(x: Word) -> str:
    """Compact text form: "a1.a2.a1" or "e" for the identity."""
    if not x.letters:
        return "e"
    return ".".join(f"a{i}" for i in x.letters)


def parse_word(text: str, ctx: GroupContext) -> Word:
    """Parse the compact text form; rejects non-reduced input."""
    text = text.strip()
    if text == "e":
        return Word(ctx, ())
    letters = []
    for token in text.split("."):
        if not token.startswith("a") or not token[1:].isdigit():
            raise ValueError(f"bad word token {token!r} in {text!r}")
        letters.append(int(token[1:]))
    return Word(ctx, tuple(letters))


__all__ = [
    "GroupContext",
    "Word",
    "identity",
    "generator",
    "reduce_word",
    "multiply",
    "inverse",
    "conjugate",
    "letter_count",
    "word_length",
    "length_lex_key",
    "enumerate_words",
    "enumerate_letter_tuples",
    "format_word",
    "parse_word",
]
