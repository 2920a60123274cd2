"""Cyclic words over a named alphabet, with signed letters.

A letter is a ``(name, exp)`` pair with ``exp`` in ``{+1, -1}``; a word is a
tuple of letters.  Boundary curves and group relators share this shape.
"""

from __future__ import annotations

from typing import Iterable

Letter = tuple[str, int]
Word = tuple[Letter, ...]


def letter(name: str, exp: int = 1) -> Letter:
    if exp not in (1, -1):
        raise ValueError(f"letter exponent must be +1 or -1, got {exp}")
    return (name, exp)


def invert_word(word: Word) -> Word:
    return tuple((name, -exp) for name, exp in reversed(word))


def free_reduce(word: Word) -> Word:
    out: list[Letter] = []
    for lt in word:
        if out and out[-1][0] == lt[0] and out[-1][1] == -lt[1]:
            out.pop()
        else:
            out.append(lt)
    return tuple(out)


def cyclic_reduce(word: Word) -> Word:
    w = free_reduce(word)
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = free_reduce(w[1:-1])
    return w


def rotations(word: Word) -> Iterable[Word]:
    if not word:
        yield word
        return
    for i in range(len(word)):
        yield word[i:] + word[:i]


def letter_sort_key(lt: Letter) -> tuple[str, int]:
    # positive occurrence of a name sorts before its inverse
    return (lt[0], 0 if lt[1] > 0 else 1)


def word_sort_key(word: Word) -> tuple:
    return (len(word),) + tuple(letter_sort_key(lt) for lt in word)


def cyclic_canonical(word: Word) -> Word:
    """Least representative of a word up to rotation and inversion.

    Orientation names are left untouched; this is the equivalence of an
    unoriented closed curve with a fixed edge labelling.
    """
    best: Word | None = None
    for w in (word, invert_word(word)):
        for rot in rotations(w):
            if best is None or word_sort_key(rot) < word_sort_key(best):
                best = rot
    assert best is not None
    return best


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(name if exp > 0 else f"{name}^-1" for name, exp in word)


def parse_word(text: str) -> Word:
    """Inverse of :func:`format_word`; also accepts the empty word as ``1``."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        if tok.endswith("^-1"):
            out.append((tok[:-3], -1))
        else:
            out.append((tok, 1))
    return tuple(out)


def exponent_sums(word: Word, names: Iterable[str]) -> dict[str, int]:
    sums = {name: 0 for name in names}
    for name, exp in word:
        sums[name] += exp
    return sums
