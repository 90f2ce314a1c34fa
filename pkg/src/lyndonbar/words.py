"""Binary Lyndon words: recognition, ordered enumeration, standard factorization.

Words are plain ASCII strings over the alphabet {'0', '1'}.  Python's string
comparison is exactly the lexicographic order with 0 < 1 used throughout, with
a proper prefix smaller than the word itself.
"""

from __future__ import annotations

from functools import lru_cache


class InvalidWordError(ValueError):
    """Raised on empty words or words with letters outside {'0','1'}."""


def check_word(w: str) -> str:
    if not w:
        raise InvalidWordError("empty word")
    if any(c not in "01" for c in w):
        raise InvalidWordError(f"word {w!r} has letters outside {{0,1}}")
    return w


def is_lyndon(w: str) -> bool:
    """True iff ``w`` is strictly smaller than all its nonempty proper right factors.

    Single letters are Lyndon.  Raises :class:`InvalidWordError` on empty input.
    """
    check_word(w)
    return all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def lyndon_words(max_len: int) -> tuple[str, ...]:
    """All Lyndon words of length <= ``max_len``, in lexicographic order."""
    if max_len < 1:
        raise InvalidWordError("max_len must be >= 1")
    found = []
    for n in range(1, max_len + 1):
        for k in range(2**n):
            w = format(k, f"0{n}b")
            if is_lyndon(w):
                found.append(w)
    found.sort()
    return tuple(found)


def lyndon_words_of_length(n: int) -> tuple[str, ...]:
    return tuple(w for w in lyndon_words(n) if len(w) == n)


@lru_cache(maxsize=None)
def standard_factorization(w: str) -> tuple[str, str]:
    """Split a Lyndon word of length >= 2 as ``w = u + v`` with ``v`` minimal.

    ``v`` is the lexicographically smallest proper right factor; both parts
    are again Lyndon and ``u < v``.  Length-1 words have no factorization.
    """
    check_word(w)
    if len(w) < 2:
        raise InvalidWordError(f"no factorization for the single letter {w!r}")
    if not is_lyndon(w):
        raise InvalidWordError(f"{w!r} is not a Lyndon word")
    v = min(w[i:] for i in range(1, len(w)))
    u = w[: len(w) - len(v)]
    assert is_lyndon(u) and is_lyndon(v) and u < v
    return u, v
