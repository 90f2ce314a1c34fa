"""Free Lie algebra on X0, X1 over exact rationals, in the Lyndon bracket basis.

Two sparse representations are used side by side:

* ``WordPoly`` -- dict mapping noncommutative words (strings over '0'/'1') to
  Fraction coefficients; the ambient tensor algebra.
* ``LieElement`` -- dict mapping Lyndon words to Fraction coefficients; the
  coordinates in the Lyndon bracket basis.

Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linalg import add_term, combine
from .words import is_lyndon, lyndon_words, standard_factorization

WordPoly = dict  # word -> Fraction
LieElement = dict  # Lyndon word -> Fraction

ONE = Fraction(1)


class NotALieElementError(ValueError):
    """Raised when a word polynomial is not in the span of Lyndon brackets."""


class TableInconsistencyError(AssertionError):
    """Raised when independently computed coefficient tables disagree."""


@lru_cache(maxsize=None)
def _expand(w: str) -> tuple[tuple[str, Fraction], ...]:
    if len(w) == 1:
        return ((w, ONE),)
    u, v = standard_factorization(w)
    return tuple(sorted(word_commutator(expand(u), expand(v)).items()))


def expand(w: str) -> WordPoly:
    """Noncommutative expansion of the Lyndon bracket [w], via [u, v] = uv - vu."""
    if not is_lyndon(w):
        raise NotALieElementError(f"{w!r} is not a Lyndon word")
    return dict(_expand(w))


def word_product(p: WordPoly, q: WordPoly) -> WordPoly:
    """Concatenation product in the word algebra."""
    out: WordPoly = {}
    for wp, cp in p.items():
        for wq, cq in q.items():
            add_term(out, wp + wq, cp * cq)
    return out


def word_commutator(p: WordPoly, q: WordPoly) -> WordPoly:
    return combine((1, word_product(p, q)), (-1, word_product(q, p)))


def lie_to_word_poly(e: LieElement) -> WordPoly:
    return combine(*((c, expand(w)) for w, c in e.items()))


def rewrite_in_lyndon(p: WordPoly) -> LieElement:
    """Coordinates of ``p`` in the Lyndon bracket basis, by triangular elimination.

    The lex-smallest word of expand(W) is W itself with coefficient 1, so
    repeatedly stripping the smallest support word terminates.  A nonzero
    remainder whose smallest word is not Lyndon means ``p`` is not a Lie
    element.
    """
    out: LieElement = {}
    by_weight: dict[int, WordPoly] = {}
    for w, c in p.items():
        add_term(by_weight.setdefault(len(w), {}), w, c)
    for rest in by_weight.values():
        while rest:
            w = min(rest)
            if not is_lyndon(w):
                raise NotALieElementError(f"support word {w!r} is not Lyndon")
            c = rest[w]
            add_term(out, w, c)
            for wx, cx in expand(w).items():
                add_term(rest, wx, -c * cx)
    return out


def lie_bracket(f: LieElement, g: LieElement) -> LieElement:
    """[f, g], computed in the word algebra and rewritten into the basis."""
    return rewrite_in_lyndon(
        word_commutator(lie_to_word_poly(f), lie_to_word_poly(g))
    )


def basis_element(w: str) -> LieElement:
    if not is_lyndon(w):
        raise NotALieElementError(f"{w!r} is not a Lyndon word")
    return {w: ONE}


@lru_cache(maxsize=None)
def alpha_table(max_weight: int) -> dict[tuple[str, str, str], Fraction]:
    """Structure constants [[U],[V]] = sum_W alpha[W,U,V] [W], for Lyndon U < V.

    Covers all pairs with len(U) + len(V) <= max_weight; entries are integral
    (asserted) and keyed (W, U, V) with zero entries absent.
    """
    if max_weight < 2:
        raise ValueError("max_weight must be >= 2")
    table: dict[tuple[str, str, str], Fraction] = {}
    ws = lyndon_words(max_weight - 1)
    for u in ws:
        for v in ws:
            if u < v and len(u) + len(v) <= max_weight:
                for w, c in lie_bracket(basis_element(u), basis_element(v)).items():
                    if c.denominator != 1:
                        raise TableInconsistencyError(
                            f"alpha[{w},{u},{v}] = {c} is not an integer"
                        )
                    if len(w) != len(u) + len(v):
                        raise TableInconsistencyError(
                            f"alpha[{w},{u},{v}] breaks the weight grading"
                        )
                    table[(w, u, v)] = c
    return table
