"""Ihara special derivations, the Ihara bracket, and the semidirect Lie algebra.

A special derivation D_f sends X0 to 0 and X1 to [X1, f].  The semidirect sum
carries two copies of the free Lie algebra: the "x" copy with the free bracket
and the "1" copy with the Ihara bracket, glued by the action of special
derivations on the x copy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .freelie import (
    LieElement,
    TableInconsistencyError,
    WordPoly,
    basis_element,
    expand,
    lie_bracket,
    lie_to_word_poly,
    rewrite_in_lyndon,
    word_product,
)
from .linalg import add_term, combine
from .words import lyndon_words


def _word_derivation(p: WordPoly, image_of_one: WordPoly) -> WordPoly:
    """Associative derivation with X0 -> 0 and X1 -> image_of_one, applied to p."""
    out: WordPoly = {}
    for w, c in p.items():
        for i, letter in enumerate(w):
            if letter != "1":
                continue
            prefix, suffix = w[:i], w[i + 1 :]
            for m, cm in image_of_one.items():
                add_term(out, prefix + m + suffix, c * cm)
    return out


def special_derivation(f: LieElement, g: LieElement) -> LieElement:
    """D_f(g): the derivation with D_f(X0) = 0, D_f(X1) = [X1, f]."""
    fp = lie_to_word_poly(f)
    x1 = expand("1")
    image_of_one = combine((1, word_product(x1, fp)), (-1, word_product(fp, x1)))
    return rewrite_in_lyndon(_word_derivation(lie_to_word_poly(g), image_of_one))


def ihara_bracket(f: LieElement, g: LieElement) -> LieElement:
    """{f, g} = [f, g] + D_f(g) - D_g(f)."""
    return combine(
        (1, lie_bracket(f, g)),
        (1, special_derivation(f, g)),
        (-1, special_derivation(g, f)),
    )


@dataclass(frozen=True)
class SemidirectElement:
    """Element of the semidirect sum: an x-copy part and a 1-copy part."""

    x_part: LieElement = field(default_factory=dict)
    one_part: LieElement = field(default_factory=dict)


def semidirect_bracket(a: SemidirectElement, b: SemidirectElement) -> SemidirectElement:
    """Bracket of the semidirect sum.

    Free bracket on x-parts, Ihara bracket on 1-parts, and cross terms
    {g(1), f(x)} = D_g(f)(x) = -{f(x), g(1)}.
    """
    x = combine(
        (1, lie_bracket(a.x_part, b.x_part)),
        (1, special_derivation(a.one_part, b.x_part)),
        (-1, special_derivation(b.one_part, a.x_part)),
    )
    one = ihara_bracket(a.one_part, b.one_part)
    return SemidirectElement(x_part=x, one_part=one)


def _integral(value: Fraction, what: str) -> Fraction:
    if value.denominator != 1:
        raise TableInconsistencyError(f"{what} = {value} is not an integer")
    return value


@lru_cache(maxsize=None)
def beta_gamma_tables(
    max_weight: int,
) -> tuple[dict[tuple[str, str, str], Fraction], dict[tuple[str, str, str], Fraction]]:
    """The beta and gamma structure-constant tables up to total weight ``max_weight``.

    beta[W,U,V] is read off from {[U](x), [V](1)} = -D_[V]([U]) over all ordered
    pairs (U, V), including U = V; gamma[W,U,V] from the Ihara bracket
    {[U](1), [V](1)} for U < V.  All entries are integral (asserted).
    """
    if max_weight < 2:
        raise ValueError("max_weight must be >= 2")
    beta: dict[tuple[str, str, str], Fraction] = {}
    gamma: dict[tuple[str, str, str], Fraction] = {}
    ws = lyndon_words(max_weight - 1)
    for u in ws:
        for v in ws:
            if len(u) + len(v) > max_weight:
                continue
            eu, ev = basis_element(u), basis_element(v)
            for w, c in combine((-1, special_derivation(ev, eu))).items():
                beta[(w, u, v)] = _integral(c, f"beta[{w},{u},{v}]")
            if u < v:
                for w, c in ihara_bracket(eu, ev).items():
                    gamma[(w, u, v)] = _integral(c, f"gamma[{w},{u},{v}]")
    return beta, gamma
