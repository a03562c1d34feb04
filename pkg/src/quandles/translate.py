"""Normal forms of closed terms inside the free group.

Two translations make provable equality of terms computable:

* ``quandle_image`` sends a term to a free-group word.  Atoms go to
  themselves; ``s |> t`` goes to ``T^-1 S T`` and ``s |>~ t`` to ``T S T^-1``
  where ``S``, ``T`` are the images of the subterms.  Two terms are equal in
  the free quandle exactly when their images coincide as group elements.

* ``rack_image`` sends a term to a pair ``(head, tail)`` of a letter and a
  word: atoms go to ``(atom, e)``; ``s |>^eps t`` goes to
  ``(head(S), tail(S) * tail(T)^-1 * head(T)^eps * tail(T))``.  The head is
  always the leftmost atom of the term.  Two terms are equal in the free rack
  exactly when both components agree.

Images are kept reduced throughout, so comparisons are structural.
"""

from __future__ import annotations

from typing import NamedTuple

from . import words
from .terms import Atom, Node, Term, left_of
from .words import GroupWord


class RackNF(NamedTuple):
    """Rack normal form: a head letter and a reduced group word."""

    head: str
    tail: GroupWord


def quandle_image(t: Term) -> GroupWord:
    if isinstance(t, Atom):
        return words.letter(t.letter)
    s = quandle_image(t.left)
    w = quandle_image(t.right)
    if t.sign == 1:
        return words.mul(words.inv(w), s, w)
    return words.mul(w, s, words.inv(w))


def rack_image(t: Term) -> RackNF:
    if isinstance(t, Atom):
        return RackNF(t.letter, words.EMPTY)
    head, s = rack_image(t.left)
    h2, w = rack_image(t.right)
    return RackNF(head, words.mul(s, words.inv(w), words.letter(h2, t.sign), w))


def head_conjugate(t: Term) -> GroupWord:
    """The head of ``rack_image(t)`` conjugated by its tail: tail^-1 head tail.

    For terms whose leftmost atom is the substitution constant this is the
    word that a further substitution plugs in for that constant.
    """
    head, tail = rack_image(t)
    return words.mul(words.inv(tail), words.letter(head), tail)
