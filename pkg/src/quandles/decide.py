"""Decision procedures for provable equality of closed terms.

Equality in the free quandle holds exactly when the translated group words
agree; equality in the free rack additionally requires equal head letters.
Both deciders are total over any alphabet, including the auxiliary constants.
"""

from __future__ import annotations

from . import translate, words
from .terms import Term

QUANDLE = "quandle"
RACK = "rack"
THEORIES = (QUANDLE, RACK)


def quandle_equal(s: Term, t: Term) -> bool:
    return translate.quandle_image(s) == translate.quandle_image(t)


def rack_equal(s: Term, t: Term) -> bool:
    a = translate.rack_image(s)
    b = translate.rack_image(t)
    return a.head == b.head and a.tail == b.tail


def term_equal(s: Term, t: Term, theory: str) -> bool:
    if theory == QUANDLE:
        return quandle_equal(s, t)
    if theory == RACK:
        return rack_equal(s, t)
    raise ValueError(f"unknown theory {theory!r}")
