"""Closed terms over the two self-distributive operations.

A term is either an atom (a named constant) or a binary node applying one of
the two operations, spelled ``|>`` (sign +1) and ``|>~`` (sign -1) in concrete
syntax.  Both operators have equal precedence and associate to the left, so
``x |> y1 |>~ y2`` parses as ``(x |> y1) |>~ y2``.

Atoms come from a fixed alphabet: the distinguished constant ``x``, two
auxiliary constants ``x0``/``x1`` used when checking that a term commutes with
the operations, and numbered generators ``y1``, ``y2``, ...  Letters are plain
strings; structural equality of letters is string equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

X = "x"
X0 = "x0"
X1 = "x1"

OP_SYMBOLS = {1: "|>", -1: "|>~"}


class TermSyntaxError(ValueError):
    """Malformed term text; ``position`` is the 0-based offset of the error."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownGeneratorError(ValueError):
    """A generator atom ``y<k>`` whose index is outside 1..n."""

    def __init__(self, index: int, n: int):
        super().__init__(f"generator y{index} is out of range for n={n}")
        self.index = index
        self.n = n


def gen(i: int) -> str:
    """The i-th generator letter (1-based)."""
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return f"y{i}"


def is_gen(letter: str) -> bool:
    return len(letter) > 1 and letter[0] == "y" and letter[1:].isdigit()


def gen_index(letter: str) -> int:
    if not is_gen(letter):
        raise ValueError(f"not a generator letter: {letter!r}")
    return int(letter[1:])


def letter_key(letter: str) -> tuple[int, int]:
    """Sort key realizing the fixed letter order x < x0 < x1 < y1 < y2 < ..."""
    if letter == X:
        return (0, 0)
    if letter == X0:
        return (1, 0)
    if letter == X1:
        return (2, 0)
    return (3, gen_index(letter))


def check_letter(letter: str, n: int, allow_aux: bool = True) -> None:
    """Raise unless ``letter`` is valid for an alphabet with n generators."""
    if letter == X:
        return
    if letter in (X0, X1):
        if not allow_aux:
            raise ValueError(f"auxiliary atom {letter!r} not allowed here")
        return
    if is_gen(letter):
        i = gen_index(letter)
        if not 1 <= i <= n:
            raise UnknownGeneratorError(i, n)
        return
    raise ValueError(f"unknown letter {letter!r}")


def standard_alphabet(n: int, include_x: bool = True, include_aux: bool = False) -> tuple[str, ...]:
    letters: list[str] = []
    if include_x:
        letters.append(X)
    if include_aux:
        letters.extend([X0, X1])
    letters.extend(gen(i) for i in range(1, n + 1))
    return tuple(letters)


@dataclass(frozen=True, slots=True)
class Atom:
    letter: str

    def __repr__(self) -> str:
        return f"Atom({self.letter!r})"


@dataclass(frozen=True, slots=True)
class Node:
    sign: int  # +1 for |>, -1 for |>~
    left: "Term"
    right: "Term"

    def __repr__(self) -> str:
        return f"Node({self.sign:+d}, {self.left!r}, {self.right!r})"


Term = Union[Atom, Node]


def op(sign: int, left: Term, right: Term) -> Node:
    if sign not in (1, -1):
        raise ValueError(f"operation sign must be +1 or -1, got {sign}")
    return Node(sign, left, right)


def size(t: Term) -> int:
    """Number of constructors (atoms and nodes) in the term."""
    if isinstance(t, Atom):
        return 1
    return 1 + size(t.left) + size(t.right)


def left_of(t: Term) -> str:
    """The leftmost atom of the term."""
    while isinstance(t, Node):
        t = t.left
    return t.letter


def atoms_of(t: Term) -> set[str]:
    if isinstance(t, Atom):
        return {t.letter}
    return atoms_of(t.left) | atoms_of(t.right)


def subst(t: Term, s: Term, target: str) -> Term:
    """Replace every atom named ``target`` in ``t`` by the term ``s``."""
    if isinstance(t, Atom):
        return s if t.letter == target else t
    return Node(t.sign, subst(t.left, s, target), subst(t.right, s, target))


def subst_many(t: Term, mapping: Mapping[str, Term]) -> Term:
    """Simultaneously replace atoms per ``mapping`` (unlisted atoms stay)."""
    if isinstance(t, Atom):
        return mapping.get(t.letter, t)
    return Node(t.sign, subst_many(t.left, mapping), subst_many(t.right, mapping))


# ---------------------------------------------------------------------------
# Concrete syntax
# ---------------------------------------------------------------------------

def render(t: Term) -> str:
    """Canonical spelling with minimal parentheses under left associativity.

    Left children never need parentheses; composite right children always do.
    """
    if isinstance(t, Atom):
        return t.letter
    left = render(t.left)
    right = render(t.right)
    if isinstance(t.right, Node):
        right = f"({right})"
    return f"{left} {OP_SYMBOLS[t.sign]} {right}"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    # token kinds: "op" (value "+"/"-"), "atom", "(", ")"
    tokens: list[tuple[str, str, int]] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "(":
            tokens.append(("(", "(", i))
            i += 1
        elif c == ")":
            tokens.append((")", ")", i))
            i += 1
        elif text.startswith("|>~", i):
            tokens.append(("op", "-", i))
            i += 3
        elif text.startswith("|>", i):
            tokens.append(("op", "+", i))
            i += 2
        elif c in ("x", "y"):
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("atom", text[i:j], i))
            i = j
        else:
            raise TermSyntaxError(f"unexpected character {c!r}", i)
    return tokens


def parse(text: str, n: int, allow_aux: bool = True) -> Term:
    """Parse term text over the alphabet with ``n`` generators.

    The grammar is  term := factor { ("|>" | "|>~") factor },
    factor := atom | "(" term ")",  atom := "x" | "x0" | "x1" | "y" digits,
    with both operators left-associative at equal precedence.
    """
    tokens = _tokenize(text)
    pos = 0

    def error(message: str) -> TermSyntaxError:
        at = tokens[pos][2] if pos < len(tokens) else len(text)
        return TermSyntaxError(message, at)

    def parse_factor() -> Term:
        nonlocal pos
        if pos >= len(tokens):
            raise error("unexpected end of input")
        kind, value, at = tokens[pos]
        if kind == "atom":
            pos += 1
            if value == X or (value[0] == "y" and value[1:].isdigit() and len(value) > 1):
                pass
            elif value in (X0, X1):
                if not allow_aux:
                    raise TermSyntaxError(f"auxiliary atom {value!r} not allowed", at)
            else:
                raise TermSyntaxError(f"bad atom {value!r}", at)
            if is_gen(value):
                i = gen_index(value)
                if not 1 <= i <= n:
                    raise UnknownGeneratorError(i, n)
                value = gen(i)  # normalizes e.g. y01 -> y1
            return Atom(value)
        if kind == "(":
            pos += 1
            inner = parse_term()
            if pos >= len(tokens) or tokens[pos][0] != ")":
                raise error("expected ')'")
            pos += 1
            return inner
        raise error(f"expected an atom or '(', got {value!r}")

    def parse_term() -> Term:
        nonlocal pos
        t = parse_factor()
        while pos < len(tokens) and tokens[pos][0] == "op":
            sign = 1 if tokens[pos][1] == "+" else -1
            pos += 1
            t = Node(sign, t, parse_factor())
        return t

    result = parse_term()
    if pos < len(tokens):
        raise error(f"trailing input {tokens[pos][1]!r}")
    return result


# ---------------------------------------------------------------------------
# Enumeration and random generation
# ---------------------------------------------------------------------------

def enumerate_terms(alphabet: Iterable[str], max_size: int) -> Iterator[Term]:
    """Yield every term with atoms from ``alphabet`` and size <= max_size.

    Deterministic order: ascending size; within a size, by left-subterm size,
    then recursively by this same order on left and right, with ``|>`` before
    ``|>~``.  Only odd sizes occur (a node adds 1 to two odd-sized children).
    """
    letters = sorted(set(alphabet), key=letter_key)
    if not letters:
        raise ValueError("alphabet must be nonempty")
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    by_size: dict[int, list[Term]] = {1: [Atom(l) for l in letters]}

    def terms_of(k: int) -> list[Term]:
        if k not in by_size:
            out: list[Term] = []
            for i in range(1, k - 1, 2):
                for left in terms_of(i):
                    for right in terms_of(k - 1 - i):
                        out.append(Node(1, left, right))
                        out.append(Node(-1, left, right))
            by_size[k] = out
        return by_size[k]

    for k in range(1, max_size + 1, 2):
        yield from terms_of(k)


def count_terms(alphabet_size: int, max_size: int) -> int:
    """How many terms ``enumerate_terms`` yields, via the size recurrence."""
    counts = {1: alphabet_size}
    for k in range(3, max_size + 1, 2):
        counts[k] = sum(2 * counts[i] * counts[k - 1 - i] for i in range(1, k - 1, 2))
    return sum(c for k, c in counts.items() if k <= max_size)


def random_term(rng: random.Random, alphabet: tuple[str, ...], max_size: int) -> Term:
    """A random term of odd size <= max_size (uniform size, then structure)."""
    sizes = list(range(1, max_size + 1, 2))
    return _random_term_of_size(rng, alphabet, rng.choice(sizes))


def _random_term_of_size(rng: random.Random, alphabet: tuple[str, ...], k: int) -> Term:
    if k == 1:
        return Atom(rng.choice(alphabet))
    i = rng.choice(range(1, k - 1, 2))
    sign = rng.choice((1, -1))
    left = _random_term_of_size(rng, alphabet, i)
    right = _random_term_of_size(rng, alphabet, k - 1 - i)
    return Node(sign, left, right)
