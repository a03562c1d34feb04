import random

from quandles import translate, words
from quandles.terms import (
    X,
    X0,
    X1,
    Atom,
    Node,
    enumerate_terms,
    gen,
    left_of,
    parse,
    random_term,
    subst,
)
from quandles.translate import RackNF


def q(text, n=2):
    return parse(text, n)


def test_quandle_image_examples():
    assert translate.quandle_image(Atom(X)) == ((X, 1),)
    assert translate.quandle_image(q("x |> y1")) == (("y1", -1), (X, 1), ("y1", 1))
    assert translate.quandle_image(q("(x |> y1) |>~ y1")) == ((X, 1),)


def test_rack_image_examples():
    assert translate.rack_image(Atom(X)) == RackNF(X, ())
    assert translate.rack_image(q("x |> y1")) == RackNF(X, (("y1", 1),))
    assert translate.rack_image(q("x |> x")) == RackNF(X, ((X, 1),))
    assert translate.rack_image(q("y1 |>~ x")) == RackNF("y1", ((X, -1),))


def test_rack_image_distinguishes_self_application():
    assert translate.rack_image(q("x |> x")) != translate.rack_image(Atom(X))


def test_head_conjugate_examples():
    assert translate.head_conjugate(Atom(X)) == ((X, 1),)
    assert translate.head_conjugate(q("x |> y1")) == (("y1", -1), (X, 1), ("y1", 1))
    assert translate.head_conjugate(q("x |> x")) == ((X, 1),)


def test_substitution_law_for_quandle_image():
    rng = random.Random(11)
    small = (X, gen(1), gen(2))
    big = (X, gen(1), gen(2), gen(3))
    for _ in range(300):
        t = random_term(rng, small, 6)
        s = random_term(rng, big, 6)
        lhs = translate.quandle_image(subst(t, s, X))
        rhs = words.subst(translate.quandle_image(t), translate.quandle_image(s), X)
        assert lhs == rhs


def test_head_is_leftmost_atom_exhaustive():
    for t in enumerate_terms((X, gen(1), gen(2)), 6):
        assert translate.rack_image(t).head == left_of(t)


def test_rack_image_after_substituting_operation_for_x():
    rng = random.Random(12)
    alphabet = (X, gen(1), gen(2))
    cases = [
        (1, words.letter(X1), ((X1, -1), (X0, 1), (X1, 1))),
        (-1, words.letter(X1, -1), ((X1, 1), (X0, 1), (X1, -1))),
    ]
    for _ in range(300):
        t = random_term(rng, alphabet, 6)
        head, tail = translate.rack_image(t)
        for sign, prefix, inner in cases:
            got = translate.rack_image(subst(t, Node(sign, Atom(X0), Atom(X1)), X))
            expected_tail = words.subst(tail, inner, X)
            if head == X:
                assert got.head == X0
                assert got.tail == words.mul(prefix, expected_tail)
            else:
                assert got.head == head
                assert got.tail == expected_tail


def test_chains_translate_letterwise():
    rng = random.Random(13)
    alphabet = (X, gen(1), gen(2))
    for _ in range(300):
        head = rng.choice(alphabet)
        t = Atom(head)
        spelled = []
        for _ in range(rng.randint(0, 6)):
            sign = rng.choice((1, -1))
            letter = rng.choice(alphabet)
            t = Node(sign, t, Atom(letter))
            spelled.append((letter, sign))
        assert translate.rack_image(t) == RackNF(head, words.reduce(spelled))


def test_chain_substitution_composes_tails():
    rng = random.Random(14)
    alphabet = (X, gen(1), gen(2))

    def chain_from_x():
        t = Atom(X)
        for _ in range(rng.randint(0, 5)):
            t = Node(rng.choice((1, -1)), t, Atom(rng.choice(alphabet)))
        return t

    def force_left_x(t):
        if isinstance(t, Atom):
            return Atom(X)
        return Node(t.sign, force_left_x(t.left), t.right)

    for _ in range(300):
        t = chain_from_x()
        t_prime = force_left_x(random_term(rng, alphabet, 5))
        got = translate.rack_image(subst(t, t_prime, X))
        tail_p = translate.rack_image(t_prime).tail
        tail_t = translate.rack_image(t).tail
        assert got.head == X
        assert got.tail == words.mul(
            tail_p, words.subst(tail_t, translate.head_conjugate(t_prime), X)
        )
