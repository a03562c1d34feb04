import random

from quandles import decide, rewrite
from quandles.decide import QUANDLE, RACK
from quandles.terms import Node, enumerate_terms, gen, parse, random_term


def q(text, n=2):
    return parse(text, n)


def test_quandle_idempotence_and_cancellation():
    assert decide.quandle_equal(q("y1 |> y1"), q("y1"))
    assert decide.quandle_equal(q("(x |> y1) |>~ y1"), q("x"))
    assert not decide.quandle_equal(q("x |> y1"), q("x |> y2"))


def test_self_distributivity_is_right_handed():
    # (a |> b) |> c = (a |> c) |> (b |> c) holds in both theories; the
    # left-handed variant a |> (b |> c) = (a |> b) |> (a |> c) does not hold
    # under the conjugation-style operations.
    lhs = q("(x |> y1) |> y2")
    rhs = q("(x |> y2) |> (y1 |> y2)")
    assert decide.quandle_equal(lhs, rhs)
    assert decide.rack_equal(lhs, rhs)
    left_lhs = q("x |> (y1 |> y2)")
    left_rhs = q("(x |> y1) |> (x |> y2)")
    assert not decide.quandle_equal(left_lhs, left_rhs)
    assert not decide.rack_equal(left_lhs, left_rhs)


def test_rack_rejects_idempotence_but_keeps_cancellation():
    assert not decide.rack_equal(q("y1 |> y1", 1), q("y1", 1))
    assert decide.rack_equal(q("(x |> y1) |>~ y1"), q("x"))
    assert decide.rack_equal(q("x |> x |>~ x", 0), q("x", 0))


def test_axiom_soundness_sample():
    rng = random.Random(0)
    alphabet = (gen(1), gen(2), gen(3))
    for _ in range(200):
        a = random_term(rng, alphabet, 6)
        b = random_term(rng, alphabet, 6)
        c = random_term(rng, alphabet, 6)
        for sign in (1, -1):
            dist_l = Node(sign, Node(sign, a, b), c)
            dist_r = Node(sign, Node(sign, a, c), Node(sign, b, c))
            assert decide.quandle_equal(dist_l, dist_r)
            assert decide.rack_equal(dist_l, dist_r)
        assert decide.quandle_equal(Node(-1, Node(1, a, b), b), a)
        assert decide.rack_equal(Node(1, Node(-1, a, b), b), a)
        assert decide.quandle_equal(Node(1, a, a), a)
        assert not decide.rack_equal(Node(1, a, a), a)
        assert not decide.rack_equal(Node(-1, a, a), a)


def test_equality_is_a_congruence():
    rng = random.Random(1)
    alphabet = (gen(1), gen(2))
    for theory in (QUANDLE, RACK):
        checked = 0
        for _ in range(40):
            a = random_term(rng, alphabet, 5)
            c = random_term(rng, alphabet, 5)
            for b in rewrite.rewrite_closure(a, theory, 2):
                assert decide.term_equal(a, b, theory)
                for sign in (1, -1):
                    assert decide.term_equal(Node(sign, a, c), Node(sign, b, c), theory)
                    assert decide.term_equal(Node(sign, c, a), Node(sign, c, b), theory)
                checked += 1
        assert checked > 30  # non-vacuity: closures really produced equal pairs


def test_rack_equality_implies_quandle_equality():
    rng = random.Random(2)
    alphabet = (gen(1), gen(2))
    pairs = 0
    for _ in range(40):
        a = random_term(rng, alphabet, 5)
        for b in rewrite.rewrite_closure(a, RACK, 2):
            assert decide.quandle_equal(a, b)
            pairs += 1
    for s in enumerate_terms(alphabet, 5):
        for t in enumerate_terms(alphabet, 3):
            if decide.rack_equal(s, t):
                assert decide.quandle_equal(s, t)
                pairs += 1
    assert pairs > 50
