"""Named verification sweeps: exhaustive and randomized structural checks.

Each suite re-derives a structural statement by brute force (enumeration,
random instantiation, explicit substitution) and compares the outcome against
the fast implementations.  Suites return a ``SuiteReport`` whose checks carry
counts, so a passing run documents how much ground it covered.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import decide, isotropy, rewrite, translate, words
from .decide import QUANDLE, RACK
from .isotropy import QuandleElem, RackElem
from .terms import (
    X,
    X0,
    X1,
    Atom,
    Node,
    Term,
    enumerate_terms,
    gen,
    is_gen,
    left_of,
    random_term,
    render,
    standard_alphabet,
    subst,
)
from .words import EMPTY, GroupWord


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(label, ok, detail))

    def to_text(self) -> str:
        lines = [f"suite {self.suite}:"]
        for c in self.checks:
            status = "ok  " if c.ok else "FAIL"
            detail = f"  ({c.detail})" if c.detail else ""
            lines.append(f"  {status} - {c.label}{detail}")
        verdict = "pass" if self.ok else "FAIL"
        lines.append(f"suite {self.suite}: {verdict} in {self.elapsed:.2f}s")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "elapsed": self.elapsed,
            "checks": [
                {"label": c.label, "ok": c.ok, "detail": c.detail} for c in self.checks
            ],
        }


# ---------------------------------------------------------------------------
# Membership by unwound definition (used to cross-check the canonical forms)
# ---------------------------------------------------------------------------

def realize_group_word(w: GroupWord) -> Term | None:
    """A closed term translating exactly to the reduced word ``w``, if any.

    Translations of closed terms are precisely the conjugates ``g^-1 a g`` of
    single positive letters; the term is the atom ``a`` followed by one
    operation per letter of ``g``.
    """
    left, right = 0, len(w)
    while right - left >= 2 and w[left][0] == w[right - 1][0] and w[left][1] == -w[right - 1][1]:
        left += 1
        right -= 1
    core = w[left:right]
    if len(core) != 1 or core[0][1] != 1:
        return None
    t: Term = Atom(core[0][0])
    for l, e in w[right:]:
        t = Node(e, t, Atom(l))
    return t


def quandle_member_by_definition(t: Term) -> bool:
    """Membership decided from invertibility plus generic commutation only.

    Never consults the canonical-shape test.  Invertibility is decided
    exactly: an inverse's translation is forced by the single substitution
    equation, so it suffices to realize that one candidate and verify both
    equations with the decider.  (Generic commutation already forces at most
    one occurrence of ``x`` in the reduced image, so the multi-occurrence
    fallback answer False is exact.)
    """
    if not isotropy.commutes_generically(t, QUANDLE):
        return False
    image = translate.quandle_image(t)
    positions = [i for i, (l, _) in enumerate(image) if l == X]
    if len(positions) != 1 or image[positions[0]][1] != 1:
        return False
    k = positions[0]
    forced = words.mul(words.inv(image[:k]), words.letter(X), words.inv(image[k + 1:]))
    candidate = realize_group_word(forced)
    if candidate is None:
        return False
    return decide.quandle_equal(subst(t, candidate, X), Atom(X)) and decide.quandle_equal(
        subst(candidate, t, X), Atom(X)
    )


def rack_member_by_definition(t: Term) -> bool:
    """Rack membership from invertibility plus generic commutation only.

    A term whose leftmost atom is not ``x`` stays that way under every
    substitution, so it cannot be invertible.  Otherwise the candidate
    inverse, forced at the level of translations, is built directly and both
    substitution equations are checked with the decider.  Tails that do not
    split as an ``x``-power followed by generators cannot occur together with
    generic commutation; answering False there is exact.
    """
    if not isotropy.commutes_generically(t, RACK):
        return False
    head, tail = translate.rack_image(t)
    if head != X:
        return False
    z, rest = words.split_leading_run(tail, X)
    if any(l == X for l, _ in rest):
        return False
    candidate: Term = Atom(X)
    for _ in range(abs(z)):
        candidate = Node(-1 if z > 0 else 1, candidate, Atom(X))
    for l, e in words.inv(rest):
        candidate = Node(e, candidate, Atom(l))
    return decide.rack_equal(subst(t, candidate, X), Atom(X)) and decide.rack_equal(
        subst(candidate, t, X), Atom(X)
    )


# ---------------------------------------------------------------------------
# Random generation helpers
# ---------------------------------------------------------------------------

def random_reduced_word(rng: random.Random, letters: tuple[str, ...], max_len: int) -> GroupWord:
    length = rng.randint(0, max_len)
    out: list[tuple[str, int]] = []
    while len(out) < length:
        l = rng.choice(letters)
        e = rng.choice((1, -1))
        if out and out[-1] == (l, -e):
            continue
        out.append((l, e))
    return tuple(out)


def _force_leftmost(t: Term, letter: str) -> Term:
    if isinstance(t, Atom):
        return Atom(letter)
    return Node(t.sign, _force_leftmost(t.left, letter), t.right)


def _random_chain(rng: random.Random, letters: tuple[str, ...], max_links: int, head: str | None = None) -> Term:
    t: Term = Atom(head if head is not None else rng.choice(letters))
    for _ in range(rng.randint(0, max_links)):
        t = Node(rng.choice((1, -1)), t, Atom(rng.choice(letters)))
    return t


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def suite_axioms(seed: int = 0, samples: int = 1000, max_size: int = 6, n: int = 3) -> SuiteReport:
    """Every axiom instance is decided equal by its own theory's decider;
    idempotence instances are decided not-equal by the rack decider."""
    report = SuiteReport("axioms")
    rng = random.Random(seed)
    alphabet = standard_alphabet(n, include_x=False)

    def instances(build: Callable[[Term, Term, Term], tuple[Term, Term]]):
        for _ in range(samples):
            a = random_term(rng, alphabet, max_size)
            b = random_term(rng, alphabet, max_size)
            c = random_term(rng, alphabet, max_size)
            yield build(a, b, c)

    shared = {
        "self-distributivity of |>": lambda a, b, c: (
            Node(1, Node(1, a, b), c),
            Node(1, Node(1, a, c), Node(1, b, c)),
        ),
        "self-distributivity of |>~": lambda a, b, c: (
            Node(-1, Node(-1, a, b), c),
            Node(-1, Node(-1, a, c), Node(-1, b, c)),
        ),
        "cancellation (a |> b) |>~ b": lambda a, b, c: (Node(-1, Node(1, a, b), b), a),
        "cancellation (a |>~ b) |> b": lambda a, b, c: (Node(1, Node(-1, a, b), b), a),
    }
    idem = {
        "idempotence a |> a": lambda a, b, c: (Node(1, a, a), a),
        "idempotence a |>~ a": lambda a, b, c: (Node(-1, a, a), a),
    }

    for theory in (QUANDLE, RACK):
        axiom_set = dict(shared)
        if theory == QUANDLE:
            axiom_set.update(idem)
        for label, build in axiom_set.items():
            bad = sum(1 for lhs, rhs in instances(build) if not decide.term_equal(lhs, rhs, theory))
            report.add(f"{theory}: {label}", bad == 0, f"{samples} instances, {bad} failures")
    for label, build in idem.items():
        wrongly_equal = sum(1 for lhs, rhs in instances(build) if decide.rack_equal(lhs, rhs))
        report.add(
            f"rack rejects {label}", wrongly_equal == 0, f"{samples} instances, {wrongly_equal} decided equal"
        )
    return report


def suite_oracle(max_size: int = 5, max_steps: int = 3, n: int = 2) -> SuiteReport:
    """Bounded rewriting never connects terms the deciders distinguish."""
    report = SuiteReport("oracle")
    alphabet = standard_alphabet(n, include_x=False)
    for theory in (QUANDLE, RACK):
        r = rewrite.cross_validate(theory, alphabet, max_size, max_steps)
        report.add(
            f"{theory}: rewriting agrees with decider",
            r.ok,
            f"{r.terms_checked} terms, {r.pairs_checked} pairs, {len(r.violations)} violations; "
            f"{r.connected_pairs}/{r.equal_pairs} equal pairs connected",
        )
    return report


def suite_theorem2(max_size: int = 7, n: int = 2) -> SuiteReport:
    """Canonical-shape membership coincides with the definitional test, and
    canonical inverses really are two-sided inverses."""
    report = SuiteReport("theorem2")
    alphabet = standard_alphabet(n, include_x=True)
    mismatches: list[str] = []
    bad_inverses: list[str] = []
    members = 0
    total = 0
    for t in enumerate_terms(alphabet, max_size):
        total += 1
        elem = isotropy.quandle_canon(t)
        by_def = quandle_member_by_definition(t)
        if (elem is not None) != by_def:
            mismatches.append(render(t))
            continue
        if elem is not None:
            members += 1
            t_inv = isotropy.elem_to_term(isotropy.quandle_invert(elem))
            if not (
                decide.quandle_equal(subst(t, t_inv, X), Atom(X))
                and decide.quandle_equal(subst(t_inv, t, X), Atom(X))
            ):
                bad_inverses.append(render(t))
    report.add(
        "membership equivalence",
        not mismatches,
        f"{total} terms, {members} members, {len(mismatches)} discrepancies"
        + (f": {mismatches[:5]}" if mismatches else ""),
    )
    report.add(
        "canonical inverses are two-sided",
        not bad_inverses,
        f"{members} members checked" + (f", failures: {bad_inverses[:5]}" if bad_inverses else ""),
    )
    return report


def suite_theorem5(max_size: int = 7, n: int = 1) -> SuiteReport:
    """Rack analogue of ``suite_theorem2``."""
    report = SuiteReport("theorem5")
    alphabet = standard_alphabet(n, include_x=True)
    mismatches: list[str] = []
    bad_inverses: list[str] = []
    members = 0
    total = 0
    for t in enumerate_terms(alphabet, max_size):
        total += 1
        elem = isotropy.rack_canon(t)
        by_def = rack_member_by_definition(t)
        if (elem is not None) != by_def:
            mismatches.append(render(t))
            continue
        if elem is not None:
            members += 1
            t_inv = isotropy.elem_to_term(isotropy.rack_invert(elem))
            if not (
                decide.rack_equal(subst(t, t_inv, X), Atom(X))
                and decide.rack_equal(subst(t_inv, t, X), Atom(X))
            ):
                bad_inverses.append(render(t))
    report.add(
        "membership equivalence",
        not mismatches,
        f"{total} terms, {members} members, {len(mismatches)} discrepancies"
        + (f": {mismatches[:5]}" if mismatches else ""),
    )
    report.add(
        "canonical inverses are two-sided",
        not bad_inverses,
        f"{members} members checked" + (f", failures: {bad_inverses[:5]}" if bad_inverses else ""),
    )
    return report


def suite_iso_fn(max_len: int = 3, n: int = 2) -> SuiteReport:
    """The embedding of free-group words into quandle elements is a group
    isomorphism, and canonical multiplication matches term substitution."""
    report = SuiteReport("iso-f_n")
    gens = standard_alphabet(n, include_x=False)
    word_list = list(words.enumerate_reduced(gens, max_len))

    hom_bad = 0
    for u in word_list:
        for v in word_list:
            lhs = isotropy.quandle_embed(words.mul(u, v))
            rhs = isotropy.quandle_mul(isotropy.quandle_embed(u), isotropy.quandle_embed(v))
            if lhs != rhs:
                hom_bad += 1
    report.add("homomorphism law", hom_bad == 0, f"{len(word_list) ** 2} pairs, {hom_bad} failures")

    images = {isotropy.quandle_embed(u) for u in word_list}
    report.add("injective on range", len(images) == len(word_list), f"{len(word_list)} words")
    elems = {QuandleElem(w) for w in word_list}
    report.add("surjective onto canonical elements in range", images == elems, f"{len(elems)} elements")

    mul_bad = 0
    elem_list = sorted(elems, key=lambda e: words.sort_key(e.word))
    for a in elem_list:
        for b in elem_list:
            by_subst = isotropy.quandle_canon(
                subst(isotropy.elem_to_term(a), isotropy.elem_to_term(b), X)
            )
            if by_subst != isotropy.quandle_mul(a, b):
                mul_bad += 1
    report.add(
        "canonical product = substitution then canonicalization",
        mul_bad == 0,
        f"{len(elem_list) ** 2} pairs, {mul_bad} failures",
    )
    return report


def suite_iso_zxfn(max_z: int = 2, max_len: int = 2, n: int = 2) -> SuiteReport:
    """The pairing of an integer with a free-group word anti-embeds into rack
    elements, and the closed product formula matches term substitution."""
    report = SuiteReport("iso-zxf_n")
    gens = standard_alphabet(n, include_x=False)
    word_list = list(words.enumerate_reduced(gens, max_len))
    pairs = [(z, u) for z in range(-max_z, max_z + 1) for u in word_list]

    anti_bad = 0
    for z, u in pairs:
        for zp, v in pairs:
            lhs = isotropy.rack_embed(z + zp, words.mul(u, v))
            rhs = isotropy.rack_mul(isotropy.rack_embed(zp, v), isotropy.rack_embed(z, u))
            if lhs != rhs:
                anti_bad += 1
    report.add("anti-homomorphism law", anti_bad == 0, f"{len(pairs) ** 2} pairs, {anti_bad} failures")

    images = {isotropy.rack_embed(z, u) for z, u in pairs}
    report.add("injective on range", len(images) == len(pairs), f"{len(pairs)} pairs")
    elems = {RackElem(z, w) for z, w in pairs}
    report.add("surjective onto canonical elements in range", images == elems, f"{len(elems)} elements")

    mul_bad = 0
    elem_list = sorted(elems, key=lambda e: (e.z, words.sort_key(e.word)))
    for a in elem_list:
        for b in elem_list:
            by_subst = isotropy.rack_canon(
                subst(isotropy.elem_to_term(a), isotropy.elem_to_term(b), X)
            )
            if by_subst != isotropy.rack_mul(a, b):
                mul_bad += 1
    report.add(
        "closed product formula = substitution then canonicalization",
        mul_bad == 0,
        f"{len(elem_list) ** 2} pairs, {mul_bad} failures",
    )
    return report


def suite_global(theory: str = QUANDLE, max_size: int = 7) -> SuiteReport:
    """With no generators, the invertible generic classes collapse: only the
    identity for quandles; exactly the self-application powers for racks,
    multiplying like integers."""
    report = SuiteReport("global")
    universe = list(enumerate_terms((X,), max_size))
    if theory == QUANDLE:
        found = {isotropy.quandle_canon(t) for t in universe} - {None}
        report.add(
            "only the identity element occurs",
            found == {isotropy.QUANDLE_IDENTITY},
            f"{len(universe)} terms, elements found: {len(found)}",
        )
    else:
        found = {isotropy.rack_canon(t) for t in universe} - {None}
        max_z = (max_size - 1) // 2
        expected = {RackElem(z, EMPTY) for z in range(-max_z, max_z + 1)}
        report.add(
            f"elements are exactly the powers -{max_z}..{max_z}",
            found == expected,
            f"{len(universe)} terms, {len(found)} elements",
        )
        add_bad = sum(
            1
            for a in expected
            for b in expected
            if isotropy.rack_mul(a, b) != RackElem(a.z + b.z, EMPTY)
        )
        report.add("product acts as integer addition", add_bad == 0, f"{len(expected) ** 2} pairs")
    return report


def suite_lemmas(seed: int = 0, samples: int = 500, word_len: int = 5) -> SuiteReport:
    """Substitution laws and reduced-word structure facts, by brute force."""
    report = SuiteReport("lemmas")
    rng = random.Random(seed)

    # Substitution law for the quandle translation: image of t[s/x] equals
    # the image of t with the image of s substituted for x.
    bad = 0
    big = standard_alphabet(3, include_x=True)
    small = standard_alphabet(2, include_x=True)
    for _ in range(samples):
        t = random_term(rng, small, 6)
        s = random_term(rng, big, 6)
        lhs = translate.quandle_image(subst(t, s, X))
        rhs = words.subst(translate.quandle_image(t), translate.quandle_image(s), X)
        if lhs != rhs:
            bad += 1
    report.add("quandle translation commutes with substitution", bad == 0, f"{samples} pairs, {bad} failures")

    # The head of the rack translation is the leftmost atom.
    universe = list(enumerate_terms(small, 6))
    bad = sum(1 for t in universe if translate.rack_image(t).head != left_of(t))
    report.add("rack head = leftmost atom", bad == 0, f"{len(universe)} terms, {bad} failures")

    # Substituting x0 |>^e x1 for x: four head/tail cases.
    bad = 0
    for _ in range(samples):
        t = random_term(rng, small, 6)
        head, tail = translate.rack_image(t)
        for sign, prefix, inner in (
            (1, words.letter(X1), ((X1, -1), (X0, 1), (X1, 1))),
            (-1, words.letter(X1, -1), ((X1, 1), (X0, 1), (X1, -1))),
        ):
            got = translate.rack_image(subst(t, Node(sign, Atom(X0), Atom(X1)), X))
            tail_sub = words.subst(tail, inner, X)
            if head == X:
                want = (X0, words.mul(prefix, tail_sub))
            else:
                want = (head, tail_sub)
            if (got.head, got.tail) != want:
                bad += 1
    report.add("substituting x0 |>^e x1 for x follows the four cases", bad == 0, f"{samples} terms, {bad} failures")

    # Left-associated atom chains translate to the spelled-out word.
    bad = 0
    for _ in range(samples):
        head_letter = rng.choice(small)
        links = [(rng.choice((1, -1)), rng.choice(small)) for _ in range(rng.randint(0, 6))]
        t = Atom(head_letter)
        spelled: list[tuple[str, int]] = []
        for sign, letter in links:
            t = Node(sign, t, Atom(letter))
            spelled.append((letter, sign))
        got = translate.rack_image(t)
        if got.head != head_letter or got.tail != words.reduce(spelled):
            bad += 1
    report.add("atom chains translate letterwise", bad == 0, f"{samples} chains, {bad} failures")

    # Substituting a term with leftmost atom x into an x-headed chain:
    # tails compose through the conjugated head.
    bad = 0
    for _ in range(samples):
        t = _random_chain(rng, small, 5, head=X)
        t_prime = _force_leftmost(random_term(rng, small, 5), X)
        got = translate.rack_image(subst(t, t_prime, X))
        head_p, tail_p = translate.rack_image(t_prime)
        tail_t = translate.rack_image(t).tail
        want_tail = words.mul(tail_p, words.subst(tail_t, translate.head_conjugate(t_prime), X))
        if got.head != X or got.tail != want_tail:
            bad += 1
    report.add("chain substitution composes tails", bad == 0, f"{samples} pairs, {bad} failures")

    # Reduced-word structure facts over {x, y1}.
    reduced_words = list(words.enumerate_reduced((X, gen(1)), word_len))
    conj = ((X1, -1), (X0, 1), (X1, 1))

    premise_holders = 0
    bad = 0
    for s in reduced_words:
        lhs = words.mul(words.subst(s, words.letter(X1), X), words.subst(s, conj, X))
        rhs = words.mul(words.subst(s, words.letter(X0), X), words.subst(s, words.letter(X1), X))
        if lhs == rhs:
            premise_holders += 1
            occ = [(l, e) for l, e in s if l == X]
            if len(occ) > 1 or (occ and occ[0][1] != 1):
                bad += 1
    report.add(
        "commuting substitution forces at most one positive x",
        bad == 0,
        f"{len(reduced_words)} words, {premise_holders} satisfy the premise, {bad} failures",
    )

    bad = 0
    for s in reduced_words:
        r = words.mul(words.letter(X1), words.subst(s, conj, X))
        if not s:
            ok = bool(r) and r[-1] == (X1, 1)
        elif s[-1] == (X, 1):
            ok = r[-2:] == ((X0, 1), (X1, 1))
        elif s[-1] == (X, -1):
            ok = r[-2:] == ((X0, -1), (X1, 1))
        else:
            i = len(r)
            while i > 0 and is_gen(r[i - 1][0]):
                i -= 1
            trailing = r[i:]
            ok = bool(trailing) and trailing[-1] == s[-1] and i > 0 and r[i - 1] == (X1, 1)
        if not ok:
            bad += 1
    report.add(
        "conjugate substitution endings follow the case table",
        bad == 0,
        f"{len(reduced_words)} words, {bad} failures",
    )

    premise_holders = 0
    bad = 0
    for s in reduced_words:
        s0 = words.subst(s, words.letter(X0), X)
        s1 = words.subst(s, words.letter(X1), X)
        lhs = words.mul(words.letter(X1), words.subst(s, conj, X))
        rhs = words.mul(s0, words.inv(s1), words.letter(X1), s1)
        if lhs == rhs:
            premise_holders += 1
            seen_gen = False
            for l, _ in s:
                if is_gen(l):
                    seen_gen = True
                elif l == X and seen_gen:
                    bad += 1
                    break
    report.add(
        "conjugation-compatible words put all x before all generators",
        bad == 0,
        f"{len(reduced_words)} words, {premise_holders} satisfy the premise, {bad} failures",
    )
    return report


def suite_naturality(seed: int = 0, samples: int = 100) -> SuiteReport:
    """Applying an element commutes with composing homomorphisms: pushing the
    result through a second hom equals acting via the composed images."""
    report = SuiteReport("naturality")
    rng = random.Random(seed)
    gens2 = standard_alphabet(2, include_x=False)
    gens3 = standard_alphabet(3, include_x=False)

    for theory in (QUANDLE, RACK):
        bad = 0
        for _ in range(samples):
            if theory == QUANDLE:
                elem: isotropy.Elem = QuandleElem(random_reduced_word(rng, gens2, 3))
            else:
                elem = RackElem(rng.randint(-2, 2), random_reduced_word(rng, gens2, 3))
            h_images = [random_term(rng, gens3, 5) for _ in range(2)]
            hp_images = [random_term(rng, gens2, 5) for _ in range(3)]
            q = random_term(rng, gens3, 5)
            lhs = isotropy.apply_hom(isotropy.apply_inner(elem, h_images, q), hp_images)
            composed = [isotropy.apply_hom(img, hp_images) for img in h_images]
            rhs = isotropy.apply_inner(elem, composed, isotropy.apply_hom(q, hp_images))
            if not decide.term_equal(lhs, rhs, theory):
                bad += 1
        report.add(f"{theory}: naturality squares commute", bad == 0, f"{samples} triples, {bad} failures")
    return report


def suite_inner(max_len: int = 3, max_z: int = 2, n: int = 2) -> SuiteReport:
    """Round trip: each canonical element induces an endomorphism whose
    witness is recovered; a generator swap is recognized as not inner."""
    report = SuiteReport("inner")
    gens = standard_alphabet(n, include_x=False)
    identity_images = [Atom(g) for g in gens]
    word_list = list(words.enumerate_reduced(gens, max_len))

    bad = 0
    for w in word_list:
        elem = QuandleElem(w)
        images = [isotropy.apply_inner(elem, identity_images, Atom(g)) for g in gens]
        if isotropy.quandle_inner_witness(images, n) != elem:
            bad += 1
    report.add("quandle witnesses recovered exactly", bad == 0, f"{len(word_list)} elements, {bad} failures")

    bad = 0
    count = 0
    for z in range(-max_z, max_z + 1):
        for w in word_list:
            count += 1
            elem = RackElem(z, w)
            images = [isotropy.apply_inner(elem, identity_images, Atom(g)) for g in gens]
            if isotropy.rack_inner_witness(images, n) != elem:
                bad += 1
    report.add("rack witnesses recovered exactly", bad == 0, f"{count} elements, {bad} failures")

    swap = [Atom(gen(2)), Atom(gen(1))]
    report.add(
        "generator swap is not inner (quandle)",
        isotropy.quandle_inner_witness(swap, 2) is None,
    )
    report.add(
        "generator swap is not inner (rack)",
        isotropy.rack_inner_witness(swap, 2) is None,
    )
    return report


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

SUITE_NAMES = (
    "axioms",
    "oracle",
    "theorem2",
    "theorem5",
    "iso-f_n",
    "iso-zxf_n",
    "lemmas",
    "global",
    "naturality",
    "inner",
)


def run_suite(name: str, theory: str = QUANDLE, seed: int = 0, **bounds) -> SuiteReport:
    """Run a named suite, timing it.  Unknown bounds raise TypeError."""
    start = time.perf_counter()
    if name == "axioms":
        report = suite_axioms(seed=seed, **bounds)
    elif name == "oracle":
        report = suite_oracle(**bounds)
    elif name == "theorem2":
        report = suite_theorem2(**bounds)
    elif name == "theorem5":
        report = suite_theorem5(**bounds)
    elif name == "iso-f_n":
        report = suite_iso_fn(**bounds)
    elif name == "iso-zxf_n":
        report = suite_iso_zxfn(**bounds)
    elif name == "lemmas":
        report = suite_lemmas(seed=seed, **bounds)
    elif name == "global":
        report = suite_global(theory=theory, **bounds)
    elif name == "naturality":
        report = suite_naturality(seed=seed, **bounds)
    elif name == "inner":
        report = suite_inner(**bounds)
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    report.elapsed = time.perf_counter() - start
    return report
