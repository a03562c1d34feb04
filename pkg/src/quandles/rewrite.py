"""Brute-force equational rewriting, independent of the translation deciders.

Neighbors of a term are everything reachable by one axiom application, in
either direction, at any subterm position.  Directions that would have to
invent a fresh subterm (un-cancelling ``a -> (a |> b) |>~ b`` for an arbitrary
``b``) are omitted; all other directions apply wherever their pattern matches
syntactically.  Bounded closures of this relation give a sound proof search:
everything connected really is provably equal, so any disagreement with the
deciders is a bug.  No completeness is claimed for the bounded search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import decide, translate
from .decide import QUANDLE, RACK
from .terms import Atom, Node, Term, enumerate_terms, render, size

DIST_POS = "dist+"      # (a |> b) |> c  =  (a |> c) |> (b |> c)
DIST_NEG = "dist-"      # same for |>~
CANCEL_POS = "cancel+"  # (a |> b) |>~ b  =  a
CANCEL_NEG = "cancel-"  # (a |>~ b) |> b  =  a
IDEM_POS = "idem+"      # a |> a  =  a
IDEM_NEG = "idem-"      # a |>~ a  =  a

RACK_AXIOMS = (DIST_POS, DIST_NEG, CANCEL_POS, CANCEL_NEG)
QUANDLE_AXIOMS = RACK_AXIOMS + (IDEM_POS, IDEM_NEG)


def axioms(theory: str) -> tuple[str, ...]:
    if theory == QUANDLE:
        return QUANDLE_AXIOMS
    if theory == RACK:
        return RACK_AXIOMS
    raise ValueError(f"unknown theory {theory!r}")


@dataclass(frozen=True)
class RewriteStep:
    axiom: str
    direction: str  # "lr" or "rl"
    path: tuple[int, ...]  # 0 = left child, 1 = right child


def _local_rewrites(u: Term, theory: str) -> list[tuple[str, str, Term]]:
    out: list[tuple[str, str, Term]] = []
    if isinstance(u, Node):
        s = u.sign
        dist = DIST_POS if s == 1 else DIST_NEG
        if isinstance(u.left, Node) and u.left.sign == s:
            a, b, c = u.left.left, u.left.right, u.right
            out.append((dist, "lr", Node(s, Node(s, a, c), Node(s, b, c))))
        if (
            isinstance(u.left, Node)
            and isinstance(u.right, Node)
            and u.left.sign == s == u.right.sign
            and u.left.right == u.right.right
        ):
            a, c = u.left.left, u.left.right
            b = u.right.left
            out.append((dist, "rl", Node(s, Node(s, a, b), c)))
        if isinstance(u.left, Node) and u.left.sign == -s and u.left.right == u.right:
            cancel = CANCEL_POS if s == -1 else CANCEL_NEG
            out.append((cancel, "lr", u.left.left))
        if theory == QUANDLE and u.left == u.right:
            out.append((IDEM_POS if s == 1 else IDEM_NEG, "lr", u.left))
    if theory == QUANDLE:
        out.append((IDEM_POS, "rl", Node(1, u, u)))
        out.append((IDEM_NEG, "rl", Node(-1, u, u)))
    return out


def _replace_at(t: Term, path: tuple[int, ...], new: Term) -> Term:
    if not path:
        return new
    assert isinstance(t, Node)
    if path[0] == 0:
        return Node(t.sign, _replace_at(t.left, path[1:], new), t.right)
    return Node(t.sign, t.left, _replace_at(t.right, path[1:], new))


def _positions(t: Term, path: tuple[int, ...] = ()):
    yield path, t
    if isinstance(t, Node):
        yield from _positions(t.left, path + (0,))
        yield from _positions(t.right, path + (1,))


def rewrite_steps(t: Term, theory: str) -> list[tuple[RewriteStep, Term]]:
    """All single axiom applications in ``t`` with the resulting terms."""
    out: list[tuple[RewriteStep, Term]] = []
    for path, u in _positions(t):
        for axiom, direction, new_sub in _local_rewrites(u, theory):
            out.append((RewriteStep(axiom, direction, path), _replace_at(t, path, new_sub)))
    return out


_neighbor_cache: dict[tuple[Term, str], frozenset[Term]] = {}


def rewrite_neighbors(t: Term, theory: str) -> frozenset[Term]:
    key = (t, theory)
    cached = _neighbor_cache.get(key)
    if cached is None:
        cached = frozenset(new for _, new in rewrite_steps(t, theory))
        _neighbor_cache[key] = cached
    return cached


def rewrite_closure(
    t: Term, theory: str, max_steps: int, max_size: int | None = None
) -> set[Term]:
    """Terms reachable from ``t`` in at most ``max_steps`` rewrites.

    Terms larger than ``max_size`` (default 2*size(t)+4) are pruned; the
    start term is always included.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be >= 0")
    if max_size is None:
        max_size = 2 * size(t) + 4
    seen = {t}
    frontier = [t]
    for _ in range(max_steps):
        next_frontier: list[Term] = []
        for u in frontier:
            for v in rewrite_neighbors(u, theory):
                if v not in seen and size(v) <= max_size:
                    seen.add(v)
                    next_frontier.append(v)
        if not next_frontier:
            break
        frontier = next_frontier
    return seen


@dataclass
class CrossValidationReport:
    theory: str
    alphabet: tuple[str, ...]
    max_size: int
    max_steps: int
    terms_checked: int = 0
    pairs_checked: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    equal_pairs: int = 0
    connected_pairs: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        lines = [
            f"cross-validate theory={self.theory} alphabet={','.join(self.alphabet)} "
            f"max_size={self.max_size} max_steps={self.max_steps}",
            f"terms: {self.terms_checked}",
            f"rewrite pairs checked: {self.pairs_checked}",
            f"violations: {len(self.violations)}",
        ]
        for s, t in self.violations:
            lines.append(f"  DISAGREE: {s}  ~rewrite~  {t}  but decider says not equal")
        lines.append(
            f"decider-equal pairs within enumeration: {self.equal_pairs} "
            f"({self.connected_pairs} connected by bounded rewriting; informational)"
        )
        lines.append("result: " + ("ok" if self.ok else "VIOLATIONS FOUND"))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "theory": self.theory,
            "alphabet": list(self.alphabet),
            "max_size": self.max_size,
            "max_steps": self.max_steps,
            "terms_checked": self.terms_checked,
            "pairs_checked": self.pairs_checked,
            "violations": [list(v) for v in self.violations],
            "equal_pairs": self.equal_pairs,
            "connected_pairs": self.connected_pairs,
            "ok": self.ok,
        }


def cross_validate(
    theory: str, alphabet: tuple[str, ...], max_size: int, max_steps: int
) -> CrossValidationReport:
    """Check the deciders against bounded rewriting over a whole term universe.

    Every term rewrite-connected to ``t`` must be decided equal to it (the
    soundness half).  Additionally counts how many decider-equal pairs within
    the enumeration the bounded search managed to connect.
    """
    report = CrossValidationReport(theory, tuple(alphabet), max_size, max_steps)
    universe = list(enumerate_terms(alphabet, max_size))
    report.terms_checked = len(universe)
    closures: dict[Term, set[Term]] = {}
    for t in universe:
        closure = rewrite_closure(t, theory, max_steps)
        closures[t] = closure
        for u in sorted(closure, key=render):
            report.pairs_checked += 1
            if not decide.term_equal(t, u, theory):
                report.violations.append((render(t), render(u)))

    by_class: dict[object, list[Term]] = {}
    for t in universe:
        if theory == QUANDLE:
            key: object = translate.quandle_image(t)
        else:
            key = translate.rack_image(t)
        by_class.setdefault(key, []).append(t)
    for group in by_class.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                report.equal_pairs += 1
                a, b = group[i], group[j]
                if b in closures[a] or a in closures[b]:
                    report.connected_pairs += 1
    return report
