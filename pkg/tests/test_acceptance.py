"""End-to-end acceptance checks at their full stated bounds.

Run with ``pytest -s tests/test_acceptance.py`` to see one line per check.
"""

from quandles import suites
from quandles.decide import QUANDLE, RACK


def _finish(name, report, time_limit=None):
    status = "PASS" if report.ok else "FAIL"
    print(f"{status}: {name} ({report.elapsed:.2f}s)")
    for check in report.checks:
        print(f"    [{'ok' if check.ok else 'FAIL'}] {check.label}: {check.detail}")
    assert report.ok, report.to_text()
    if time_limit is not None:
        assert report.elapsed < time_limit, f"{name} took {report.elapsed:.2f}s (limit {time_limit}s)"


def test_axiom_soundness():
    report = suites.run_suite("axioms", seed=0, samples=1000, max_size=6, n=3)
    _finish("axiom soundness (1000 random instances per axiom)", report, time_limit=5)


def test_rewrite_oracle_agreement():
    report = suites.run_suite("oracle", max_size=5, max_steps=3, n=2)
    _finish("bounded rewriting never contradicts the deciders", report, time_limit=30)


def test_quandle_membership_equivalence():
    report = suites.run_suite("theorem2", max_size=7, n=2)
    _finish("quandle canonical forms = invertible generic classes (exhaustive)", report, time_limit=60)


def test_rack_membership_equivalence():
    report = suites.run_suite("theorem5", max_size=7, n=1)
    _finish("rack canonical forms = invertible generic classes (exhaustive)", report, time_limit=60)


def test_free_group_isomorphism():
    report = suites.run_suite("iso-f_n", max_len=3, n=2)
    _finish("quandle element group is the free group on the generators", report)


def test_z_times_free_group_isomorphism():
    report = suites.run_suite("iso-zxf_n", max_z=2, max_len=2, n=2)
    _finish("rack element group is Z x free group (anti-embedding)", report)


def test_empty_alphabet_isotropy():
    quandle_report = suites.run_suite("global", theory=QUANDLE, max_size=7)
    _finish("no generators: only the identity quandle element", quandle_report)
    rack_report = suites.run_suite("global", theory=RACK, max_size=7)
    _finish("no generators: rack elements are integers under addition", rack_report)


def test_substitution_lemmas():
    report = suites.run_suite("lemmas", seed=0, samples=500, word_len=5)
    _finish("substitution laws and reduced-word structure", report, time_limit=60)


def test_naturality_squares():
    report = suites.run_suite("naturality", seed=0, samples=100)
    _finish("naturality squares commute for sampled homomorphisms", report)


def test_inner_witness_round_trip():
    report = suites.run_suite("inner", max_len=3, max_z=2, n=2)
    _finish("inner endomorphism witnesses are recovered; swap rejected", report)
