"""Brute-force cross-validation of the deciders and canonical forms.

Axiom rewriting is an independent notion of provable equality: anything a
bounded rewrite search connects must be decided equal.  The verification
suites push this further, re-deriving the structural theorems by exhaustive
enumeration.  This script runs small instances of both.
"""

from quandles import cross_validate, parse, render, rewrite_closure, rewrite_neighbors, run_suite


def show(title):
    print()
    print(title)
    print("-" * len(title))


show("One-step rewrites of (y1 |> y2) |>~ y2 in the rack theory")
for u in sorted(rewrite_neighbors(parse("(y1 |> y2) |>~ y2", 2), "rack"), key=render):
    print(f"  {render(u)}")

show("Three rewrite steps from y1 |> y1 in the quandle theory")
closure = rewrite_closure(parse("y1 |> y1", 1), "quandle", 3)
print(f"  {len(closure)} terms reachable; a few of them:")
for u in sorted(closure, key=render)[:6]:
    print(f"  {render(u)}")

show("Cross-validating rewriting against the deciders")
for theory in ("quandle", "rack"):
    report = cross_validate(theory, ("y1", "y2"), 4, 2)
    print(f"  {theory}: {report.terms_checked} terms, {report.pairs_checked} pairs, "
          f"{len(report.violations)} violations")

show("Verification suites (reduced bounds; see tests/ for the full runs)")
for name, bounds in [
    ("axioms", {"samples": 100}),
    ("theorem2", {"max_size": 5}),
    ("global", {"max_size": 7}),
    ("inner", {"max_len": 2}),
]:
    report = run_suite(name, **bounds)
    print(f"  {name:10} {'pass' if report.ok else 'FAIL'} ({report.elapsed:.2f}s)")
