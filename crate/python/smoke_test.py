"""Smoke test for the tyoung extension module.

Build and run from the repository root:

    cargo build -p ty-py --features extension-module
    cp target/debug/libtyoung.so python/tyoung.so
    python3 python/smoke_test.py
"""

import tyoung

mu = tyoung.Monomial([4, 3, 2, 1, 1, 4])
assert mu.n == 5 and mu.degree == 15
assert mu.f_vector() == [15, 8, 3]
assert mu.signature() == [2, 2, 3]
assert mu.tableau()[0] == [0, 2, 4]
assert mu.tau().weight == -mu.weight

nu = tyoung.Monomial([1, 1, 1, 0, 1, 1])
right = nu.transversal("right")
assert right["colors"] == [1, 4, 5, 5] and right["monotonic"]
left = tyoung.transversal([1, 1, 1, 0, 1, 1], side="left")
assert left["elements"][0] == [2, 0, 1, 0, 1, 1]

assert tyoung.Monomial([2, 0]).leq(tyoung.Monomial([1, 1]))
assert tyoung.Monomial([2, 0]).apply_color(1) == tyoung.Monomial([1, 1])
assert len(tyoung.enumerate(5, 5)) == 252
assert len(tyoung.level_set(5, [0, 1, 1])) > 0

fam = tyoung.scd(4, [1, 2, 0])
assert fam is not None and fam["kind"] == "symmetric-decomposition"
assert tyoung.scd(5, [0, 1, 1]) is None

split = tyoung.split_generic(4, 6)
assert not split["singular"] and split["generic_size"] == 210

try:
    tyoung.Monomial([])
except ValueError:
    pass
else:
    raise AssertionError("empty exponent vector accepted")

print("tyoung smoke test passed")
