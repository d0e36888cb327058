"""Exit criteria. Every check is an exact equality; there are no tolerances.

One PASS/FAIL line per criterion is printed in the pytest terminal summary.
"""

import random
import time
from itertools import permutations, product
from math import comb

import pytest

from brauer.decomposition import (
    Context,
    build_module,
    full_decomposition,
    iso_check,
    perm_module_iso_check,
    representation_check,
    torus_commutes,
    torus_element,
)
from brauer.diagrams import algebra_generators, diagram_multiply, double_factorial, enumerate_diagrams
from brauer.scalars import SKEW, SYMMETRIC, FieldSpec
from brauer.tensor_action import FormSpec, all_indices
from brauer.weights import (
    Composition,
    count_compositions,
    enumerate_compositions,
    fiber,
    hyperoctahedral_generators,
    image_weights,
    pi_map,
)


def decomposition_cells(ns, rs, chars, form, max_dim=None):
    for n, r, p in product(ns, rs, chars):
        if max_dim is not None and n**r > max_dim:
            continue
        yield n, r, p


def check_cells(cells, form):
    """Run the full decomposition in each cell; return (#cells, failures)."""
    failures = []
    count = 0
    for n, r, p in cells:
        count += 1
        rep = full_decomposition(Context(n, r, form), FieldSpec(p))
        bad = [str(s.xi) for s in rep.summands if not s.verified]
        if bad:
            failures.append((n, r, p, bad))
        if not rep.partition_ok or rep.total_dim != n**r:
            failures.append((n, r, p, "partition"))
    return count, failures


def test_criterion_1_orthogonal_decomposition(record_criterion):
    t0 = time.perf_counter()
    cells = list(decomposition_cells([2, 3, 4, 5], [1, 2, 3, 4], [0, 3, 5, 7], SYMMETRIC, max_dim=4096))
    count, failures = check_cells(cells, SYMMETRIC)
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    record_criterion(1, "symmetric-form summands are stable under all generators", ok,
                     f"{count} cells, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 60


def test_criterion_2_symplectic_decomposition(record_criterion):
    t0 = time.perf_counter()
    cells = list(decomposition_cells([2, 4], [1, 2, 3, 4, 5], [0, 2, 3, 5], SKEW))
    count, failures = check_cells(cells, SKEW)
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    record_criterion(2, "skew-form summands are stable under all generators, char 2 included", ok,
                     f"{count} cells, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 60


def test_criterion_3_completeness(record_criterion):
    cells = [(n, r, SYMMETRIC) for n, r in product([2, 3, 4, 5], [1, 2, 3, 4]) if n**r <= 4096]
    cells += [(n, r, SKEW) for n, r in product([2, 4], [1, 2, 3, 4, 5])]
    failures = []
    for n, r, form in cells:
        full = set(all_indices(n, r))
        covered = []
        for xi in image_weights(n, r):
            covered.extend(build_module(xi, Context(n, r, form)).basis)
        if len(covered) != n**r or set(covered) != full:
            failures.append((n, r, form))
    record_criterion(3, "summand dimensions add to n^r and the bases partition all multi-indices",
                     not failures, f"{len(cells)} cells")
    assert not failures


def test_criterion_4_fibers_vs_brute_force(record_criterion):
    t0 = time.perf_counter()
    failures = []
    checked = 0
    for n in range(1, 7):
        for r in range(0, 7):
            preimage = {}
            for lam in product(range(r + 1), repeat=n):
                if sum(lam) == r:
                    lam = Composition(lam)
                    preimage.setdefault(pi_map(lam, n), set()).add(lam)
            if set(image_weights(n, r)) != set(preimage):
                failures.append((n, r, "image"))
            l = n // 2
            for xi, expected in preimage.items():
                checked += 1
                got = fiber(xi, n, r)
                s = r - xi.size
                if n % 2 == 0:
                    formula = count_compositions(l, s // 2)
                else:
                    formula = sum(count_compositions(l, t) for t in range(0, s // 2 + 1))
                if set(got) != expected or len(got) != len(expected) or len(got) != formula:
                    failures.append((n, r, xi))
    elapsed = time.perf_counter() - t0
    record_criterion(4, "constructive fibers equal brute-force preimages and their counting formulas",
                     not failures and elapsed < 30, f"{checked} fibers, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 30


def test_criterion_5_representation_property(record_criterion):
    t0 = time.perf_counter()
    configs = []
    for n in (2, 3, 4):
        for p in (0, 3, 5):
            configs.append(FormSpec(SYMMETRIC, n, FieldSpec(p)))
        if n % 2 == 0:
            for p in (0, 2, 3, 5):
                configs.append(FormSpec(SKEW, n, FieldSpec(p)))
    failures = []
    for form in configs:
        for r in (2, 3):
            bad = representation_check(form, r)
            if bad is not None:
                failures.append((form.kind, form.n, form.field.p, r, str(bad)))
    elapsed = time.perf_counter() - t0
    record_criterion(5, "v.d1.d2 == delta^s v.(d1 d2) for all diagram pairs, r in {2,3}",
                     not failures and elapsed < 120, f"{2 * len(configs)} configurations, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 120


def test_criterion_6_associativity(record_criterion):
    ds = enumerate_diagrams(3)
    failures = 0
    for d1, d2, d3 in product(ds, repeat=3):
        a = diagram_multiply(d1, d2)
        left = diagram_multiply(a.diagram, d3)
        b = diagram_multiply(d2, d3)
        right = diagram_multiply(d1, b.diagram)
        if left.diagram != right.diagram or a.cycles + left.cycles != b.cycles + right.cycles:
            failures += 1
    record_criterion(6, "diagram multiplication is associative with matching loop counts",
                     failures == 0, f"{len(ds) ** 3} triples")
    assert failures == 0


def test_criterion_7_isomorphisms(record_criterion):
    failures = []
    checks = 0
    for n in (2, 3, 4):
        for r in (1, 2, 3):
            ctx = Context(n, r)
            for lam in enumerate_compositions(n, r):
                for w in permutations(range(1, n + 1)):
                    checks += 1
                    if not perm_module_iso_check(lam, w, ctx):
                        failures.append(("M", n, r, lam, w))
            forms = [(SYMMETRIC, p) for p in (0, 3, 5)]
            if n % 2 == 0:
                forms += [(SKEW, p) for p in (0, 2, 3)]
            for form, p in forms:
                ctx = Context(n, r, form)
                for xi in image_weights(n, r):
                    for w in hyperoctahedral_generators(n // 2):
                        checks += 1
                        if not iso_check(xi, w, ctx, FieldSpec(p)):
                            failures.append(("N", n, r, form, p, xi, w))
    record_criterion(7, "relabeling isomorphisms M^lam ~ M^w(lam) and N^xi ~ N^w(xi)",
                     not failures, f"{checks} checks")
    assert not failures


def test_criterion_8_torus_commutation(record_criterion):
    rng = random.Random(20261016)
    failures = []
    checks = 0
    for p in (3, 5, 7):
        F = FieldSpec(p)
        for n in (1, 2, 3, 4):
            forms = [SYMMETRIC] + ([SKEW] if n % 2 == 0 else [])
            for kind in forms:
                form = FormSpec(kind, n, F)
                gens = {r: algebra_generators(r) for r in (1, 2, 3)}
                for _ in range(100):
                    free = [F(rng.randrange(1, p)) for _ in range(n // 2)]
                    if n % 2:
                        free.append(F(rng.choice((1, -1))))
                    diag = torus_element(n, free)
                    for r in (1, 2, 3):
                        for g in gens[r]:
                            checks += 1
                            if not torus_commutes(diag, g, form):
                                failures.append((p, n, kind, r, str(g)))
    record_criterion(8, "random torus elements commute with every generator", not failures,
                     f"{checks} checks")
    assert not failures


def test_criterion_9_counting(record_criterion):
    failures = []
    for r in range(1, 6):
        if len(enumerate_diagrams(r)) != double_factorial(2 * r - 1):
            failures.append(("diagrams", r))
    for n in range(1, 7):
        for r in range(0, 7):
            if len(enumerate_compositions(n, r)) != comb(n + r - 1, r):
                failures.append(("compositions", n, r))
    record_criterion(9, "|diagrams(r)| = (2r-1)!! and |Lambda(n,r)| = C(n+r-1, r)", not failures)
    assert not failures


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
