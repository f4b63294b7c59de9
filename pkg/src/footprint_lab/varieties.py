"""Exhaustive ground truth for maximum zero counts, plus witness families.

The projective searches range over r-dimensional spaces of forms through
their canonical reduced row echelon bases, evaluating on the standard
point representatives (last nonzero coordinate 1).  Results carry the
earliest maximizing subspace in the canonical enumeration order, so they
are reproducible and independent of the worker count.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import formulas, linalg, monomials, runtime
from .errors import (AmbientMismatch, IndexOutOfRange, OutOfRange,
                     WitnessInvalid)
from .gf import FieldSpec, make_field
from .polys import (HomogeneousPolynomial, make_affine_poly,
                    make_poly, monomial_poly)


@lru_cache(maxsize=None)
def projective_points(m: int, q: int) -> tuple[tuple[int, ...], ...]:
    """Canonical representatives of P^m(F_q): last nonzero coordinate 1,
    grouped by its index from m down to 0, earlier coordinates running in
    odometer order."""
    pts = []
    for l in range(m, -1, -1):
        for head in itertools.product(range(q), repeat=l):
            pts.append(head + (1,) + (0,) * (m - l))
    return tuple(pts)


@lru_cache(maxsize=None)
def affine_points(m: int, q: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.product(range(q), repeat=m))


def count_common_zeros(polys, m: int, q: int) -> int:
    """Number of projective points where every polynomial vanishes."""
    field = make_field(q)
    polys = list(polys)
    for f in polys:
        if f.m != m:
            raise AmbientMismatch(f"polynomial in ambient x0..x{f.m}, expected x0..x{m}")
    pts = projective_points(m, q)
    if not polys:
        return len(pts)
    mons = sorted({mon for f in polys for mon, _ in f.terms}, reverse=True)
    coeff = np.zeros((len(polys), len(mons)), dtype=np.uint8)
    where = {mon: t for t, mon in enumerate(mons)}
    for i, f in enumerate(polys):
        for mon, c in f.terms:
            coeff[i, where[mon]] = c
    values = linalg.matmul(field, coeff, linalg.eval_matrix(field, mons, pts))
    return int((values == 0).all(axis=0).sum())


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: tuple
    enumerated: int
    violations: tuple = ()


def _row_poly(m: int, deg: int, basis, row) -> HomogeneousPolynomial:
    return make_poly(m, deg, {basis[t]: int(c) for t, c in enumerate(row) if c})


def brute_force_max_points(r: int, d: int, m: int, q: int, *, mode: str = "reduced",
                           budget: int | None = None, workers: int = 1,
                           footprint_check: bool = False) -> SearchResult:
    """Maximum number of projective zeros over every r-dimensional space
    of degree-d forms spanned by the chosen monomial basis.

    mode "reduced" spans the projectively reduced monomials (every
    evaluation class once); mode "all" spans all degree-d monomials.  With
    footprint_check each visited subspace is checked against the stable
    footprint size of its leading monomials; offenders land in
    .violations (always empty if the footprint bound is sound).
    """
    if mode not in ("reduced", "all"):
        raise ValueError(f"mode {mode!r}")
    field = make_field(q)
    basis = (monomials.reduced_monomials(m, q, d) if mode == "reduced"
             else monomials.all_monomials(m, d))
    k = len(basis)
    if not 1 <= r <= k:
        raise IndexOutOfRange(f"r = {r} outside 1..{k}")
    pts = projective_points(m, q)
    total = formulas.gaussian_binomial(k, r, q)
    runtime.charge_budget(total * len(pts), budget, "projective subspace scan")
    bounds = None
    if footprint_check:
        if mode != "reduced":
            raise ValueError("footprint bound check requires reduced mode")
        estar = monomials.stable_degree(d, m, q)
        bounds = [len(monomials.footprint([basis[p] for p in combo], estar, q, m))
                  for combo in linalg.pivot_patterns(k, r)]
    mat = linalg.eval_matrix(field, basis, pts)
    value, rref, enumerated, raw = linalg.scan_max_zero_columns(q, mat, r, workers, bounds)
    assert enumerated == total
    combos = linalg.pivot_patterns(k, r)
    violations = tuple(
        (tuple(monomials.format_monomial(basis[p]) for p in combos[ci]), gidx, count, limit)
        for ci, gidx, count, limit in raw)
    witness = tuple(_row_poly(m, d, basis, row) for row in rref)
    return SearchResult(value=value, witness=witness, enumerated=enumerated,
                        violations=violations)


def brute_force_affine_max_points(r: int, d: int, m: int, q: int, *,
                                  budget: int | None = None,
                                  workers: int = 1) -> SearchResult:
    """Maximum number of common zeros in F_q^m over every r-dimensional
    space of reduced polynomials of degree at most d."""
    field = make_field(q)
    basis = formulas.bounded_tuples(m, q - 1, d, "at_most")
    k = len(basis)
    if not 1 <= r <= k:
        raise IndexOutOfRange(f"r = {r} outside 1..{k}")
    pts = affine_points(m, q)
    total = formulas.gaussian_binomial(k, r, q)
    runtime.charge_budget(total * len(pts), budget, "affine subspace scan")
    mat = linalg.eval_matrix(field, basis, pts)
    value, rref, enumerated, _ = linalg.scan_max_zero_columns(q, mat, r, workers)
    assert enumerated == total
    witness = tuple(make_affine_poly(m, {basis[t]: int(c) for t, c in enumerate(row) if c})
                    for row in rref)
    return SearchResult(value=value, witness=witness, enumerated=enumerated)


def brute_force_max_footprint(r: int, d: int, m: int, q: int, e: int, *,
                              budget: int | None = None) -> SearchResult:
    """Largest degree-e footprint over every r-subset of the reduced
    degree-d monomials."""
    pool = monomials.reduced_monomials(m, q, d)
    k = len(pool)
    if not 1 <= r <= k:
        raise IndexOutOfRange(f"r = {r} outside 1..{k}")
    target = monomials.reduced_monomials(m, q, e)
    total = math.comb(k, r)
    runtime.charge_budget(total * len(target), budget, "footprint subset scan")
    best, best_set = -1, None
    for combo in itertools.combinations(range(k), r):
        chosen = [pool[i] for i in combo]
        size = sum(1 for mu in target if not any(monomials.divides(nu, mu) for nu in chosen))
        if size > best:
            best, best_set = size, tuple(chosen)
    return SearchResult(value=best, witness=best_set, enumerated=total)


@dataclass(frozen=True)
class WitnessResult:
    value: int
    predicted: int
    polys: tuple[HomogeneousPolynomial, ...]
    method: str  # "construction" or "search"


def _mul_linear(field: FieldSpec, g: dict, t: int, c_s: int) -> dict:
    """Multiply the affine coefficient map g by (x_t - c_s)."""
    out: dict = {}
    minus = field.neg(c_s)
    for mon, c in g.items():
        up = mon[:t] + (mon[t] + 1,) + mon[t + 1:]
        out[up] = field.add(out.get(up, 0), c)
        if minus:
            out[mon] = field.add(out.get(mon, 0), field.mul(c, minus))
    return {mon: c for mon, c in out.items() if c}


def _independent(field: FieldSpec, polys, m: int) -> bool:
    mons = sorted({mon for f in polys for mon, _ in f.terms}, reverse=True)
    coeff = np.zeros((len(polys), len(mons)), dtype=np.uint8)
    where = {mon: t for t, mon in enumerate(mons)}
    for i, f in enumerate(polys):
        for mon, c in f.terms:
            coeff[i, where[mon]] = c
    return linalg.rank(field, coeff) == len(polys)


def construct_witness(r: int, d: int, m: int, q: int, *,
                      budget: int | None = None) -> WitnessResult:
    """A rank-r family of degree-d forms attaining the predicted maximum.

    For the block part the family takes every degree-d monomial in
    x_0..x_{m-a+1} divisible by x_{m-a+1}, a = 1..i; the remaining j
    members are products of distinct linear factors in the first m-i
    variables (one product per leading exponent tuple), homogenized with
    x_{m-i}.  The result is validated by counting; if validation fails an
    exhaustive fallback looks for any subspace attaining the prediction
    and WitnessInvalid is raised when none exists.
    """
    field = make_field(q)
    if not 1 <= d <= q:
        raise OutOfRange(f"d = {d} outside 1..{q}")
    i, j = formulas.rank_split(r, d, m)
    predicted, _ = formulas.conjectured_max_points(r, d, m, q)
    polys = []
    for a in range(1, i + 1):
        v = m - a + 1
        for tail in monomials.all_monomials(v, d - 1):
            mon = list(tail) + [0] * (a - 1)
            mon[v] += 1
            polys.append(monomial_poly(m, tuple(mon)))
    if j:
        nv = m - i
        for beta in formulas.bounded_tuples(nv, q - 1, d - 1, "at_most")[:j]:
            g = {(0,) * nv: 1}
            for t, bt in enumerate(beta):
                for s in range(bt):
                    g = _mul_linear(field, g, t, s)
            coeffs = {mon + (d - sum(mon),) + (0,) * (m - nv): c for mon, c in g.items()}
            polys.append(make_poly(m, d, coeffs))
    counted = count_common_zeros(polys, m, q)
    if counted == predicted and _independent(field, polys, m):
        return WitnessResult(value=counted, predicted=predicted,
                             polys=tuple(polys), method="construction")
    found = _search_for_value(r, d, m, q, predicted, budget)
    if found is None:
        raise WitnessInvalid(
            f"no rank-{r} family of degree-{d} forms on P^{m}(F_{q}) attains {predicted} zeros")
    return WitnessResult(value=predicted, predicted=predicted, polys=found, method="search")


def _search_for_value(r, d, m, q, target, budget):
    field = make_field(q)
    basis = monomials.reduced_monomials(m, q, d)
    k = len(basis)
    if r > k:
        return None
    pts = projective_points(m, q)
    runtime.charge_budget(formulas.gaussian_binomial(k, r, q) * len(pts), budget,
                          "witness fallback scan")
    mat = linalg.eval_matrix(field, basis, pts)
    for pivots in linalg.pivot_patterns(k, r):
        for _, block in linalg.rref_batches(q, k, pivots):
            counts = linalg.zero_column_counts(field, block, mat)
            hits = np.nonzero(counts == target)[0]
            if hits.size:
                row_block = block[int(hits[0])]
                return tuple(_row_poly(m, d, basis, row) for row in row_block)
    return None
