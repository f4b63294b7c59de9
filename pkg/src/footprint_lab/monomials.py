"""Monomial calculus behind the footprint bound.

Monomials are exponent tuples.  Projective monomials in m+1 variables
x_0..x_m are tuples of length m+1; hypercube monomials at level l live in
x_0..x_{l-1} and are tuples of length l, every entry at most q-1 (the
level-0 hypercube is the singleton {()}).  Everywhere "descending lex"
means the pure lexicographic order with x_0 > x_1 > ... read off the
exponent tuples, which coincides with Python's tuple order reversed.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .errors import BadLevel, CountOutOfRange

Monomial = tuple[int, ...]

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def degree(mon: Monomial) -> int:
    return sum(mon)


def divides(nu: Monomial, mu: Monomial) -> bool:
    """nu | mu componentwise; tuples must share a length."""
    if len(nu) != len(mu):
        raise ValueError("monomials live in different ambients")
    return all(a <= b for a, b in zip(nu, mu))


def level(mon: Monomial) -> int:
    """Index of the last variable appearing; 0 for the constant."""
    for j in range(len(mon) - 1, -1, -1):
        if mon[j]:
            return j
    return 0


def sort_desc(mons) -> list[Monomial]:
    """Canonical presentation: descending lexicographic order."""
    return sorted(mons, reverse=True)


def format_monomial(mon: Monomial) -> str:
    parts = []
    for j, a in enumerate(mon):
        if a == 1:
            parts.append(f"x{j}")
        elif a > 1:
            parts.append(f"x{j}^{a}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, m: int) -> Monomial:
    """Inverse of format_monomial for ambient x_0..x_m."""
    text = text.strip()
    exps = [0] * (m + 1)
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR_RE.match(factor.strip())
        if not match:
            raise ValueError(f"bad monomial factor {factor!r}")
        j, a = int(match.group(1)), int(match.group(2) or 1)
        if j > m:
            raise ValueError(f"variable x{j} outside ambient x0..x{m}")
        exps[j] += a
    return tuple(exps)


def reduce_exponent(a: int, q: int) -> int:
    """0 stays 0; otherwise the representative of a in 1..q-1 mod q-1."""
    if a == 0:
        return 0
    return (a - 1) % (q - 1) + 1


def reduce_monomial(mon: Monomial, q: int) -> Monomial:
    """Projective reduction: normalize every exponent before the last
    variable into 0..q-1 and absorb the surplus into the last exponent.
    Preserves degree and the evaluation at every point of F_q^{m+1}."""
    lv = level(mon)
    if mon[lv] == 0:  # the constant
        return tuple(mon)
    head = [reduce_exponent(a, q) for a in mon[:lv]]
    surplus = sum(mon[:lv]) - sum(head)
    return tuple(head) + (mon[lv] + surplus,) + tuple(mon[lv + 1:])


def is_reduced(mon: Monomial, q: int) -> bool:
    lv = level(mon)
    return all(a <= q - 1 for a in mon[:lv])


def _check_level(lv, m) -> None:
    if not 0 <= lv <= m:
        raise BadLevel(f"level {lv} outside 0..{m}")


@lru_cache(maxsize=None)
def reduced_monomials(m: int, q: int, deg: int, lv: int | None = None) -> tuple[Monomial, ...]:
    """Projectively reduced degree-deg monomials in x_0..x_m, descending
    lex; lv restricts to those whose last variable is x_lv."""
    if lv is not None:
        _check_level(lv, m)
    out = []
    levels = range(m + 1) if lv is None else [lv]
    for l in levels:
        if deg == 0:
            if l == 0:
                out.append((0,) * (m + 1))
            continue
        if l == 0:
            out.append((deg,) + (0,) * m)
            continue
        for head in itertools.product(range(q), repeat=l):
            rest = deg - sum(head)
            if rest >= 1:
                out.append(head + (rest,) + (0,) * (m - l))
    return tuple(sort_desc(out))


@lru_cache(maxsize=None)
def all_monomials(m: int, deg: int) -> tuple[Monomial, ...]:
    """Every degree-deg monomial in x_0..x_m, descending lex."""
    def rec(vars_left: int, total: int):
        if vars_left == 1:
            yield (total,)
            return
        for a in range(total, -1, -1):
            for tail in rec(vars_left - 1, total - a):
                yield (a,) + tail
    return tuple(rec(m + 1, deg))


def shadow(mons, deg: int, q: int, m: int, lv: int | None = None) -> list[Monomial]:
    """Degree-deg multiples, within the reduced monomials, of members of mons."""
    mons = list(mons)
    return [mu for mu in reduced_monomials(m, q, deg, lv)
            if any(divides(nu, mu) for nu in mons)]


def footprint(mons, deg: int, q: int, m: int, lv: int | None = None) -> list[Monomial]:
    """Degree-deg reduced monomials not divisible by any member of mons."""
    mons = list(mons)
    return [mu for mu in reduced_monomials(m, q, deg, lv)
            if not any(divides(nu, mu) for nu in mons)]


def restrict_level(mons, lv: int, q: int) -> list[Monomial]:
    """Members supported on x_0..x_lv whose exponents below index lv are < q."""
    out = []
    for mon in mons:
        _check_level(lv, len(mon) - 1)
        if all(a == 0 for a in mon[lv + 1:]) and all(a < q for a in mon[:lv]):
            out.append(mon)
    return sort_desc(out)


def specialize(mons, lv: int) -> list[Monomial]:
    """Image under dropping x_lv; monomials involving x_j, j > lv, are killed."""
    out = set()
    for mon in mons:
        _check_level(lv, len(mon) - 1)
        if all(a == 0 for a in mon[lv + 1:]):
            out.add(mon[:lv])
    return sort_desc(out)


def expand(mons, q: int) -> list[Monomial]:
    """Push x_m exponents onto x_{m-1} where doing so leaves the set's
    divisibility structure intact: mu maps to mu*x_{m-1}/x_m unless the
    fully merged monomial already lies in the set or x_{m-1} would reach
    exponent q.  Injective on any set of monomials of a common degree."""
    mons = set(map(tuple, mons))
    out = []
    for mon in mons:
        if len(mon) < 2:
            raise BadLevel("exponent shifting needs at least two variables")
        merged = mon[:-2] + (mon[-2] + mon[-1], 0)
        if merged not in mons and mon[-2] + 1 < q and mon[-1] >= 1:
            out.append(mon[:-2] + (mon[-2] + 1, mon[-1] - 1))
        else:
            out.append(mon)
    return sort_desc(out)


@lru_cache(maxsize=None)
def hypercube(lv: int, q: int) -> tuple[Monomial, ...]:
    """All monomials in x_0..x_{lv-1} with exponents at most q-1, descending lex."""
    return tuple(sort_desc(itertools.product(range(q), repeat=lv)))


@lru_cache(maxsize=None)
def hypercube_slice(lv: int, q: int, deg: int, mode: str = "exact") -> tuple[Monomial, ...]:
    """Degree slice of the level-lv hypercube: total degree == deg
    ("exact") or <= deg ("at_most"), descending lex."""
    if mode not in ("exact", "at_most"):
        raise ValueError(f"mode {mode!r}")
    keep = (lambda s: s == deg) if mode == "exact" else (lambda s: s <= deg)
    return tuple(mon for mon in hypercube(lv, q) if keep(sum(mon)))


def hypercube_lex_segment(lv: int, q: int, deg: int, count: int, mode: str = "at_most") -> list[Monomial]:
    """First `count` members of the degree slice in descending lex."""
    pool = hypercube_slice(lv, q, deg, mode)
    if not 0 <= count <= len(pool):
        raise CountOutOfRange(f"count {count} outside 0..{len(pool)}")
    return list(pool[:count])


def _degree_keep(degree_filter):
    if degree_filter is None:
        return lambda s: True
    op, d = degree_filter
    table = {"==": lambda s: s == d, "<=": lambda s: s <= d, "<": lambda s: s < d,
             ">=": lambda s: s >= d, ">": lambda s: s > d}
    if op not in table:
        raise ValueError(f"degree filter op {op!r}")
    return table[op]


def hypercube_shadow(mons, lv: int, q: int, degree_filter=None) -> list[Monomial]:
    """Hypercube multiples of members of mons, optionally degree-filtered."""
    mons = list(mons)
    keep = _degree_keep(degree_filter)
    return [mu for mu in hypercube(lv, q)
            if keep(sum(mu)) and any(divides(nu, mu) for nu in mons)]


def hypercube_footprint(mons, lv: int, q: int, degree_filter=None) -> list[Monomial]:
    """Hypercube non-multiples of members of mons, optionally degree-filtered."""
    mons = list(mons)
    keep = _degree_keep(degree_filter)
    return [mu for mu in hypercube(lv, q)
            if keep(sum(mu)) and not any(divides(nu, mu) for nu in mons)]


def lex_segment_reduced(m: int, q: int, deg: int, count: int) -> list[Monomial]:
    """First `count` reduced degree-deg monomials in descending lex."""
    pool = reduced_monomials(m, q, deg)
    if not 0 <= count <= len(pool):
        raise CountOutOfRange(f"count {count} outside 0..{len(pool)}")
    return list(pool[:count])


def stable_degree(d: int, m: int, q: int) -> int:
    """Degree from which footprint sizes of degree-d generated sets stabilize."""
    return d + m * (q - 1)
