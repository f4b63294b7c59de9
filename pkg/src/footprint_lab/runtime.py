"""Budgeting and worker-pool plumbing for the exhaustive searches.

The budget is an upper bound on (subspaces or subsets examined) x (points
or monomials touched per examination).  Runs whose estimate exceeds it are
refused up front with BudgetExceeded rather than started.
"""

from __future__ import annotations

import multiprocessing
import os

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**8
BUDGET_ENV_VAR = "FOOTPRINT_LAB_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or raw == "":
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {raw!r}")
    return value


def charge_budget(estimated: int, budget: int | None, what: str) -> None:
    limit = default_budget() if budget is None else budget
    if estimated > limit:
        raise BudgetExceeded(
            f"{what}: estimated cost {estimated} exceeds budget {limit}",
            estimated=estimated, budget=limit)


def split_chunks(items: list, workers: int) -> list[list]:
    """Near-equal contiguous slices, one per worker, empties dropped."""
    workers = max(1, workers)
    n = len(items)
    bounds = [n * w // workers for w in range(workers + 1)]
    return [items[bounds[w]:bounds[w + 1]] for w in range(workers) if bounds[w] < bounds[w + 1]]


def run_chunks(fn, chunk_args: list, workers: int) -> list:
    """Apply fn to each args tuple, in-process or via a fork pool.

    Results come back in submission order, so any merge that respects the
    canonical enumeration index is independent of the worker count.
    """
    if workers <= 1 or len(chunk_args) <= 1:
        return [fn(args) for args in chunk_args]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=min(workers, len(chunk_args))) as pool:
        return pool.map(fn, chunk_args)
