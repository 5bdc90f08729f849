import time

import pytest

from spaltenstein.presentation import build_quotient, certify_basis, rel_equivalence
from spaltenstein.reports import components
from spaltenstein.tableaux import (
    Composition,
    Partition,
    cell_order,
    dims,
    dominance_leq,
    enumerate_semistandard,
)


def partitions_with_at_most(d, n):
    def gen(remaining, cap, parts):
        if remaining == 0:
            yield tuple(parts)
            return
        if len(parts) == n:
            return
        for p in range(min(cap, remaining), 0, -1):
            parts.append(p)
            yield from gen(remaining - p, p, parts)
            parts.pop()

    yield from gen(d, d, [])


def compositions_with(d, n):
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(d + 1):
        for rest in compositions_with(d - first, n - 1):
            yield (first,) + rest


def iter_pairs(d_max):
    for d in range(d_max + 1):
        for n in range(0 if d == 0 else 1, d + 1):
            lams = [Partition(p) for p in partitions_with_at_most(d, n)]
            for lam in lams:
                for mu_parts in compositions_with(d, n):
                    yield lam, Composition(mu_parts)


@pytest.fixture(scope="session")
def sweep_d6():
    """One pass over every (lam, mu) with d <= 6, n <= d.

    Collects the exact facts the acceptance criteria quantify over; any
    certification failure aborts the sweep immediately.
    """
    records = []
    timings = {"certify": 0.0, "e_family": 0.0, "rel": 0.0, "fibers": 0.0}
    for lam, mu in iter_pairs(6):
        t0 = time.perf_counter()
        qh = build_quotient(lam, mu, "H")
        cert = certify_basis(lam, mu, quotient=qh)
        t1 = time.perf_counter()
        qe = build_quotient(lam, mu, "E")
        t2 = time.perf_counter()
        equivalent = rel_equivalence(lam, mu, qh=qh, qe=qe)
        t3 = time.perf_counter()
        d_lam, d_mu = dims(lam, mu)
        record = {
            "lam": lam,
            "mu": mu,
            "d": mu.size(),
            "dominated": dominance_leq(mu.sorted(), lam),
            "hilbert": qh.hilbert,
            "hilbert_e": qe.hilbert,
            "cols": cert.size(),
            "degrees": tuple(cert.degrees),
            "top": d_lam - d_mu,
            "vanish_above_top": qh.dimension(2 * (d_lam - d_mu) + 2) == 0
            and qe.dimension(2 * (d_lam - d_mu) + 2) == 0,
            "equivalent": equivalent,
            "std": len(enumerate_semistandard(lam, mu)),
        }
        fibers_ok = True
        if record["dominated"]:
            comps = components(lam, mu)
            total = 0
            for S, dim, fiber in comps:
                total += len(fiber)
                if dim != d_lam - d_mu:
                    fibers_ok = False
                for T in fiber:
                    if T != S and cell_order(T, S, mu) != "less":
                        fibers_ok = False
            if total != record["cols"]:
                fibers_ok = False
        record["fibers_ok"] = fibers_ok
        t4 = time.perf_counter()
        timings["certify"] += t1 - t0
        timings["e_family"] += t2 - t1
        timings["rel"] += t3 - t2
        timings["fibers"] += t4 - t3
        records.append(record)
    return records, timings
