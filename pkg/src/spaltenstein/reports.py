"""Combinatorial geometry reports: Betti numbers, components, cell poset.

Everything here is tableau combinatorics; the quotient algebra is not
touched.  Betti numbers count column-strict tableaux by degree, the
irreducible components are indexed by semi-standard tableaux with their
fibers collected from the straightening map, and the cell order is
exported as a Hasse diagram.
"""

from dataclasses import dataclass

from .presentation import HilbertSeries
from .tableaux import (
    cell_order,
    dims,
    enumerate_column_strict,
    enumerate_semistandard,
    straighten,
    tableau_degree,
)


def betti(lam, mu):
    """Betti series: coefficient at degree 2r counts degree-r tableaux."""
    degrees = [tableau_degree(T, mu) for T in enumerate_column_strict(lam, mu)]
    if not degrees:
        return HilbertSeries(())
    coeffs = [0] * (max(degrees) + 1)
    for t in degrees:
        coeffs[t] += 1
    return HilbertSeries(coeffs)


def euler_characteristic(lam, mu):
    return betti(lam, mu).evaluate(1)


def components(lam, mu):
    """One (S, dimension, fiber) triple per semi-standard tableau.

    The fibers partition the column-strict tableaux and S is their unique
    maximal element in the cell order; all components share the dimension
    d_lam - d_mu.
    """
    d_lam, d_mu = dims(lam, mu)
    cols = enumerate_column_strict(lam, mu)
    fibers = {}
    for T in cols:
        fibers.setdefault(straighten(T, mu), []).append(T)
    out = []
    for S in enumerate_semistandard(lam, mu):
        out.append((S, d_lam - d_mu, fibers.pop(S)))
    if fibers:
        stray = next(iter(fibers))
        raise ValueError(f"straightening produced a non-semistandard image {stray}")
    return out


def poset_edges(lam, mu):
    """Hasse diagram edges (covers) of the cell order, in enumeration order."""
    cols = enumerate_column_strict(lam, mu)
    less = {T: set() for T in cols}
    for i, T in enumerate(cols):
        for U in cols[i + 1 :]:
            rel = cell_order(T, U, mu)
            if rel == "less":
                less[T].add(U)
            elif rel == "greater":
                less[U].add(T)
    edges = []
    for T in cols:
        for U in sorted(less[T], key=lambda V: V.reading_word()):
            if not any(U in less[W] for W in less[T] if W != U):
                edges.append((T, U))
    return edges


def poset_dot(lam, mu):
    """DOT text for the Hasse diagram, node labels the column reading words."""
    cols = enumerate_column_strict(lam, mu)
    edges = poset_edges(lam, mu)

    def label(T):
        return ",".join(str(v) for v in T.reading_word())

    lines = ["digraph cells {"]
    for T in cols:
        lines.append(f'  "{label(T)}";')
    for T, U in edges:
        lines.append(f'  "{label(T)}" -> "{label(U)}";')
    lines.append("}")
    return "\n".join(lines)


@dataclass(frozen=True)
class PavingReport:
    lam: object
    mu: object
    tableaux: tuple  # of (Tableau, degree)
    betti: HilbertSeries
    edges: tuple
    components: tuple  # of (Tableau, dimension, fiber tuple)

    def to_json(self):
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "tableaux": [
                {"tableau": T.to_json(), "degree": 2 * t} for T, t in self.tableaux
            ],
            "betti": self.betti.to_json(),
            "edges": [[T.to_json(), U.to_json()] for T, U in self.edges],
            "components": [
                {
                    "tableau": S.to_json(),
                    "dimension": dim,
                    "fiber": [T.to_json() for T in fiber],
                }
                for S, dim, fiber in self.components
            ],
        }


def paving_report(lam, mu):
    cols = enumerate_column_strict(lam, mu)
    tabs = tuple((T, tableau_degree(T, mu)) for T in cols)
    return PavingReport(
        lam,
        mu,
        tabs,
        betti(lam, mu),
        tuple(poset_edges(lam, mu)),
        tuple((S, dim, tuple(fiber)) for S, dim, fiber in components(lam, mu)),
    )
