"""Graded quotient presentations and the tableau basis.

For a pair (lam, mu) with |lam| = |mu| = d, the quotient is the algebra
of S_mu-invariant polynomials modulo the ideal generated by one of two
truncated families of block symmetric functions:

  H family:  h_r(mu; i_1..i_m)  for  r > lam_1+...+lam_m - mu_{i_1}-...-mu_{i_m}
  E family:  e_r(mu; i_1..i_m)  for  r > mu_{i_1}+...+mu_{i_m} - lam_{l+1}-...-lam_n,
             l the number of non-zero parts of mu outside the index set.

Both families contain every full symmetric function of positive degree
(the bound for the full index set is zero), so the quotient is computed
inside the coinvariant algebra: the ideal grows degree by degree through
multiplication by single variables, and the quotient dimension in each
degree is read off by inserting a basis of the invariants into the ideal
row space.  Degrees above twice (d_lam - d_mu) are verified to vanish on
a window wide enough to force vanishing in all higher degrees, instead
of being assumed.

All computations are exact.  The x-degree of a polynomial is half its
grading degree; public interfaces use the grading degree throughout.
"""

from dataclasses import dataclass
from fractions import Fraction

from .coinvariant import get_ring, invariant_rows
from .linalg import RowSpace, kernel_basis, transpose_rows
from .symring import (
    BlockStructure,
    Polynomial,
    complete_block,
    elementary_block,
    is_invariant,
)
from .tableaux import (
    Composition,
    Partition,
    _reduce_raw,
    dims,
    enumerate_column_strict,
    reduce_tableau,
    tableau_degree,
)


class VerificationError(Exception):
    """A mathematical consistency check failed; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class TruncationError(VerificationError):
    pass


class BasisError(VerificationError):
    pass


class TransferError(VerificationError):
    pass


class HilbertSeries:
    """Graded dimensions supported in even degrees, exact integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(int(c) for c in coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if any(c < 0 for c in coeffs):
            raise ValueError("negative coefficient in a Hilbert series")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("HilbertSeries is immutable")

    def coefficient(self, degree):
        if degree < 0 or degree % 2:
            return 0
        k = degree // 2
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def evaluate(self, q=1):
        return sum(c * q ** (2 * k) for k, c in enumerate(self.coeffs))

    def total(self):
        return sum(self.coeffs)

    def top_degree(self):
        return 2 * (len(self.coeffs) - 1) if self.coeffs else -1

    def __eq__(self, other):
        return isinstance(other, HilbertSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"HilbertSeries({list(self.coeffs)})"

    def to_json(self):
        return list(self.coeffs)


def _validate_pair(lam, mu):
    if not isinstance(lam, Partition) or not isinstance(mu, Composition):
        raise TypeError("expected (Partition, Composition)")
    n = len(mu)
    if lam.height() > n:
        raise ValueError(f"{lam} has more than {n} parts")
    if lam.size() != mu.size():
        raise ValueError(f"|lam|={lam.size()} and |mu|={mu.size()} differ")
    return n, mu.size()


def _subsets(n):
    out = []
    for mask in range(1, 1 << n):
        out.append(tuple(i + 1 for i in range(n) if mask >> i & 1))
    out.sort(key=lambda s: (len(s), s))
    return out


def generator_bound(lam, mu, family, subset):
    """Strict lower bound on r for the (subset, r) members of the family."""
    m = len(subset)
    if family == "H":
        return sum(lam.part(i) for i in range(1, m + 1)) - sum(
            mu.part(i) for i in subset
        )
    if family == "E":
        outside = sum(1 for i in range(1, len(mu) + 1) if mu.part(i) > 0 and i not in subset)
        return sum(mu.part(i) for i in subset) - sum(
            lam.part(i) for i in range(outside + 1, len(mu) + 1)
        )
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class GeneratorFamily:
    family: str
    lam: Partition
    mu: Composition
    max_degree: int
    entries: tuple  # of (subset, r, Polynomial)

    def to_json(self):
        return {
            "family": self.family,
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "max_degree": self.max_degree,
            "entries": [
                {"subset": list(s), "r": r, "poly": p.to_json()}
                for s, r, p in self.entries
            ],
        }


def generators(lam, mu, family="H", max_degree=None):
    """All family members of grading degree at most max_degree.

    Entries are ordered by subset size, then subset, then r.  max_degree
    defaults to 2*(d_lam - d_mu) + 2.
    """
    n, _ = _validate_pair(lam, mu)
    if max_degree is None:
        d_lam, d_mu = dims(lam, mu)
        max_degree = max(2 * (d_lam - d_mu) + 2, 0)
    builder = complete_block if family == "H" else elementary_block
    if family not in ("H", "E"):
        raise ValueError(f"unknown family {family!r}")
    entries = []
    for subset in _subsets(n):
        bound = generator_bound(lam, mu, family, subset)
        for r in range(max(0, bound + 1), max_degree // 2 + 1):
            entries.append((subset, r, builder(mu, subset, r)))
    return GeneratorFamily(family, lam, mu, max_degree, tuple(entries))


def _generator_items(lam, mu, family, max_xdeg):
    items = []
    for subset in _subsets(len(mu)):
        bound = generator_bound(lam, mu, family, subset)
        for r in range(max(0, bound + 1), max_xdeg + 1):
            items.append((subset, r))
    return items


_INV_CACHE = {}


def _invariant_data(ring, mu, t):
    # the invariant subspace depends on mu only through the generated
    # subgroup, so key the cache by the transposition set
    transpositions = tuple(BlockStructure(mu).transpositions())
    key = (ring.d, transpositions, t)
    rows = _INV_CACHE.get(key)
    if rows is None:
        rows = invariant_rows(ring, transpositions, t)
        _INV_CACHE[key] = rows
    return rows


class GradedQuotient:
    """Per-degree presentation data for one (lam, mu, family) triple.

    Holds, for each x-degree t up to the verified stopping degree, the
    ideal row space inside the coinvariant algebra and the quotient
    dimension.  Quotient dimensions above the stopping degree are zero;
    this is forced by the verified vanishing window, not assumed.
    """

    def __init__(self, lam, mu, family):
        self.lam = lam
        self.mu = mu
        self.family = family
        self.n, self.d = _validate_pair(lam, mu)
        self.d_lambda, self.d_mu = dims(lam, mu)
        self.top_x = self.d_lambda - self.d_mu
        self.max_degree = max(2 * self.top_x + 2, 0)
        self.ring = get_ring(self.d)
        self.blocks = BlockStructure(mu)
        self._ideal = {}
        self._qdim = {}
        self.stop_x = 0
        self._build()
        coeffs = [self._qdim.get(t, 0) for t in range(max(self.top_x, -1) + 1)]
        self.hilbert = HilbertSeries(coeffs)

    def _build(self):
        ring = self.ring
        max_alg = max([p for p in self.mu.parts if p > 0], default=1)
        first_above = max(0, self.top_x + 1)
        self.stop_x = min(ring.top, first_above + max_alg - 1)
        gen_items = _generator_items(self.lam, self.mu, self.family, self.stop_x)
        gens_by_deg = {}
        for subset, r in gen_items:
            vars_ = self.blocks.union(subset)
            gens_by_deg.setdefault(r, []).append(vars_)
        kind = "h" if self.family == "H" else "e"
        for t in range(self.stop_x + 1):
            space = RowSpace(ring.dim(t))
            full = ring.dim(t)
            for vars_ in gens_by_deg.get(t, ()):
                space.insert(ring.sym_class(vars_, t, kind))
            if t:
                prev = self._ideal[t - 1].basis()
                for v in range(1, self.d + 1):
                    if space.rank == full:
                        break
                    for row in prev:
                        space.insert(ring.apply_var(row, v, t - 1))
                        if space.rank == full:
                            break
            self._ideal[t] = space
            inv = _invariant_data(ring, self.mu, t)
            probe = space.copy()
            self._qdim[t] = sum(1 for row in inv if probe.insert(list(row)))
        for t in range(first_above, self.stop_x + 1):
            if self._qdim.get(t, 0):
                raise TruncationError(
                    "quotient does not vanish above its top degree",
                    witness={
                        "lambda": self.lam.to_json(),
                        "mu": self.mu.to_json(),
                        "degree": 2 * t,
                        "dimension": self._qdim[t],
                    },
                )

    def ideal_space(self, t):
        """Ideal row space at x-degree t; above the stop degree the quotient
        vanishes, so membership of invariant classes is automatic."""
        return self._ideal.get(t)

    def invariant_basis_rows(self, t):
        return _invariant_data(self.ring, self.mu, t)

    def dimension(self, degree):
        if degree < 0 or degree % 2:
            return 0
        t = degree // 2
        if t in self._qdim:
            return self._qdim[t]
        return 0

    def total_dimension(self):
        return sum(self._qdim.get(t, 0) for t in range(max(self.top_x, -1) + 1))

    def is_trivial(self):
        return self.total_dimension() == 0

    def contains_class(self, vec, t):
        """Membership of a degree-2t class in the ideal."""
        if t > self.ring.top:
            return True
        space = self._ideal.get(t)
        if space is None:
            # beyond the verified window every invariant class is in the ideal
            return True
        return space.contains(list(vec))

    def to_json(self):
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "family": self.family,
            "hilbert": self.hilbert.to_json(),
            "top_degree": 2 * self.top_x,
            "total_dimension": self.total_dimension(),
        }


def build_quotient(lam, mu, family="H"):
    return GradedQuotient(lam, mu, family)


def h_of_tableau(T, mu):
    """The basis element attached to a column-strict tableau, as an honest
    polynomial: the product over the reduction chain of the complete
    symmetric functions h_{gamma_i} of the current last block."""
    n = len(mu)
    d = mu.size()
    out = Polynomial.one(d)
    current, current_mu = T, mu
    for level in range(n, 0, -1):
        gamma, current, _, next_mu = reduce_tableau(current, current_mu)
        base = current_mu.size() - current_mu.part(level)
        vars_ = tuple(range(base + 1, current_mu.size() + 1))
        for part in gamma.parts:
            out = out * _h_in_vars(d, vars_, part)
        current_mu = next_mu
    return out


def _h_in_vars(d, vars_, r):
    from .symring import _sym_from_vars

    return _sym_from_vars(d, vars_, r, elementary=False)


def _h_class_chain(ring, T, mu, memo):
    """Class of h_of_tableau(T, mu) in the coinvariant algebra, with the
    reduction chain memoised per (tableau, content)."""
    key = (T.rows, mu.parts)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(mu) == 0:
        result = (ring.unit(), 0)
        memo[key] = result
        return result
    gamma, Tbar, _, mubar = _reduce_raw(T, mu)
    vec, t = _h_class_chain(ring, Tbar, mubar, memo)
    if gamma.parts:
        base = mu.size() - mu.part(len(mu))
        vars_ = tuple(range(base + 1, mu.size() + 1))
        for part in gamma.parts:
            vec, t = ring.mul_block_h(vec, t, vars_, part)
    memo[key] = (vec, t)
    return vec, t


class BasisCertificate:
    """A certified tableau basis with exact coordinate data.

    tableaux are listed in reading-word order; for each x-degree the
    augmented row space stores the ideal rows together with the tagged
    basis classes, which turns coordinate extraction into row reduction.
    """

    def __init__(self, quotient, tableaux, degrees, classes, coordinate_spaces):
        self.quotient = quotient
        self.tableaux = tableaux
        self.degrees = degrees
        self.classes = classes
        self._spaces = coordinate_spaces
        self._by_degree = {}
        for idx, t in enumerate(degrees):
            self._by_degree.setdefault(t, []).append(idx)

    @property
    def lam(self):
        return self.quotient.lam

    @property
    def mu(self):
        return self.quotient.mu

    def size(self):
        return len(self.tableaux)

    def coordinates_of_class(self, vec, t):
        """Coordinates of a degree-2t invariant class in the basis."""
        data = self._spaces.get(t)
        if data is None:
            if self.quotient.contains_class(vec, t):
                return {}
            raise BasisError(
                "class outside the certified span",
                witness={"degree": 2 * t},
            )
        space, indices = data
        width = space.width - len(indices)
        row = list(vec) + [0] * len(indices)
        res = space.residual_fraction(row)
        if any(res[:width]):
            raise BasisError(
                "class outside the certified span",
                witness={"degree": 2 * t, "residual": [str(v) for v in res[:width]]},
            )
        return {
            idx: -res[width + pos]
            for pos, idx in enumerate(indices)
            if res[width + pos]
        }

    def to_json(self):
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "family": self.quotient.family,
            "hilbert": self.quotient.hilbert.to_json(),
            "basis": [T.to_json() for T in self.tableaux],
            "degrees": [2 * t for t in self.degrees],
            "certified": True,
        }


def certify_basis(lam, mu, family="H", quotient=None):
    """Check that the tableau classes are a basis of the quotient.

    Verifies both counting (the number of tableaux of each degree equals
    the quotient dimension) and linear independence modulo the ideal.
    Failure raises BasisError with a witness; success returns a
    BasisCertificate.
    """
    if quotient is None:
        quotient = build_quotient(lam, mu, family)
    ring = quotient.ring
    tableaux = enumerate_column_strict(lam, mu)
    memo = {}
    degrees = []
    classes = []
    for T in tableaux:
        vec, t = _h_class_chain(ring, T, mu, memo)
        expected = tableau_degree(T, mu)
        if t != expected:
            raise BasisError(
                "basis element degree mismatch",
                witness={"tableau": T.to_json(), "degree": 2 * t, "expected": 2 * expected},
            )
        degrees.append(t)
        classes.append(vec)
    by_degree = {}
    for idx, t in enumerate(degrees):
        by_degree.setdefault(t, []).append(idx)
    for t in range(max(quotient.top_x, -1) + 1):
        count = len(by_degree.get(t, []))
        if count != quotient.dimension(2 * t):
            raise BasisError(
                "tableau count does not match quotient dimension",
                witness={
                    "lambda": lam.to_json(),
                    "mu": mu.to_json(),
                    "degree": 2 * t,
                    "tableaux": count,
                    "dimension": quotient.dimension(2 * t),
                },
            )
    spaces = {}
    for t, indices in sorted(by_degree.items()):
        ideal = quotient.ideal_space(t)
        width = ring.dim(t)
        tags = len(indices)
        space = RowSpace(width + tags)
        if ideal is not None:
            for row in ideal.basis():
                space.insert(list(row) + [0] * tags)
        ideal_rank = space.rank
        for pos, idx in enumerate(indices):
            row = list(classes[idx]) + [0] * tags
            row[width + pos] = 1
            space.insert(row)
        # a tagged row always enters the space (its tag column is fresh), so a
        # dependence modulo the ideal shows up as a pivot in the tag region
        vec_pivots = sum(1 for c in space.pivot_rows if c < width)
        if vec_pivots != ideal_rank + tags:
            witness = _dependency_witness(quotient, ring, t, indices, classes, tableaux)
            raise BasisError(
                "tableau classes are dependent modulo the ideal",
                witness=witness,
            )
        spaces[t] = (space, indices)
    return BasisCertificate(quotient, tableaux, degrees, classes, spaces)


def _dependency_witness(quotient, ring, t, indices, classes, tableaux):
    ideal = quotient.ideal_space(t)
    space = ideal.copy() if ideal else RowSpace(ring.dim(t))
    residuals = [space.residual_fraction(list(classes[idx])) for idx in indices]
    combos = kernel_basis(transpose_rows(residuals, ring.dim(t)), len(indices))
    combo = combos[0] if combos else []
    return {
        "degree": 2 * t,
        "combination": {
            str(tableaux[idx].to_json()): int(c)
            for idx, c in zip(indices, combo)
            if c
        },
    }


def normal_form(p, certificate):
    """Coordinates of an invariant polynomial in the certified basis.

    The polynomial must be S_mu-invariant; the result maps each tableau
    to an exact rational coefficient, omitting zeros.
    """
    mu = certificate.mu
    if p.d != mu.size():
        raise ValueError(f"polynomial has {p.d} variables, expected {mu.size()}")
    if not is_invariant(mu, p):
        raise ValueError("polynomial is not invariant under the block subgroup")
    ring = certificate.quotient.ring
    coords = {}
    for component in ring.class_of_polynomial(p).items():
        t, vec = component
        for idx, c in certificate.coordinates_of_class(vec, t).items():
            coords[certificate.tableaux[idx]] = coords.get(certificate.tableaux[idx], 0) + c
    return {T: c for T, c in coords.items() if c}


def structure_constants(lam, mu, family="H", certificate=None):
    """Multiplication tensor of the certified basis.

    Returns (tableaux, tensor) with tensor[(i, j)][k] the coefficient of
    basis element k in the product of elements i and j, as exact
    rationals.  The tensor is symmetric in (i, j).
    """
    if certificate is None:
        certificate = certify_basis(lam, mu, family)
    ring = certificate.quotient.ring
    tabs = certificate.tableaux
    tensor = {}
    for i in range(len(tabs)):
        vi, ti = certificate.classes[i], certificate.degrees[i]
        for j in range(i, len(tabs)):
            vj, tj = certificate.classes[j], certificate.degrees[j]
            t = ti + tj
            if t > certificate.quotient.top_x:
                entry = {}
                if not certificate.quotient.contains_class(
                    ring.mul_classes(vi, ti, vj, tj), t
                ):
                    raise BasisError(
                        "product escapes the ideal above top degree",
                        witness={"i": i, "j": j, "degree": 2 * t},
                    )
            else:
                product = ring.mul_classes(vi, ti, vj, tj)
                entry = certificate.coordinates_of_class(product, t)
            tensor[(i, j)] = entry
            tensor[(j, i)] = entry
    return tabs, tensor


def rel_equivalence(lam, mu, qh=None, qe=None):
    """Whether the H and E families cut out the same ideal degreewise.

    Compares the coinvariant-level ideals through the verified window:
    equal ranks in every degree plus membership of every generator of
    each family in the other family's ideal.
    """
    if qh is None:
        qh = build_quotient(lam, mu, "H")
    if qe is None:
        qe = build_quotient(lam, mu, "E")
    if qh.hilbert != qe.hilbert:
        return False
    ring = qh.ring
    for t in range(min(qh.stop_x, qe.stop_x) + 1):
        if qh.ideal_space(t).rank != qe.ideal_space(t).rank:
            return False
    for source, target, kind in ((qh, qe, "h"), (qe, qh, "e")):
        for subset, r in _generator_items(lam, mu, source.family, source.stop_x):
            vars_ = source.blocks.union(subset)
            vec = ring.sym_class(vars_, r, kind)
            if any(vec) and not target.contains_class(vec, r):
                return False
    return True


def tanisaki_generators(lam, d, max_degree):
    """The classical single-variable-block generator set for the regular
    case: e_r of each subset of the variables, r strictly above the subset
    size minus the tail sum of lam padded to d parts."""
    padded = lam.padded(d)
    mu = Composition((1,) * d)
    entries = []
    for subset in _subsets(d):
        m = len(subset)
        bound = m - sum(padded[d - m :])
        for r in range(max(0, bound + 1), max_degree // 2 + 1):
            entries.append((subset, r, elementary_block(mu, subset, r)))
    return entries


_REGULAR_CACHE = {}


def regular_quotient(lam, d):
    """Quotient for the regular composition (1, ..., 1), cached per (d, lam)."""
    key = (d, lam.parts)
    q = _REGULAR_CACHE.get(key)
    if q is None:
        q = build_quotient(lam, Composition((1,) * d), "H")
        _REGULAR_CACHE[key] = q
    return q


@dataclass(frozen=True)
class TransferReport:
    lam: Partition
    mu: Composition
    shift: int
    degrees: tuple
    anti_dims: tuple
    quotient_dims: tuple

    def to_json(self):
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "shift": self.shift,
            "degrees": list(self.degrees),
            "anti_dims": list(self.anti_dims),
            "quotient_dims": list(self.quotient_dims),
            "certified": True,
        }


def anti_invariant_transfer(lam, mu, quotient=None):
    """Verify the algebraic shadow of the push-forward isomorphism.

    (a) well-definedness: an invariant class v has v * eps in the regular
        ideal exactly when v lies in the block ideal, degree by degree;
    (b) the anti-invariants of the regular quotient match the block
        quotient dimensions after the degree shift by twice d_mu.

    Any failure raises TransferError with the offending degree.
    """
    n, d = _validate_pair(lam, mu)
    if quotient is None:
        quotient = build_quotient(lam, mu, "H")
    ring = quotient.ring
    d_mu = quotient.d_mu
    reg = regular_quotient(lam, d)
    blocks = BlockStructure(mu)
    pairs = []
    for j in range(1, n + 1):
        blk = blocks.block(j)
        pairs.extend(
            (blk[a], blk[b]) for a in range(len(blk)) for b in range(a + 1, len(blk))
        )
    eps_vec, eps_deg = ring.antisymmetrizer_class(pairs)
    if eps_deg != d_mu:
        raise TransferError("antisymmetrizer degree mismatch", witness={"degree": eps_deg})

    top = max(quotient.top_x, -1)
    reg_reach = reg.stop_x - d_mu
    degrees = []
    anti_dims = []
    quotient_dims = []
    transpositions = blocks.transpositions()
    for t in range(0, max(top, reg_reach) + 1):
        e = t + d_mu
        # (b) anti-invariant dimension of the regular quotient in degree 2e
        a_dim = _anti_invariant_dim(ring, reg, transpositions, e)
        q_dim = quotient.dimension(2 * t)
        degrees.append(2 * t)
        anti_dims.append(a_dim)
        quotient_dims.append(q_dim)
        if a_dim != q_dim:
            raise TransferError(
                "anti-invariant dimension mismatch",
                witness={
                    "lambda": lam.to_json(),
                    "mu": mu.to_json(),
                    "degree": 2 * t,
                    "anti_dim": a_dim,
                    "quotient_dim": q_dim,
                },
            )
        # (a) kernel of multiplication by eps equals the block ideal
        if t <= quotient.stop_x:
            if not _transfer_kernel_matches(ring, quotient, reg, eps_vec, d_mu, t):
                raise TransferError(
                    "multiplication by the antisymmetrizer has the wrong kernel",
                    witness={"lambda": lam.to_json(), "mu": mu.to_json(), "degree": 2 * t},
                )
    return TransferReport(
        lam, mu, 2 * d_mu, tuple(degrees), tuple(anti_dims), tuple(quotient_dims)
    )


def _anti_invariant_dim(ring, reg, transpositions, e):
    """Dimension of the sign-isotypic part of the regular quotient in degree 2e.

    A class v is anti-invariant in the quotient when (s + 1)v lies in the
    ideal for every generating transposition s; the residual against the
    ideal is linear in v, so this is one exact kernel computation.
    """
    dim = ring.dim(e)
    if dim == 0:
        return 0
    ideal = reg.ideal_space(e)
    if ideal is None:
        # quotient proven zero in this degree, so no anti-invariants either
        return 0
    if not transpositions:
        return dim - ideal.rank
    columns = []
    for b in range(dim):
        col = []
        for i, _ in transpositions:
            mat = ring.swap_matrix(i, e)
            moved = list(mat[b])
            moved[b] += 1
            col.extend(ideal.residual_fraction(moved))
        columns.append(col)
    kernel = kernel_basis(transpose_rows(columns, len(columns[0])), dim)
    return len(kernel) - ideal.rank


def _transfer_kernel_matches(ring, quotient, reg, eps_vec, d_mu, t):
    inv = quotient.invariant_basis_rows(t)
    if not inv:
        return True
    target = reg.ideal_space(t + d_mu)
    residuals = []
    for row in inv:
        prod = ring.mul_classes(list(row), t, eps_vec, d_mu)
        if target is None:
            residuals.append([Fraction(0)] * max(ring.dim(t + d_mu), 1))
        else:
            residuals.append(target.residual_fraction(prod))
    width = len(residuals[0]) if residuals else 0
    kernel = kernel_basis(transpose_rows(residuals, width), len(inv))
    kernel_space = RowSpace(ring.dim(t))
    for combo in kernel:
        vec = [0] * ring.dim(t)
        for ci, row in zip(combo, inv):
            if ci:
                for pos, val in enumerate(row):
                    vec[pos] += ci * val
        kernel_space.insert(vec)
    ideal_space = quotient.ideal_space(t)
    members = []
    for row in inv:
        res = ideal_space.residual_fraction(list(row)) if ideal_space else list(row)
        members.append(res)
    width2 = len(members[0]) if members else 0
    in_ideal = kernel_basis(transpose_rows(members, width2), len(inv))
    ideal_int_space = RowSpace(ring.dim(t))
    for combo in in_ideal:
        vec = [0] * ring.dim(t)
        for ci, row in zip(combo, inv):
            if ci:
                for pos, val in enumerate(row):
                    vec[pos] += ci * val
        ideal_int_space.insert(vec)
    return kernel_space == ideal_int_space
