"""Sparse exact polynomials in x_1..x_d with block symmetric functions.

Coefficients are arbitrary-precision rationals and every x_i sits in
degree 2.  A polynomial is a map from exponent tuples of length d to
non-zero Fractions, for example ``{(1, 0): Fraction(2)}`` is 2*x_1 in two
variables.  Terms serialise in graded-lex order: increasing total degree,
and within a degree decreasing lexicographic exponent tuple.

The blocks X_j of a composition mu partition the variables into
consecutive runs of lengths mu_1, ..., mu_n, and e_r(mu; S), h_r(mu; S)
are the elementary and complete symmetric functions of the variables in
the union of the blocks indexed by S.  Both are 1 for r = 0 and 0 for
r < 0.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient {c!r} is not rational")


def term_sort_key(exps):
    return (sum(exps), tuple(-e for e in exps))


class Polynomial:
    """Sparse multivariate polynomial over Q, graded with deg(x_i) = 2."""

    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        clean = {}
        for exps, c in (terms or {}).items():
            c = _as_fraction(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != d or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for d={d}")
            clean[exps] = c
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, d):
        return cls(d, {})

    @classmethod
    def one(cls, d):
        return cls(d, {(0,) * d: Fraction(1)})

    @classmethod
    def variable(cls, d, i):
        """x_i, 1-indexed."""
        if not 1 <= i <= d:
            raise ValueError(f"variable index {i} out of range 1..{d}")
        exps = [0] * d
        exps[i - 1] = 1
        return cls(d, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, d, exps, coeff=1):
        return cls(d, {tuple(exps): _as_fraction(coeff)})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.d == other.d
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.d != self.d:
                raise ValueError("polynomials live in different variable counts")
            return other
        return Polynomial(self.d, {(0,) * self.d: _as_fraction(other)})

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Polynomial(self.d, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.d, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _as_fraction(other)
            return Polynomial(self.d, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.d, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def degree(self):
        """Top grading degree (2 per exponent unit); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return 2 * max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_components(self):
        """Map from grading degree to homogeneous part."""
        buckets = {}
        for exps, c in self.terms.items():
            buckets.setdefault(2 * sum(exps), {})[exps] = c
        return {deg: Polynomial(self.d, t) for deg, t in sorted(buckets.items())}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: term_sort_key(item[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            if mono:
                pieces.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                pieces.append(str(c))
        return " + ".join(pieces)

    def to_json(self):
        return [
            {"coeff": f"{c.numerator}/{c.denominator}", "exps": list(exps)}
            for exps, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, d, data):
        terms = {}
        for item in data:
            num, den = item["coeff"].split("/")
            terms[tuple(item["exps"])] = Fraction(int(num), int(den))
        return cls(d, terms)


class BlockStructure:
    """The variable blocks X_j = {x_k : mu_1+...+mu_{j-1} < k <= mu_1+...+mu_j}."""

    __slots__ = ("mu", "d", "_starts")

    def __init__(self, mu):
        starts = [0]
        for p in mu.parts:
            starts.append(starts[-1] + p)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "d", starts[-1])
        object.__setattr__(self, "_starts", tuple(starts))

    def __setattr__(self, name, value):
        raise AttributeError("BlockStructure is immutable")

    def block(self, j):
        """Variable indices (1-indexed) of block j."""
        if not 1 <= j <= len(self.mu):
            raise ValueError(f"block index {j} out of range 1..{len(self.mu)}")
        return tuple(range(self._starts[j - 1] + 1, self._starts[j] + 1))

    def union(self, subset):
        vars_ = []
        for j in sorted(set(subset)):
            vars_.extend(self.block(j))
        return tuple(vars_)

    def transpositions(self):
        """Adjacent transpositions (k, k+1) inside blocks, generating S_mu."""
        pairs = []
        for j in range(1, len(self.mu) + 1):
            blk = self.block(j)
            pairs.extend((blk[t], blk[t + 1]) for t in range(len(blk) - 1))
        return pairs

    def order(self):
        """The order of S_mu."""
        out = 1
        for p in self.mu.parts:
            out *= factorial(p)
        return out


def _sym_from_vars(d, vars_, r, elementary):
    if r < 0:
        return Polynomial.zero(d)
    if r == 0:
        return Polynomial.one(d)
    chooser = combinations if elementary else combinations_with_replacement
    terms = {}
    for chosen in chooser(vars_, r):
        exps = [0] * d
        for v in chosen:
            exps[v - 1] += 1
        terms[tuple(exps)] = Fraction(1)
    return Polynomial(d, terms)


def elementary_block(mu, subset, r):
    """e_r of the variables in the union of the blocks indexed by subset."""
    if not subset:
        raise ValueError("subset of block indices must be non-empty")
    blocks = BlockStructure(mu)
    return _sym_from_vars(blocks.d, blocks.union(subset), r, elementary=True)


def complete_block(mu, subset, r):
    """h_r of the variables in the union of the blocks indexed by subset."""
    if not subset:
        raise ValueError("subset of block indices must be non-empty")
    blocks = BlockStructure(mu)
    return _sym_from_vars(blocks.d, blocks.union(subset), r, elementary=False)


def convolution_identity_check(mu, subset, r):
    """Check the expansion of e_r and h_r over a block union into per-block
    products, summing over all splittings r_1 + ... + r_m = r."""
    subset = sorted(set(subset))
    d = mu.size()
    for builder in (elementary_block, complete_block):
        lhs = builder(mu, subset, r)
        rhs = Polynomial.zero(d)
        for split in _compositions_of(r, len(subset)):
            prod = Polynomial.one(d)
            for j, rj in zip(subset, split):
                prod = prod * builder(mu, [j], rj)
            rhs = rhs + prod
        if lhs != rhs:
            return False
    return True


def _compositions_of(r, m):
    if m == 0:
        if r == 0:
            yield ()
        return
    for first in range(r + 1):
        for rest in _compositions_of(r - first, m - 1):
            yield (first,) + rest


def check_permutation(w, d):
    w = tuple(int(v) for v in w)
    if len(w) != d or sorted(w) != list(range(1, d + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{d}")
    return w


def permute(w, p):
    """The algebra automorphism sending x_i to x_{w(i)}."""
    w = check_permutation(w, p.d)
    terms = {}
    for exps, c in p.terms.items():
        out = [0] * p.d
        for i, e in enumerate(exps):
            out[w[i] - 1] = e
        terms[tuple(out)] = c
    return Polynomial(p.d, terms)


def transposition(d, i, j):
    """The permutation exchanging i and j."""
    w = list(range(1, d + 1))
    w[i - 1], w[j - 1] = j, i
    return tuple(w)


def permutation_sign(w):
    seen = [False] * len(w)
    sign = 1
    for i in range(len(w)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def block_antisymmetrizer(mu):
    """The product of x_i - x_j over pairs i < j in a common block,
    scaled by 1/|S_mu|.

    This element is homogeneous of degree twice the half-sum of
    mu_i*(mu_i - 1) and alternates under S_mu; it generates the
    anti-invariants as a rank-one module over the invariants.  (A sum of
    the differences would be homogeneous of degree 2 and not alternating,
    so the product is the only reading consistent with those facts.)
    """
    blocks = BlockStructure(mu)
    d = blocks.d
    out = Polynomial.one(d)
    for j in range(1, len(mu) + 1):
        blk = blocks.block(j)
        for a, b in combinations(blk, 2):
            out = out * (Polynomial.variable(d, a) - Polynomial.variable(d, b))
    return out * Fraction(1, blocks.order())


def orbit_sum(mu, exps):
    """Sum of the distinct monomials in the S_mu-orbit of the given monomial."""
    blocks = BlockStructure(mu)
    d = blocks.d
    per_block = []
    for j in range(1, len(mu) + 1):
        blk = blocks.block(j)
        per_block.append(sorted({p for p in permutations(exps[v - 1] for v in blk)}))
    terms = {}
    for combo in _cartesian(per_block):
        out = []
        for part in combo:
            out.extend(part)
        terms[tuple(out)] = Fraction(1)
    return Polynomial(d, terms)


def _cartesian(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _cartesian(lists[1:]):
            yield (head,) + rest


def invariant_monomial_basis(mu, D):
    """Basis of the degree-D invariants of S_mu as orbit sums of monomials.

    D is the grading degree, so it must be even; the orbit representatives
    have exponents sorted decreasingly within each block and the list is in
    graded-lex order of representatives.
    """
    if D < 0 or D % 2:
        raise ValueError(f"degree {D} is not a non-negative even integer")
    blocks = BlockStructure(mu)
    d = blocks.d
    r = D // 2
    if d == 0:
        return [Polynomial.one(0)] if r == 0 else []
    reps = []
    for exps in _monomials_of_degree(d, r):
        canon = []
        for j in range(1, len(mu) + 1):
            canon.extend(sorted((exps[v - 1] for v in blocks.block(j)), reverse=True))
        if tuple(canon) == exps:
            reps.append(exps)
    reps.sort(key=term_sort_key)
    return [orbit_sum(mu, rep) for rep in reps]


def _monomials_of_degree(d, r):
    if d == 1:
        yield (r,)
        return
    for first in range(r + 1):
        for rest in _monomials_of_degree(d - 1, r - first):
            yield (first,) + rest


def is_invariant(mu, p):
    """Whether p is fixed by every generator of S_mu."""
    blocks = BlockStructure(mu)
    return all(
        permute(transposition(p.d, i, j), p) == p
        for i, j in blocks.transpositions()
    )
