"""Exact arithmetic in the deck group H and its subgroups.

H is the quotient of Z_p^{n+1} by the all-ones vector, generated by the
n+1 diagonal automorphisms phi_1, ..., phi_{n+1} (each multiplies one
projective coordinate by a primitive p-th root of unity, and their product
is the identity).  Elements are stored as normalized exponent vectors with
last entry 0.  Subgroups are stored through their lift to F_p^{n+1}, which
always contains the all-ones vector, as a unique reduced row-echelon basis.

Element arithmetic works for any p >= 2; the subgroup linear algebra
(echelon forms, orders, quotient ranks) requires p prime.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm

from .errors import DimensionError, ParameterError, UnsupportedParameterError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class GroupParams:
    """Ambient parameters: exponent p, rank parameter n (H ~ Z_p^n), and the
    variety dimension d carried along for the fixed-point predicates."""

    p: int
    n: int
    d: int

    def __post_init__(self):
        if self.p < 2:
            raise ParameterError(f"p must be >= 2, got {self.p}")
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if not (1 <= self.d <= self.n):
            raise ParameterError(f"need 1 <= d <= n, got d={self.d}, n={self.n}")

    def require_prime(self):
        if not is_prime(self.p):
            raise UnsupportedParameterError(
                f"operation requires p prime, got p={self.p}"
            )


@dataclass(frozen=True)
class GroupElement:
    """An element of H in normal form: exponent vector of length n+1 with
    last entry 0."""

    exponents: tuple
    params: GroupParams

    def __post_init__(self):
        if len(self.exponents) != self.params.n + 1:
            raise DimensionError(
                f"expected {self.params.n + 1} exponents, got {len(self.exponents)}"
            )
        if self.exponents[-1] != 0:
            raise ParameterError("GroupElement exponents must be normalized (last entry 0)")

    def is_identity(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def to_json(self):
        return list(self.exponents)


def elem_normalize(raw, params: GroupParams) -> GroupElement:
    """Normal-form representative: subtract the last entry from every entry
    mod p, so raw vectors differing by a multiple of the all-ones vector
    collapse to the same element."""
    raw = tuple(raw)
    if len(raw) != params.n + 1:
        raise DimensionError(f"expected length {params.n + 1}, got {len(raw)}")
    c = raw[-1] % params.p
    return GroupElement(tuple((e - c) % params.p for e in raw), params)


def identity(params: GroupParams) -> GroupElement:
    return GroupElement((0,) * (params.n + 1), params)


def generator(j: int, params: GroupParams) -> GroupElement:
    """The canonical generator phi_j, 1-based j in {1, ..., n+1}."""
    if not (1 <= j <= params.n + 1):
        raise ParameterError(f"generator index {j} out of range 1..{params.n + 1}")
    raw = [0] * (params.n + 1)
    raw[j - 1] = 1
    return elem_normalize(raw, params)


def word(indices, params: GroupParams, exps=None) -> GroupElement:
    """Product of canonical generators: word([1,2,4], params) = phi1*phi2*phi4.
    Optional parallel list of exponents."""
    raw = [0] * (params.n + 1)
    if exps is None:
        exps = [1] * len(indices)
    for j, e in zip(indices, exps):
        if not (1 <= j <= params.n + 1):
            raise ParameterError(f"generator index {j} out of range")
        raw[j - 1] = (raw[j - 1] + e) % params.p
    return elem_normalize(raw, params)


def _check_same_params(a: GroupElement, b: GroupElement):
    if a.params != b.params:
        raise DimensionError(f"parameter mismatch: {a.params} vs {b.params}")


def elem_mul(a: GroupElement, b: GroupElement) -> GroupElement:
    _check_same_params(a, b)
    p = a.params.p
    return GroupElement(
        tuple((x + y) % p for x, y in zip(a.exponents, b.exponents)), a.params
    )


def elem_inv(a: GroupElement) -> GroupElement:
    p = a.params.p
    return GroupElement(tuple((-x) % p for x in a.exponents), a.params)


def elem_order(a: GroupElement) -> int:
    p = a.params.p
    return lcm(1, *(p // gcd(e, p) for e in a.exponents if e))


def elem_pow(a: GroupElement, k: int) -> GroupElement:
    p = a.params.p
    return GroupElement(tuple((x * k) % p for x in a.exponents), a.params)


# ---------------------------------------------------------------------------
# Linear algebra over F_p (p prime)
# ---------------------------------------------------------------------------

def rref_mod_p(rows, p):
    """Reduced row-echelon form over F_p.  Returns a tuple of nonzero rows
    with pivots scaled to 1, sorted by pivot column.  Unique per row space."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col] % p, -1, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                f = mat[r][col] % p
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return tuple(tuple(r) for r in mat[:rank] if any(x % p for x in r))


def rank_mod_p(rows, p) -> int:
    return len(rref_mod_p(rows, p))


def solve_in_rowspan(rows, v, p):
    """Whether v lies in the F_p-span of rows (rows assumed in RREF)."""
    v = [x % p for x in v]
    for row in rows:
        piv = next(i for i, x in enumerate(row) if x)
        if v[piv]:
            f = v[piv]
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return not any(v)


def nullspace_mod_p(rows, p, ncols=None):
    """Basis (RREF) of {x : rows @ x = 0} over F_p."""
    rows = rref_mod_p(rows, p) if rows else ()
    if ncols is None:
        if not rows:
            raise ParameterError("ncols required for empty matrix")
        ncols = len(rows[0])
    pivots = [next(i for i, x in enumerate(r) if x) for r in rows]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for r, pc in zip(rows, pivots):
            vec[pc] = (-r[f]) % p
        basis.append(tuple(vec))
    return rref_mod_p(basis, p) if basis else ()


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    """A subgroup K of H, stored as the unique RREF basis of its lift to
    F_p^{n+1}.  The lift always contains the all-ones vector, so
    rank(basis) = dim(K) + 1."""

    basis: tuple  # tuple of tuples, RREF rows over F_p of length n+1
    params: GroupParams


def subgroup_from_generators(gens, params: GroupParams) -> Subgroup:
    params.require_prime()
    rows = [(1,) * (params.n + 1)]
    for g in gens:
        if g.params != params:
            raise DimensionError("generator parameter mismatch")
        rows.append(g.exponents)
    return Subgroup(rref_mod_p(rows, params.p), params)


def subgroup_from_lift_rows(rows, params: GroupParams) -> Subgroup:
    """Subgroup from raw lift vectors (all-ones is adjoined automatically)."""
    params.require_prime()
    all_rows = [(1,) * (params.n + 1)] + [tuple(r) for r in rows]
    return Subgroup(rref_mod_p(all_rows, params.p), params)


def trivial_subgroup(params: GroupParams) -> Subgroup:
    return subgroup_from_generators([], params)


def full_group(params: GroupParams) -> Subgroup:
    return subgroup_from_generators(
        [generator(j, params) for j in range(1, params.n + 1)], params
    )


def subgroup_rank(K: Subgroup) -> int:
    return len(K.basis)


def subgroup_order(K: Subgroup) -> int:
    return K.params.p ** (len(K.basis) - 1)


def quotient_rank(K: Subgroup) -> int:
    """m with H/K isomorphic to Z_p^m."""
    K.params.require_prime()
    return K.params.n - (len(K.basis) - 1)


def subgroup_contains(K: Subgroup, x: GroupElement) -> bool:
    if x.params != K.params:
        raise DimensionError("parameter mismatch")
    return solve_in_rowspan(K.basis, x.exponents, K.params.p)


def subgroup_element_basis(K: Subgroup):
    """RREF basis of the image of K in H under the m_{n+1}=0 normal form:
    rows of length n+1 with last entry 0, one per dimension of K."""
    p = K.params.p
    normalized = []
    for row in K.basis:
        c = row[-1] % p
        nr = tuple((x - c) % p for x in row)
        if any(nr):
            normalized.append(nr)
    return rref_mod_p(normalized, p)


def subgroup_elements(K: Subgroup, cap: int = 2 ** 20):
    """All elements of K as normalized GroupElements.  |K| = p^dim(K) must
    not exceed cap."""
    from .errors import ResourceLimitError

    p = K.params.p
    basis = subgroup_element_basis(K)
    count = p ** len(basis)
    if count > cap:
        raise ResourceLimitError(
            f"subgroup has {count} elements, above cap {cap}", attempted=count
        )
    n1 = K.params.n + 1
    out = []
    for coeffs in product(range(p), repeat=len(basis)):
        vec = [0] * n1
        for c, row in zip(coeffs, basis):
            if c:
                for i, x in enumerate(row):
                    vec[i] = (vec[i] + c * x) % p
        out.append(GroupElement(tuple(vec), K.params))
    return out


def subgroup_canonical_key(K: Subgroup) -> bytes:
    """Deterministic serialization of the RREF lift basis; equal keys iff
    equal subgroups (for fixed params)."""
    head = f"{K.params.p},{K.params.n};".encode()
    body = b"|".join(bytes(row) for row in K.basis)
    return head + body


def subgroup_to_json(K: Subgroup):
    return {"p": K.params.p, "n": K.params.n, "basis": [list(r) for r in K.basis]}


def subgroup_from_json(data, d: int = None) -> Subgroup:
    params = GroupParams(p=data["p"], n=data["n"], d=d if d is not None else 1)
    return subgroup_from_lift_rows([tuple(r) for r in data["basis"]], params)


# ---------------------------------------------------------------------------
# Permutations of the canonical generators (Aut_g(H) ~ S_{n+1})
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorPermutation:
    """A permutation of the canonical generators; perm[i] is the 0-based
    image of index i, so phi_{i+1} maps to phi_{perm[i]+1}."""

    perm: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ParameterError(f"not a permutation: {self.perm}")

    def compose(self, other: "GeneratorPermutation") -> "GeneratorPermutation":
        """self after other: (self*other)(i) = self(other(i))."""
        if len(self.perm) != len(other.perm):
            raise DimensionError("permutation size mismatch")
        return GeneratorPermutation(tuple(self.perm[j] for j in other.perm))


def perm_identity(n: int) -> GeneratorPermutation:
    return GeneratorPermutation(tuple(range(n + 1)))


def perm_swap_first_two(n: int) -> GeneratorPermutation:
    """Adjacent transposition of the first two generators."""
    return GeneratorPermutation((1, 0) + tuple(range(2, n + 1)))


def perm_full_cycle(n: int) -> GeneratorPermutation:
    """The (n+1)-cycle sending phi_1 to phi_{n+1} and shifting the rest up
    by one: together with the transposition it generates all of S_{n+1}."""
    return GeneratorPermutation((n,) + tuple(range(n)))


def perm_from_one_based(images) -> GeneratorPermutation:
    return GeneratorPermutation(tuple(i - 1 for i in images))


def autg_apply_element(sigma: GeneratorPermutation, x: GroupElement) -> GroupElement:
    if len(sigma.perm) != x.params.n + 1:
        raise DimensionError("permutation size mismatch")
    raw = [0] * len(sigma.perm)
    for i, e in enumerate(x.exponents):
        raw[sigma.perm[i]] = e
    return elem_normalize(raw, x.params)


def autg_apply_subgroup(sigma: GeneratorPermutation, K: Subgroup) -> Subgroup:
    if len(sigma.perm) != K.params.n + 1:
        raise DimensionError("permutation size mismatch")
    rows = []
    for row in K.basis:
        new = [0] * len(row)
        for i, e in enumerate(row):
            new[sigma.perm[i]] = e
        rows.append(tuple(new))
    return Subgroup(rref_mod_p(rows, K.params.p), K.params)


def autg_apply(sigma: GeneratorPermutation, obj):
    if isinstance(obj, GroupElement):
        return autg_apply_element(sigma, obj)
    if isinstance(obj, Subgroup):
        return autg_apply_subgroup(sigma, obj)
    raise ParameterError(f"cannot apply permutation to {type(obj).__name__}")
