"""Enumeration and classification of freely-acting subgroups.

The collection F(d;p,n,m) consists of subgroups K of H with elementary
abelian quotient of rank m that contain no nontrivial element supported
(up to the all-ones shift) on at most d generators.  Enumeration iterates
unique reduced-echelon bases of the (n-m)-dimensional subspaces of F_p^n
(the normalized coordinates of H); freeness is decided by a dual test on
the quotient map's columns and cross-checked elsewhere against the
element-wise predicate.  Classification is up to the S_{n+1} of generator
permutations, via breadth-first orbit closure under its two standard
generators.
"""

import time
from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import (
    InconsistencyError,
    ParameterError,
    ResourceLimitError,
    UnsupportedParameterError,
)
from .fixed_points import free_rank_bound
from .groups import (
    GroupElement,
    GroupParams,
    Subgroup,
    elem_normalize,
    is_prime,
    nullspace_mod_p,
    perm_full_cycle,
    perm_swap_first_two,
    autg_apply_subgroup,
    rank_mod_p,
    rref_mod_p,
    subgroup_canonical_key,
    subgroup_from_lift_rows,
    subgroup_to_json,
)


@dataclass(frozen=True)
class EnumerationTask:
    d: int
    p: int
    n: int
    m: int
    cap_subspaces: int = 2_000_000
    cap_elements: int = 2 ** 20

    def __post_init__(self):
        if not is_prime(self.p):
            raise UnsupportedParameterError(f"enumeration requires p prime, got {self.p}")
        if self.d < 1 or self.n < 1 or not (0 <= self.m <= self.n):
            raise ParameterError(f"bad task parameters d={self.d}, n={self.n}, m={self.m}")

    @property
    def params(self) -> GroupParams:
        return GroupParams(p=self.p, n=self.n, d=self.d)


@dataclass(frozen=True)
class Verdict:
    possibly_nonempty: bool
    reason: str = ""


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    return num // den


def necessary_bounds(d: int, p: int, n: int, m: int) -> Verdict:
    """Sound pruning: Empty verdicts are proven; PossiblyNonempty promises
    nothing."""
    if not is_prime(p):
        raise UnsupportedParameterError(f"requires p prime, got {p}")
    if m < d:
        return Verdict(False, f"quotient rank m={m} below dimension d={d}")
    if m == d == 2 and p < 4:
        return Verdict(False, f"m=d=2 requires p >= 4, got p={p}")
    if not free_rank_bound(p, m, n):
        return Verdict(
            False, f"n+1={n + 1} exceeds (p^m-1)/(p-1)={(p ** m - 1) // (p - 1)}"
        )
    return Verdict(True)


# ---------------------------------------------------------------------------
# Subspace iteration
# ---------------------------------------------------------------------------

def iter_rref_bases(n: int, k: int, p: int):
    """Yield the unique RREF basis (k rows of length n) of every
    k-dimensional subspace of F_p^n."""
    if k == 0:
        yield ()
        return
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free_pos = []  # (row, col) entries free to vary
        for i, c in enumerate(pivots):
            for j in range(c + 1, n):
                if j not in pivot_set:
                    free_pos.append((i, j))
        template = []
        for i, c in enumerate(pivots):
            row = [0] * n
            row[c] = 1
            template.append(row)
        for values in product(range(p), repeat=len(free_pos)):
            rows = [row[:] for row in template]
            for (i, j), v in zip(free_pos, values):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def _quotient_columns(basis_rows, n: int, m: int, p: int):
    """Columns c_1..c_{n+1} in F_p^m of a quotient map with kernel the span
    of basis_rows (vectors in normalized coordinates), plus the dependent
    last column forced by the product-of-generators relation."""
    mat = nullspace_mod_p(basis_rows, p, ncols=n) if basis_rows else tuple(
        tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
    )
    # mat has m rows; columns are the images of phi_1..phi_n
    cols = [tuple(row[j] for row in mat) for j in range(n)]
    last = tuple((-sum(row)) % p for row in mat)
    cols.append(last)
    return cols


def _columns_free(cols, d: int, p: int) -> bool:
    """No nonzero combination of at most d columns vanishes, i.e. every
    d-subset of the columns is linearly independent."""
    if d == 2:
        seen = set()
        for c in cols:
            nz = next((x for x in c if x), None)
            if nz is None:
                return False
            inv = pow(nz, -1, p)
            proj = tuple((x * inv) % p for x in c)
            if proj in seen:
                return False
            seen.add(proj)
        return True
    m = len(cols[0])
    if d > m:
        return False
    for subset in combinations(cols, d):
        if rank_mod_p(subset, p) < d:
            return False
    return True


def subgroup_is_free_dual(K: Subgroup, d: int) -> bool:
    """Dual-route freeness check on the quotient columns of K (no element
    enumeration)."""
    from .groups import subgroup_element_basis, quotient_rank

    params = K.params
    basis = tuple(row[:-1] for row in subgroup_element_basis(K))
    cols = _quotient_columns(basis, params.n, quotient_rank(K), params.p)
    return _columns_free(cols, d, params.p)


def enumerate_all(task: EnumerationTask, prune: bool = True):
    """All of F(d;p,n,m), sorted by canonical key.  Iterates every
    (n-m)-dimensional subspace of F_p^n under the subspace cap."""
    if prune and not necessary_bounds(task.d, task.p, task.n, task.m).possibly_nonempty:
        return []
    k = task.n - task.m
    count = gaussian_binomial(task.n, k, task.p)
    if count > task.cap_subspaces:
        raise ResourceLimitError(
            f"{count} candidate subspaces exceed cap {task.cap_subspaces}",
            attempted=count,
        )
    params = task.params
    p, n, d, m = task.p, task.n, task.d, task.m
    found = []
    for basis in iter_rref_bases(n, k, p):
        cols = _quotient_columns(basis, n, m, p)
        if not _columns_free(cols, d, p):
            continue
        lift_rows = [row + (0,) for row in basis]
        found.append(subgroup_from_lift_rows(lift_rows, params))
    found.sort(key=subgroup_canonical_key)
    return found


# ---------------------------------------------------------------------------
# Normalized-form generation (d = 2 fast path)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentMatrix:
    """Rows r_i in {0..p-1}^m for i = m+1..n+1: the images of the trailing
    generators under a normalized quotient map."""

    rows: tuple
    p: int
    m: int


def _normalized_allowed_rows(p: int, m: int):
    """Rows that are nonzero and do not have m-1 zero coordinates, i.e.
    have at least two nonzero entries (for m >= 2)."""
    out = []
    for row in product(range(p), repeat=m):
        nonzero = sum(1 for x in row if x)
        if m >= 2 and nonzero >= 2:
            out.append(row)
        elif m == 1 and nonzero >= 1:
            out.append(row)
    return out


def _rows_compatible(a, b, p: int) -> bool:
    """Pairwise condition: a + l*b is never zero mod p for l in 1..p-1,
    i.e. a is not a negated multiple of b."""
    for l in range(1, p):
        if all((x + l * y) % p == 0 for x, y in zip(a, b)):
            return False
    return True


def enumerate_normalized(task: EnumerationTask):
    """All exponent matrices in normalized form (only for d=2, where the
    four closure conditions characterize freeness)."""
    if task.d != 2:
        raise UnsupportedParameterError(
            "normalized-form generation is only defined for d=2; use enumerate_all"
        )
    p, n, m = task.p, task.n, task.m
    if m < 1 or m > n:
        return []
    nrows = n + 1 - m
    allowed = _normalized_allowed_rows(p, m)
    results = []
    chosen = []

    def backtrack(start_unused):
        if len(chosen) == nrows:
            # column sums: 1 + sum of r_{*,j} = 0 mod p for each j
            if all((1 + sum(r[j] for r in chosen)) % p == 0 for j in range(m)):
                results.append(ExponentMatrix(rows=tuple(chosen), p=p, m=m))
            return
        for row in allowed:
            if all(_rows_compatible(prev, row, p) for prev in chosen):
                chosen.append(row)
                backtrack(None)
                chosen.pop()

    backtrack(None)
    return results


def matrix_to_subgroup(mat: ExponentMatrix, task: EnumerationTask) -> Subgroup:
    """Kernel subgroup generated by phi_1^{r_{i,1}}...phi_m^{r_{i,m}} *
    phi_i^{-1} for i = m+1..n+1."""
    params = task.params
    p, n, m = task.p, task.n, task.m
    rows = []
    for offset, r in enumerate(mat.rows):
        i = m + 1 + offset  # 1-based generator index
        raw = [0] * (n + 1)
        for j in range(m):
            raw[j] = r[j] % p
        raw[i - 1] = (raw[i - 1] - 1) % p
        rows.append(tuple(elem_normalize(raw, params).exponents))
    return subgroup_from_lift_rows(rows, params)


# ---------------------------------------------------------------------------
# Orbit classification under generator permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitClass:
    representative: Subgroup
    orbit_size: int
    members: tuple = field(default=(), compare=False)  # canonical keys


def classify_orbits(subgroups):
    """Partition into orbits under the full permutation group of the
    canonical generators, by BFS closure under a transposition and a full
    cycle.  Raises if an orbit leaves the input set."""
    if not subgroups:
        return []
    n = subgroups[0].params.n
    psi1 = perm_swap_first_two(n)
    psi2 = perm_full_cycle(n)
    by_key = {subgroup_canonical_key(K): K for K in subgroups}
    if len(by_key) != len(subgroups):
        raise InconsistencyError("duplicate subgroups in classification input")
    unseen = dict(by_key)
    orbits = []
    while unseen:
        start_key = min(unseen)
        frontier = [unseen.pop(start_key)]
        members = {start_key}
        while frontier:
            K = frontier.pop()
            for sigma in (psi1, psi2):
                img = autg_apply_subgroup(sigma, K)
                key = subgroup_canonical_key(img)
                if key in members:
                    continue
                if key not in by_key:
                    raise InconsistencyError(
                        "orbit leaves the input set; input was not closed under "
                        "generator permutations"
                    )
                members.add(key)
                unseen.pop(key, None)
                frontier.append(img)
        rep_key = min(members)
        orbits.append(
            OrbitClass(
                representative=by_key[rep_key],
                orbit_size=len(members),
                members=tuple(sorted(members)),
            )
        )
    orbits.sort(key=lambda o: subgroup_canonical_key(o.representative))
    return orbits


def canonical_orbit_key(K: Subgroup) -> bytes:
    """Lex-min canonical key over the full permutation group; intended for
    small n (n+1 <= 8)."""
    from itertools import permutations

    from .groups import GeneratorPermutation

    n = K.params.n
    if n + 1 > 8:
        raise ResourceLimitError(f"full canonicalization limited to n+1 <= 8, got {n + 1}")
    best = None
    for perm in permutations(range(n + 1)):
        img = autg_apply_subgroup(GeneratorPermutation(perm), K)
        key = subgroup_canonical_key(img)
        if best is None or key < best:
            best = key
    return best


# ---------------------------------------------------------------------------
# Explicit constructions (p = 2 families)
# ---------------------------------------------------------------------------

def _kernel_from_columns(cols, params: GroupParams) -> Subgroup:
    """Kernel of the quotient map sending phi_j to the column vector
    cols[j-1]; the columns must sum to zero mod p."""
    p = params.p
    m = len(cols[0])
    if any(sum(c[i] for c in cols) % p for i in range(m)):
        raise InconsistencyError("columns do not satisfy the product relation")
    # elements x (normalized coords 1..n) in kernel: sum x_j cols[j] = 0
    mat = [tuple(cols[j][i] for j in range(params.n)) for i in range(m)]
    basis = nullspace_mod_p(mat, p, ncols=params.n)
    rows = [row + (0,) for row in basis]
    return subgroup_from_lift_rows(rows, params)


def _unit(m, i):
    return tuple(1 if j == i else 0 for j in range(m))


def _sum_units(m, idxs):
    return tuple(1 if j in idxs else 0 for j in range(m))


def construct_family(kind: str, *, n: int = None, m: int = None, blocks=None,
                     d: int = 2) -> Subgroup:
    """Explicit freely-acting kernels for p=2.

    kind one of:
      n_minus_1: quotient rank n-1, needs n >= 5
      n_minus_2: quotient rank n-2, needs n >= 6
      even_m:    quotient rank m (even, >= 4), n = (m-1)(m+2)/2
      odd_m:     quotient rank m (odd, >= 3), n = m(m+1)/2
    """
    p = 2
    if kind == "n_minus_1":
        if n is None or n < 5:
            raise ParameterError("n_minus_1 family requires n >= 5")
        mm = n - 1
        if blocks is None:
            half = mm // 2
            blocks = (tuple(range(half)), tuple(range(half, mm)))
        b1, b2 = blocks
        if len(b1) < 2 or len(b2) < 2 or set(b1) & set(b2) or set(b1) | set(b2) != set(range(mm)):
            raise ParameterError("blocks must partition the index range with sizes >= 2")
        cols = [_unit(mm, i) for i in range(mm)]
        cols += [_sum_units(mm, set(b1)), _sum_units(mm, set(b2))]
    elif kind == "n_minus_2":
        if n is None or n < 6:
            raise ParameterError("n_minus_2 family requires n >= 6")
        mm = n - 2
        if blocks is None:
            if mm >= 6:
                blocks = (
                    (0, 1),
                    (2, 3),
                    tuple(range(4, mm)),
                )
            else:
                # Too few indices for a disjoint partition; use overlapping
                # blocks whose characteristic vectors are still distinct,
                # of weight >= 2, and sum to the all-ones vector.
                b3 = (1,) + tuple(range(3, mm))
                blocks = ((0, 1), (1, 2), b3)
        b1, b2, b3 = blocks
        cols = [_unit(mm, i) for i in range(mm)]
        cols += [_sum_units(mm, set(b)) for b in (b1, b2, b3)]
        if len(set(cols)) != len(cols) or any(sum(c) < 2 for c in cols[mm:]):
            raise ParameterError("blocks yield repeated or short columns")
        if any(sum(c[i] for c in cols) % 2 for i in range(mm)):
            raise ParameterError("blocks do not satisfy the product relation")
    elif kind == "even_m":
        if m is None or m < 4 or m % 2:
            raise ParameterError("even_m family requires even m >= 4")
        mm = m
        n = (m - 1) * (m + 2) // 2
        cols = [_unit(mm, i) for i in range(mm)]
        cols += [_sum_units(mm, {i, j}) for i, j in combinations(range(mm), 2)]
    elif kind == "odd_m":
        if m is None or m < 3 or m % 2 == 0:
            raise ParameterError("odd_m family requires odd m >= 3")
        mm = m
        n = m * (m + 1) // 2
        cols = [_unit(mm, i) for i in range(mm)]
        cols += [_sum_units(mm, {i, j}) for i, j in combinations(range(mm), 2)]
        cols.append(_sum_units(mm, set(range(mm))))
    else:
        raise ParameterError(f"unknown family kind {kind!r}")
    params = GroupParams(p=p, n=n, d=d)
    if len(cols) != n + 1:
        raise InconsistencyError("column count mismatch in family construction")
    return _kernel_from_columns(cols, params)


# ---------------------------------------------------------------------------
# Reporting
# ---------------------------------------------------------------------------

def enumeration_report(task: EnumerationTask, classify: bool = False):
    t0 = time.perf_counter()
    subgroups = enumerate_all(task)
    payload = {
        "task": {"d": task.d, "p": task.p, "n": task.n, "m": task.m},
        "count": len(subgroups),
    }
    if classify:
        orbits = classify_orbits(subgroups)
        payload["orbits"] = [
            {
                "representative": subgroup_to_json(o.representative),
                "orbitSize": o.orbit_size,
            }
            for o in orbits
        ]
    else:
        payload["subgroups"] = [subgroup_to_json(K) for K in subgroups]
    payload["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return payload
