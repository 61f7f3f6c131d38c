"""Monomial invariants of diagonal p-torsion actions and quotient models.

A diagonal action is a list of character rows: generator g scales variable
i by the p-th root of unity raised to row[i].  A monomial is invariant iff
every character row pairs to zero with its exponent vector mod p.  The
minimal monomial generators (the Hilbert basis of the invariant monoid up
to a degree bound), their binomial relations, the affine-linear relations
coming from the defining equations on the chart x_{n+1}=1, and the induced
action of the quotient group are computed here.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import (
    DimensionError,
    InconsistencyError,
    ParameterError,
    ResourceLimitError,
)
from .groups import (
    GroupParams,
    Subgroup,
    generator,
    quotient_rank,
    rank_mod_p,
    rref_mod_p,
    subgroup_element_basis,
)


@dataclass(frozen=True)
class DiagonalAction:
    p: int
    num_vars: int
    rows: tuple  # character rows, each of length num_vars

    def __post_init__(self):
        if self.p < 2:
            raise ParameterError(f"p must be >= 2, got {self.p}")
        rows = tuple(tuple(x % self.p for x in row) for row in self.rows)
        for row in rows:
            if len(row) != self.num_vars:
                raise DimensionError("character row length mismatch")
        object.__setattr__(self, "rows", rows)

    def group_order(self) -> int:
        return self.p ** rank_mod_p(self.rows, self.p) if self.rows else 1


def action_from_subgroup(K: Subgroup) -> DiagonalAction:
    """Restriction of K to the affine chart x_{n+1}=1: character rows are
    the first n coordinates of the normalized basis elements."""
    n = K.params.n
    rows = [row[:-1] for row in subgroup_element_basis(K)]
    return DiagonalAction(p=K.params.p, num_vars=n, rows=tuple(rows))


def is_invariant(exponents, action: DiagonalAction) -> bool:
    if len(exponents) != action.num_vars:
        raise DimensionError("monomial length mismatch")
    return all(
        sum(c * a for c, a in zip(row, exponents)) % action.p == 0
        for row in action.rows
    )


def _iter_monomials(num_vars: int, degree: int):
    """All exponent vectors of the given total degree, lexicographically."""
    for positions in combinations_with_replacement(range(num_vars), degree):
        vec = [0] * num_vars
        for i in positions:
            vec[i] += 1
        yield tuple(vec)


def hilbert_basis(action: DiagonalAction, degree_bound: int = None,
                  cap: int = 5_000_000):
    """Minimal generators of the invariant-monomial monoid up to the degree
    bound (default: the group order, which suffices for diagonal actions).
    A monomial is minimal iff no nonconstant invariant monomial strictly
    divides it; the quotient by an invariant divisor is itself invariant,
    so testing divisibility by previously found generators is exhaustive.
    Sorted by (degree, lex)."""
    if degree_bound is None:
        degree_bound = action.group_order()
    if degree_bound < 1:
        raise ParameterError(f"degree bound must be >= 1, got {degree_bound}")
    total = comb(degree_bound + action.num_vars, action.num_vars)
    if total > cap:
        raise ResourceLimitError(
            f"{total} monomials up to degree {degree_bound} exceed cap {cap}",
            attempted=total,
        )
    gens = []
    for deg in range(1, degree_bound + 1):
        for mono in _iter_monomials(action.num_vars, deg):
            if not is_invariant(mono, action):
                continue
            reducible = any(
                all(g <= a for g, a in zip(gen, mono)) for gen in gens
            )
            if not reducible:
                gens.append(mono)
    return sorted(gens, key=lambda v: (sum(v), tuple(-x for x in v)))


def invariant_monomials_up_to(action: DiagonalAction, degree_bound: int):
    """All invariant monomials (nonconstant) of degree <= bound."""
    out = []
    for deg in range(1, degree_bound + 1):
        out.extend(m for m in _iter_monomials(action.num_vars, deg)
                   if is_invariant(m, action))
    return out


def generates_up_to(gens, action: DiagonalAction, degree_bound: int) -> bool:
    """Every invariant monomial of degree <= bound factors into gens."""
    genset = set(gens)

    def factors(mono):
        if not any(mono):
            return True
        for g in genset:
            if all(x <= y for x, y in zip(g, mono)):
                if factors(tuple(y - x for x, y in zip(g, mono))):
                    return True
        return False

    return all(factors(m) for m in invariant_monomials_up_to(action, degree_bound))


# ---------------------------------------------------------------------------
# Relations
# ---------------------------------------------------------------------------

def _multiset_exponent_sum(gens, multiset):
    num_vars = len(gens[0])
    total = [0] * num_vars
    for idx in multiset:
        for i, x in enumerate(gens[idx]):
            total[i] += x
    return tuple(total)


def find_binomial_relations(gens, degree_bound: int = None, max_side: int = 3):
    """All pairs of distinct generator multisets (each side of size <=
    max_side, product degree <= bound) with equal exponent-vector sums,
    deduplicated up to swapping sides.  Sides are index multisets, sorted."""
    if not gens:
        return []
    if degree_bound is None:
        degree_bound = max_side * max(sum(g) for g in gens)
    by_sum = {}
    for size in range(1, max_side + 1):
        for multiset in combinations_with_replacement(range(len(gens)), size):
            total = _multiset_exponent_sum(gens, multiset)
            if sum(total) > degree_bound:
                continue
            by_sum.setdefault(total, []).append(multiset)
    relations = []
    for multisets in by_sum.values():
        if len(multisets) < 2:
            continue
        for a, b in combinations(sorted(multisets), 2):
            relations.append((a, b))
    relations.sort()
    return relations


def verify_relations(gens, relations):
    """One boolean per relation: exponent-vector sums of the two sides are
    equal."""
    out = []
    for a, b in relations:
        for idx in (*a, *b):
            if not (0 <= idx < len(gens)):
                raise ParameterError(f"generator index {idx} out of range")
        out.append(_multiset_exponent_sum(gens, a) == _multiset_exponent_sum(gens, b))
    return out


# ---------------------------------------------------------------------------
# Linear relations from the defining equations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearRelation:
    """target = sum coeffs[j] * u_j + constant, indices into the generator
    list."""

    target: int
    coeffs: tuple  # ((gen index, Fraction), ...)
    constant: Fraction


def linear_relations(model, gens):
    """Rewrite each defining equation, restricted to the chart x_{n+1}=1,
    as an affine-linear relation among the pure-power generators x_i^p.
    Each equation is solved for its distinguished new coordinate; the last
    equation (whose new coordinate is the chart variable) is solved for
    x_{d+1}^p instead."""
    n, d, p = model.n, model.d, model.p
    pure_power_index = {}
    for i in range(n):  # variable i (0-based), pure power p*e_i
        target_vec = tuple(p if j == i else 0 for j in range(n))
        for gi, g in enumerate(gens):
            if tuple(g) == target_vec:
                pure_power_index[i] = gi
                break
        else:
            raise InconsistencyError(
                f"missing pure-power generator for variable {i + 1}"
            )
    relations = []
    for row_idx, row in enumerate(model.equations):
        new_coord = d + 1 + row_idx  # 0-based coordinate introduced by this row
        solve_for = new_coord if new_coord < n else d
        c_t = row[solve_for]
        if not c_t:
            raise InconsistencyError("equation lacks its distinguished coordinate")
        coeffs = []
        constant = Fraction(0)
        for i, a in enumerate(row):
            if i == solve_for or not a:
                continue
            if i == n:  # chart variable, x_{n+1}^p = 1
                constant += -a / c_t
            else:
                coeffs.append((pure_power_index[i], -a / c_t))
        relations.append(
            LinearRelation(
                target=pure_power_index[solve_for],
                coeffs=tuple(coeffs),
                constant=constant,
            )
        )
    return relations


# ---------------------------------------------------------------------------
# Induced action of the quotient group
# ---------------------------------------------------------------------------

def quotient_generator_reps(K: Subgroup):
    """Canonical generators whose images form a basis of H/K, chosen
    greedily in index order."""
    params = K.params
    p = params.p
    m = quotient_rank(K)
    reps = []
    span = list(K.basis)
    rank = len(rref_mod_p(span, p))
    for j in range(1, params.n + 2):
        g = generator(j, params)
        new_rank = len(rref_mod_p(span + [g.exponents], p))
        if new_rank > rank:
            reps.append(g)
            span.append(g.exponents)
            rank = new_rank
        if len(reps) == m:
            break
    if len(reps) != m:
        raise InconsistencyError("could not complete a quotient basis")
    return reps


def induced_action(K: Subgroup, gens, reps=None):
    """Character table of the quotient group on the invariant generators:
    for each coset representative, the root-of-unity exponent it applies to
    each generator.  Independent of the representative choice because the
    generators are K-invariant."""
    params = K.params
    p = params.p
    if reps is None:
        reps = quotient_generator_reps(K)
    n = params.n
    table = []
    for rep in reps:
        chars = []
        for g in gens:
            if len(g) != n:
                raise DimensionError("generator length mismatch with chart")
            chars.append(sum(e * a for e, a in zip(rep.exponents, g)) % p)
        table.append((rep, tuple(chars)))
    return table


# ---------------------------------------------------------------------------
# Full quotient-model report
# ---------------------------------------------------------------------------

def quotient_model_report(K: Subgroup, model=None, max_side: int = 3,
                          relation_degree_bound: int = None):
    """JSON-ready quotient model: named generators, binomial relations,
    optional linear relations (needs the variety model), induced action."""
    action = action_from_subgroup(K)
    gens = hilbert_basis(action)
    names = [f"u{i + 1}" for i in range(len(gens))]
    binomials = find_binomial_relations(
        gens, degree_bound=relation_degree_bound, max_side=max_side
    )
    report = {
        "generators": [
            {"name": name, "exponents": list(g)} for name, g in zip(names, gens)
        ],
        "binomial_relations": [
            [[names[i] for i in a], [names[i] for i in b]] for a, b in binomials
        ],
        "action": {},
    }
    if model is not None:
        report["linear_relations"] = [
            {
                "target": names[rel.target],
                "coeffs": {names[i]: str(c) for i, c in rel.coeffs},
                "constant": str(rel.constant),
            }
            for rel in linear_relations(model, gens)
        ]
    for idx, (rep, chars) in enumerate(induced_action(K, gens), start=1):
        flipped = [names[i] for i, c in enumerate(chars) if c]
        report["action"][f"phi{idx}"] = flipped
    return report
