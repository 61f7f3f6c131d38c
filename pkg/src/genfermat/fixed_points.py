"""Level-set analysis of group elements and the free-action predicates.

A nontrivial diagonal automorphism has fixed points on the degree-p model
iff some residue value appears at least n+1-d times among its exponents
(equivalently, some shifted representative has at most d nonzero entries).
Each such level set contributes one fixed stratum, itself a generalized
Fermat variety of dimension |L| + d - n - 1.
"""

from dataclasses import dataclass

from .errors import ParameterError
from .groups import GroupElement, Subgroup, subgroup_elements


@dataclass(frozen=True)
class LevelSets:
    """Partition of the 1-based index set {1,...,n+1} by exponent value,
    computed on the normalized (last entry 0) representative."""

    by_value: dict  # residue -> sorted tuple of 1-based indices
    size_multiset: tuple  # sorted sizes of the nonempty level sets

    def __post_init__(self):
        object.__setattr__(
            self, "by_value", {k: tuple(v) for k, v in self.by_value.items()}
        )


@dataclass(frozen=True)
class FixedStratum:
    label: int  # residue value l
    indices: tuple  # 1-based indices of the level set
    dim: int  # |L_l| + d - n - 1
    induced_type: tuple  # (dim; p, |L_l| - 1)


def level_sets(x: GroupElement) -> LevelSets:
    by_value = {}
    for i, e in enumerate(x.exponents, start=1):
        by_value.setdefault(e, []).append(i)
    sizes = tuple(sorted(len(v) for v in by_value.values()))
    return LevelSets(by_value=by_value, size_multiset=sizes)


def _check_nontrivial(x: GroupElement, d: int):
    if x.is_identity():
        raise ParameterError("fixed-point predicate is undefined for the identity")
    if not (1 <= d <= x.params.n):
        raise ParameterError(f"need 1 <= d <= n, got d={d}, n={x.params.n}")


def has_fixed_points(x: GroupElement, d: int) -> bool:
    """True iff some level set has size >= n+1-d, i.e. some shifted
    representative of x has at most d nonzero entries."""
    _check_nontrivial(x, d)
    n = x.params.n
    counts = {}
    for e in x.exponents:
        counts[e] = counts.get(e, 0) + 1
    return max(counts.values()) >= n + 1 - d


def fixed_locus_strata(x: GroupElement, d: int):
    """One stratum per level set of size >= n+1-d; empty iff x acts freely."""
    _check_nontrivial(x, d)
    n = x.params.n
    p = x.params.p
    ls = level_sets(x)
    strata = []
    for label in sorted(ls.by_value):
        idx = ls.by_value[label]
        s = len(idx)
        if s >= n + 1 - d:
            dim = s + d - n - 1
            strata.append(
                FixedStratum(label=label, indices=idx, dim=dim, induced_type=(dim, p, s - 1))
            )
    return strata


def element_acts_freely(x: GroupElement, d: int) -> bool:
    return not has_fixed_points(x, d)


def acts_freely_subgroup(K: Subgroup, d: int, cap: int = 2 ** 20) -> bool:
    """Exhaustive check: every nonidentity element of K acts freely."""
    for x in subgroup_elements(K, cap=cap):
        if x.is_identity():
            continue
        if has_fixed_points(x, d):
            return False
    return True


def free_rank_bound(p: int, m: int, n: int) -> bool:
    """Necessary condition for a freely-acting K with quotient Z_p^m: the
    n+1 branch hyperplanes must map to distinct cyclic subgroups of the
    quotient, so n+1 <= (p^m - 1)/(p - 1)."""
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    return n + 1 <= (p ** m - 1) // (p - 1)


def strata_report(x: GroupElement, d: int):
    """JSON-ready fixed-locus report for one element."""
    return {
        "element": list(x.exponents),
        "strata": [
            {
                "label": s.label,
                "indices": list(s.indices),
                "dim": s.dim,
                "type": list(s.induced_type),
            }
            for s in fixed_locus_strata(x, d)
        ],
    }
