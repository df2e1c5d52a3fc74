"""The divisibility-style order on a semigroup and what it says about exponents.

``a <= b`` here means ``b - a`` is a member. Betti elements and the indices
where the exponent sequence is non-zero (minimal generators excluded) carry
matching order structure: their minimal elements agree, and so do the
elements whose down-set is a chain. On those elements the exponent value is
the number of R-classes minus one. :func:`verify_theorems` re-checks all of
this on concrete semigroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (
    BoundTooSmallError,
    ChainNotSortedError,
    NotInSubsetError,
)
from .factorization import betti_elements, denumerant_series
from .semigroup import NumericalSemigroup
from .witt import (
    ExponentSequence,
    exponent_sequence,
    exponents_from_cyclotomic_factors,
    factor_into_cyclotomics,
)


def leq(S: NumericalSemigroup, a: int, b: int) -> bool:
    """Whether b - a is a member, the partial order used throughout."""
    return (b - a) in S


class OrderedSubset:
    """A finite set of integers with the member-difference order cached.

    The comparison matrix is tiny for the sets that arise (Betti sets,
    truncated exponent supports), so it is materialized eagerly.
    """

    def __init__(self, S: NumericalSemigroup, elements):
        self.S = S
        self.elements = tuple(sorted(set(elements)))
        index = {x: i for i, x in enumerate(self.elements)}
        self._index = index
        self._leq = [
            [leq(S, a, b) for b in self.elements] for a in self.elements
        ]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._index

    def leq(self, a: int, b: int) -> bool:
        return self._leq[self._index[a]][self._index[b]]

    def down_set(self, x: int) -> "OrderedSubset":
        """Principal down-set of x within this subset."""
        if x not in self._index:
            raise NotInSubsetError(f"{x} is not in the subset")
        return OrderedSubset(self.S, [y for y in self.elements if self.leq(y, x)])

    def minimals(self) -> tuple[int, ...]:
        return tuple(
            x
            for x in self.elements
            if not any(y != x and self.leq(y, x) for y in self.elements)
        )

    def is_totally_ordered(self) -> bool:
        n = len(self.elements)
        return all(
            self._leq[i][j] or self._leq[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def u_set(self) -> "OrderedSubset":
        """Elements whose down-set is a chain; keeps the same minimals."""
        return OrderedSubset(
            self.S,
            [x for x in self.elements if self.down_set(x).is_totally_ordered()],
        )

    def hasse(self) -> "HasseDiagram":
        """Cover graph by transitive reduction of the cached order."""
        covers = []
        for a in self.elements:
            for b in self.elements:
                if a == b or not self.leq(a, b):
                    continue
                if any(
                    c not in (a, b) and self.leq(a, c) and self.leq(c, b)
                    for c in self.elements
                ):
                    continue
                covers.append((a, b))
        lower_cover_count = {x: 0 for x in self.elements}
        for _, b in covers:
            lower_cover_count[b] += 1
        is_forest = all(n <= 1 for n in lower_cover_count.values())
        return HasseDiagram(self.elements, tuple(sorted(covers)), is_forest)


@dataclass(frozen=True)
class HasseDiagram:
    elements: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]
    is_forest: bool

    def to_dot(self) -> str:
        lines = ["digraph hasse {"]
        for x in self.elements:
            lines.append(f'  "{x}";')
        for a, b in self.covers:
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ExponentSupport:
    """Indices d >= 2 with non-zero exponent that are not minimal generators.

    ``exact`` is True when the semigroup polynomial factors completely into
    cyclotomic polynomials, in which case ``members`` is the whole (finite)
    set; otherwise it is the part visible below the truncation bound.
    """

    members: tuple[int, ...]
    bound: int
    exact: bool


def exponent_support(S: NumericalSemigroup, bound: int | None = None) -> ExponentSupport:
    if bound is None:
        bound = S.default_bound
    if bound < S.default_bound:
        raise BoundTooSmallError(
            f"bound {bound} is below the default truncation {S.default_bound}"
        )
    generators = set(S.generators)
    sequence = exponent_sequence(S, bound)
    prefix_members = tuple(
        j for j in range(2, bound + 1) if sequence[j] != 0 and j not in generators
    )
    if S.is_trivial:
        return ExponentSupport((), bound, True)
    factorization = factor_into_cyclotomics(S.polynomial()) if S.is_symmetric() else None
    if factorization is None or not factorization.complete:
        return ExponentSupport(prefix_members, bound, False)
    full = exponents_from_cyclotomic_factors(factorization.factors)
    members = tuple(
        sorted(j for j, e in full.items() if j >= 2 and e != 0 and j not in generators)
    )
    assert prefix_members == tuple(j for j in members if j <= bound)
    assert all(j in S for j in members)
    return ExponentSupport(members, bound, True)


@dataclass(frozen=True)
class ResidualSeries:
    """Coefficients of the membership series after peeling a chain of factors.

    Peeling b multiplies by ``(1 - x^b)^(-e_b)`` where e_b is the number of
    R-classes of b minus one; with an empty chain the coefficients are the
    membership indicator.
    """

    chain: tuple[int, ...]
    coefficients: tuple[int, ...]
    bound: int


def residual_coefficients(
    S: NumericalSemigroup, chain, bound: int
) -> ResidualSeries:
    chain = tuple(chain)
    catalog = betti_elements(S)
    u_elements = set(OrderedSubset(S, catalog).u_set())
    for b in chain:
        if b not in u_elements:
            raise ValueError(f"{b} is not a Betti element with a chain down-set")
    for a, b in zip(chain, chain[1:]):
        if not leq(S, a, b):
            raise ChainNotSortedError(f"chain not ascending at {a}, {b}")
    coefficients = [1 if s in S else 0 for s in range(bound + 1)]
    for b in chain:
        exponent = catalog[b].nc - 1
        convolved = [0] * (bound + 1)
        for j in range(0, bound // b + 1):
            weight = comb(exponent + j - 1, j)
            if weight == 0:
                continue
            shift = j * b
            for s in range(shift, bound + 1):
                if coefficients[s - shift]:
                    convolved[s] += weight * coefficients[s - shift]
        coefficients = convolved
    return ResidualSeries(chain, tuple(coefficients), bound)


@dataclass(frozen=True)
class Classification:
    """Order-theoretic flags of the Betti set, with exponent-side cross-checks.

    ``e_forest`` is None when the exponent support is only known up to the
    truncation and no violation is visible: forest-ness of an infinite
    support cannot be decided from a prefix, and an undecided answer is
    reported as such rather than guessed.
    """

    betti_sorted: bool
    betti_divisible: bool
    unique_betti: bool
    betti_forest: bool
    e_forest: bool | None

    def to_json_dict(self) -> dict:
        return {
            "betti_sorted": self.betti_sorted,
            "betti_divisible": self.betti_divisible,
            "unique_betti": self.unique_betti,
            "betti_forest": self.betti_forest,
            "e_forest": self.e_forest,
        }


def _totally_ordered_by_divisibility(values) -> bool:
    values = sorted(values)
    return all(b % a == 0 for a, b in zip(values, values[1:]))


def classify(S: NumericalSemigroup) -> Classification:
    """Ground-truth flags from the Betti catalog.

    The exponent-side equivalents are evaluated as consistency checks: an
    incomparable pair in the truncated support certifies non-sortedness, and
    for finitely supported sequences the equivalences are checked exactly.
    """
    catalog = betti_elements(S)
    betti = OrderedSubset(S, catalog)
    betti_sorted = betti.is_totally_ordered()
    betti_divisible = _totally_ordered_by_divisibility(betti.elements)
    unique_betti = len(betti) == 1
    betti_forest = betti.hasse().is_forest

    support = exponent_support(S)
    support_set = OrderedSubset(S, support.members)
    if not support_set.is_totally_ordered():
        assert not betti_sorted, "incomparable support pair on a sorted Betti set"
    if support.exact:
        assert betti_sorted == support_set.is_totally_ordered()
        assert betti_divisible == _totally_ordered_by_divisibility(support.members)
        assert unique_betti == (len(support.members) == 1)
        e_forest = support_set.hasse().is_forest
    else:
        prefix_forest = support_set.hasse().is_forest
        e_forest = None if prefix_forest else False
    return Classification(betti_sorted, betti_divisible, unique_betti, betti_forest, e_forest)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    statement: str
    passed: bool
    witness: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "statement_ref": self.statement,
            "pass": self.passed,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class TheoremReport:
    generators: tuple[int, ...]
    bound: int
    checks: tuple[CheckResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "bound": self.bound,
            "checks": [c.to_json_dict() for c in self.checks],
        }


def _check_exponent_values(
    S: NumericalSemigroup, sequence: ExponentSequence, counts: list[int]
) -> CheckResult:
    check_id = "exponent-values-at-generators-and-gaps"
    statement = (
        "e_1 = 1; e_j = 0 at gaps j >= 2; e_j = -1 at minimal generators; "
        "e_j = 0 at non-generators with a unique factorization"
    )
    generators = set(S.generators)
    witness = None
    if sequence[1] != 1:
        witness = f"e_1 = {sequence[1]}"
    for j in range(2, sequence.bound + 1):
        if witness:
            break
        e = sequence[j]
        if j not in S:
            if e != 0:
                witness = f"gap {j} has e = {e}"
        elif j in generators:
            if e != -1:
                witness = f"generator {j} has e = {e}"
        elif counts[j] == 1 and e != 0:
            witness = f"unique-factorization element {j} has e = {e}"
    return CheckResult(check_id, statement, witness is None, witness)


def verify_theorems(S: NumericalSemigroup, bound: int | None = None) -> TheoremReport:
    """Re-verify the exponent/Betti structure theorems on one semigroup.

    Checks, in order: the exponent values at generators, gaps and
    unique-factorization elements; the agreement of minimal Betti elements
    with minimal support indices together with their exponent value; the
    agreement of the chain-down-set parts together with e = nc - 1 there; and
    that every element with two factorizations dominates a support index.
    """
    if bound is None:
        bound = S.default_bound
    if bound < S.default_bound:
        raise BoundTooSmallError(
            f"bound {bound} is below the default truncation {S.default_bound}"
        )
    if S.is_trivial:
        checks = tuple(
            CheckResult(check_id, "vacuous for the trivial semigroup", True)
            for check_id in (
                "exponent-values-at-generators-and-gaps",
                "minimal-betti-vs-minimal-support",
                "chain-betti-vs-chain-support",
                "support-below-every-multifactor-element",
            )
        )
        return TheoremReport(S.generators, bound, checks)

    sequence = exponent_sequence(S, bound)
    counts = denumerant_series(S, bound)
    catalog = betti_elements(S)
    betti = OrderedSubset(S, catalog)
    support = exponent_support(S, bound)
    prefix_members = [j for j in support.members if j <= bound]
    support_set = OrderedSubset(S, prefix_members)

    checks = [_check_exponent_values(S, sequence, counts)]

    witness = None
    betti_minimals = betti.minimals()
    support_minimals = support_set.minimals()
    if set(betti_minimals) != set(support_minimals):
        witness = f"minimals differ: {betti_minimals} vs {support_minimals}"
    else:
        for alpha in betti_minimals:
            isolated = catalog[alpha].isolated_count
            if not (sequence[alpha] == counts[alpha] - 1 == isolated - 1):
                witness = (
                    f"at {alpha}: e = {sequence[alpha]}, "
                    f"denumerant - 1 = {counts[alpha] - 1}, isolated - 1 = {isolated - 1}"
                )
                break
    checks.append(
        CheckResult(
            "minimal-betti-vs-minimal-support",
            "minimal Betti elements = minimal support indices, "
            "with e = denumerant - 1 = isolated count - 1 there",
            witness is None,
            witness,
        )
    )

    witness = None
    betti_u = betti.u_set()
    support_u = support_set.u_set()
    if set(betti_u) != set(support_u):
        witness = f"chain parts differ: {tuple(betti_u)} vs {tuple(support_u)}"
    else:
        for b in betti_u:
            if sequence[b] != catalog[b].nc - 1:
                witness = f"at {b}: e = {sequence[b]}, classes - 1 = {catalog[b].nc - 1}"
                break
    checks.append(
        CheckResult(
            "chain-betti-vs-chain-support",
            "Betti elements with chain down-sets = support indices with chain "
            "down-sets, with e = R-class count - 1 there",
            witness is None,
            witness,
        )
    )

    witness = None
    for s in range(bound + 1):
        if counts[s] >= 2 and not any(leq(S, d, s) for d in prefix_members):
            witness = f"{s} has {counts[s]} factorizations but no support index below"
            break
    checks.append(
        CheckResult(
            "support-below-every-multifactor-element",
            "every element with at least two factorizations has a support "
            "index below it",
            witness is None,
            witness,
        )
    )
    return TheoremReport(S.generators, bound, tuple(checks))
