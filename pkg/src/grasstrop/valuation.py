"""Weight valuations and maximal-rank valuations attached to a tree.

Every edge weighting r induces a weight val_r on Pluecker polynomials:
expand f over the crossing-free monomials of the tree's planar leaf
order, then take the maximum of <d(r), alpha> over the surviving
exponent vectors alpha.  Refining the single weight to the full vector
of per-edge path counts, compared along a chosen edge order, gives the
rank 2n-3 valuation of the tree; its values land in the edge-weight
semigroup, one vector per polynomial.

Values here follow the positive max convention: larger weight means
higher order of vanishing along the boundary divisors.  Expanding in the
planar frame of the tree first is what makes both maps multiplicative;
taking the maximum over an arbitrary presentation of f would only give
an upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .plucker import PlueckerMonomial, PlueckerPolynomial, straighten
from .semigroup import SigmaWeight
from .trees import EdgeId, LabeledTree, leaf_path
from .tropical import (
    DissimilarityVector,
    EdgeWeighting,
    dissimilarity,
    is_tropical_point,
    leaf_pairs,
    reconstruct_tree,
)


@dataclass(frozen=True)
class ValueVector:
    """Integer vector indexed by the edges of a tree, read in a fixed order."""

    tree: LabeledTree
    order: tuple[EdgeId, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.tree, self.order)
        if len(self.values) != len(self.order):
            raise ValueError(f"expected {len(self.order)} entries, got {len(self.values)}")

    @property
    def v(self) -> dict[EdgeId, int]:
        return dict(zip(self.order, self.values))

    def value(self, eid: EdgeId) -> int:
        try:
            return self.values[self.order.index(eid)]
        except ValueError:
            raise ValueError(f"unknown edge id {eid!r}") from None

    def __add__(self, other: "ValueVector") -> "ValueVector":
        if self.tree != other.tree or self.order != other.order:
            raise ValueError("can only add value vectors on the same tree and order")
        return ValueVector(
            self.tree, self.order, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def as_weight(self) -> SigmaWeight:
        return SigmaWeight.of(self.tree, dict(zip(self.order, self.values)))


@dataclass(frozen=True)
class ValuationMatrix:
    """0/1 matrix: rows are edges in a fixed order, columns leaf pairs."""

    tree: LabeledTree
    order: tuple[EdgeId, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return leaf_pairs(self.tree.n)

    def entry(self, eid: EdgeId, i: int, j: int) -> int:
        r = self.order.index(eid)
        c = self.pairs.index((min(i, j), max(i, j)))
        return self.rows[r][c]

    def column(self, i: int, j: int) -> tuple[int, ...]:
        c = self.pairs.index((min(i, j), max(i, j)))
        return tuple(row[c] for row in self.rows)

    def to_tsv(self) -> str:
        header = "edge\t" + "\t".join(f"p[{i},{j}]" for i, j in self.pairs)
        lines = [header]
        for eid, row in zip(self.order, self.rows):
            lines.append(eid + "\t" + "\t".join(str(x) for x in row))
        return "\n".join(lines) + "\n"


def _check_order(t: LabeledTree, order: Sequence[EdgeId]) -> tuple[EdgeId, ...]:
    order = tuple(order)
    if sorted(order) != sorted(t.edge_ids):
        raise ValueError("edge order must be a permutation of the tree's edge ids")
    return order


def _check_labels(t: LabeledTree, f: PlueckerPolynomial) -> None:
    if f.max_label() > t.n:
        raise ValueError(
            f"polynomial uses leaf label {f.max_label()} but the tree has n={t.n}"
        )


def monomial_weight(t: LabeledTree, m: PlueckerMonomial) -> SigmaWeight:
    """The edge weight sum alpha_ij * omega(i, j) of a monomial."""
    vals = {e: 0 for e in t.edge_ids}
    for (i, j), exp in m.exps:
        for e in leaf_path(t, i, j):
            vals[e] += exp
    return SigmaWeight.of(t, vals)


def tropical_weight(r: EdgeWeighting, f: PlueckerPolynomial) -> Fraction:
    """Weight of f under the edge weighting r (a rank-1 valuation value)."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no weight")
    t = r.tree
    _check_labels(t, f)
    g = straighten(f, order=t.planar_leaf_order)
    d = dissimilarity(r)
    best: Fraction | None = None
    for m, _ in g.terms:
        w = sum((d.value(i, j) * exp for (i, j), exp in m.exps), Fraction(0))
        if best is None or w > best:
            best = w
    assert best is not None, "straightening a nonzero polynomial gave zero"
    return best


def rank_valuation(t: LabeledTree, o: Sequence[EdgeId], f: PlueckerPolynomial) -> ValueVector:
    """Extremal edge-weight vector of f's planar expansion, read along o."""
    if not t.is_trivalent:
        raise ValueError("rank valuations are defined for trivalent trees")
    order = _check_order(t, o)
    if f.is_zero:
        raise ValueError("the zero polynomial has no valuation")
    _check_labels(t, f)
    g = straighten(f, order=t.planar_leaf_order)
    best: tuple[int, ...] | None = None
    for m, _ in g.terms:
        sw = monomial_weight(t, m)
        vec = tuple(sw.value(e) for e in order)
        if best is None or vec > best:
            best = vec
    assert best is not None, "straightening a nonzero polynomial gave zero"
    return ValueVector(t, order, best)


def valuation_matrix(t: LabeledTree, o: Sequence[EdgeId]) -> ValuationMatrix:
    """Row e, column {i,j} holds 1 exactly when e lies on the path i to j."""
    if not t.is_trivalent:
        raise ValueError("valuation matrices are defined for trivalent trees")
    order = _check_order(t, o)
    paths = {pr: leaf_path(t, *pr) for pr in leaf_pairs(t.n)}
    rows = tuple(
        tuple(1 if e in paths[pr] else 0 for pr in leaf_pairs(t.n)) for e in order
    )
    return ValuationMatrix(t, order, rows)


def quasi_valuation_weight(w: DissimilarityVector, f: PlueckerPolynomial) -> Fraction:
    """Weight of f at a tropical point, via its tree realization.

    Only points satisfying the four-point condition are supported; the
    weight is computed on the reconstructed tree, where it is an honest
    valuation rather than a quasi-valuation.
    """
    ok, witnesses = is_tropical_point(w)
    if not ok:
        bad = witnesses[0]
        raise ValueError(
            f"weight vector is not a tropical point ({bad.describe()}); "
            "weights outside the tropical variety are not supported"
        )
    _, r = reconstruct_tree(w)
    return tropical_weight(r, f)
