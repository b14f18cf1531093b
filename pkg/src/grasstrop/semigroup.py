"""Edge-weight semigroups of trivalent trees.

A weight s assigns a nonnegative integer to every edge.  At an internal
vertex of a trivalent tree the three incident values must have even sum
and satisfy the triangle inequality; the weights passing that test at
every vertex form the semigroup of the tree.  Path indicator weights
omega(i, j) generate it, and a weight decomposes into a multiset of leaf
pairs by splitting each edge value into strands and matching them around
every vertex of a planar embedding.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

from .trees import EdgeId, LabeledTree, leaf_path, tree_from_json_dict, tree_to_json_dict


def pieri_dim(i: int, j: int, k: int) -> int:
    """Multiplicity of the trivial factor in V(i) (x) V(j) (x) V(k) for SL2.

    Equals 1 when i+j+k is even and |i-j| <= k <= i+j, else 0.
    """
    if i < 0 or j < 0 or k < 0:
        raise ValueError(f"weights must be nonnegative, got ({i}, {j}, {k})")
    if (i + j + k) % 2 != 0:
        return 0
    return 1 if abs(i - j) <= k <= i + j else 0


@lru_cache(maxsize=None)
def _tensor_invariant_dim(vals: tuple[int, ...]) -> int:
    """Invariant dimension of V(a1) (x) ... (x) V(ak), by Clebsch-Gordan folding."""
    if not vals:
        return 1
    state = {vals[0]: 1}
    for a in vals[1:]:
        nxt: dict[int, int] = {}
        for c, mult in state.items():
            for out in range(abs(c - a), c + a + 1, 2):
                nxt[out] = nxt.get(out, 0) + mult
        state = nxt
    return state.get(0, 0)


@dataclass(frozen=True)
class SigmaWeight:
    """Nonnegative integer per edge of a tree, in tree.edge_ids order."""

    tree: LabeledTree
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.tree.edge_ids):
            raise ValueError(
                f"expected {len(self.tree.edge_ids)} values, got {len(self.values)}"
            )
        for eid, v in zip(self.tree.edge_ids, self.values):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"edge {eid}: weight must be a nonnegative integer, got {v!r}")

    @classmethod
    def of(cls, tree: LabeledTree, values: Mapping[EdgeId, int]) -> "SigmaWeight":
        """Build from a (possibly partial) map; missing edges get 0."""
        bad = set(values) - set(tree.edge_ids)
        if bad:
            raise ValueError(f"unknown edge ids: {sorted(bad)}")
        return cls(tree, tuple(int(values.get(e, 0)) for e in tree.edge_ids))

    def value(self, eid: EdgeId) -> int:
        try:
            return self.values[self.tree.edge_ids.index(eid)]
        except ValueError:
            raise ValueError(f"unknown edge id {eid!r}") from None

    def as_dict(self) -> dict[EdgeId, int]:
        return dict(zip(self.tree.edge_ids, self.values))

    def __add__(self, other: "SigmaWeight") -> "SigmaWeight":
        if self.tree != other.tree:
            raise ValueError("cannot add weights on different trees")
        return SigmaWeight(self.tree, tuple(a + b for a, b in zip(self.values, other.values)))

    def scaled(self, k: int) -> "SigmaWeight":
        if k < 0:
            raise ValueError("scale factor must be nonnegative")
        return SigmaWeight(self.tree, tuple(k * v for v in self.values))

    def to_json_dict(self) -> dict:
        return {
            "tree": tree_to_json_dict(self.tree),
            "s": {e: v for e, v in zip(self.tree.edge_ids, self.values)},
        }

    @classmethod
    def from_json_dict(cls, obj: Mapping) -> "SigmaWeight":
        try:
            tree = tree_from_json_dict(obj["tree"])
            raw = obj["s"]
        except KeyError as exc:
            raise ValueError(f"weight JSON needs key {exc}") from exc
        return cls.of(tree, {str(k): int(v) for k, v in raw.items()})


def _vertex_values(t: LabeledTree, s: SigmaWeight, v: int) -> tuple[int, ...]:
    return tuple(s.value(t.edge_id_of(v, w)) for w in t.adjacency[v])


def invariant_dim(t: LabeledTree, s: SigmaWeight) -> int:
    """Product over internal vertices of local tensor invariant dimensions."""
    if s.tree != t:
        raise ValueError("weight does not live on this tree")
    out = 1
    for v in t.internal_vertices:
        out *= _tensor_invariant_dim(tuple(sorted(_vertex_values(t, s, v))))
        if out == 0:
            return 0
    return out


def _violating_vertex(t: LabeledTree, s: SigmaWeight) -> int | None:
    for v in t.internal_vertices:
        a, b, c = _vertex_values(t, s, v)
        if (a + b + c) % 2 != 0 or not (abs(a - b) <= c <= a + b):
            return v
    return None


def in_semigroup(t: LabeledTree, s: SigmaWeight) -> bool:
    """Parity and triangle test at every internal vertex (trivalent trees)."""
    if not t.is_trivalent:
        raise ValueError("semigroup membership is defined for trivalent trees")
    if s.tree != t:
        raise ValueError("weight does not live on this tree")
    return _violating_vertex(t, s) is None


def omega(t: LabeledTree, i: int, j: int) -> SigmaWeight:
    """Indicator weight of the path between leaves i and j."""
    path = leaf_path(t, i, j)
    return SigmaWeight(t, tuple(1 if e in path else 0 for e in t.edge_ids))


@dataclass(frozen=True)
class PairMultiset:
    """Multiset of leaf pairs, stored as a sorted tuple with repetitions."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for i, j in self.pairs:
            if i >= j:
                raise ValueError(f"pairs must be increasing, got ({i}, {j})")
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    def counts(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for p in self.pairs:
            out[p] = out.get(p, 0) + 1
        return out

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def to_json_list(self) -> list[list[int]]:
        return [[i, j, m] for (i, j), m in sorted(self.counts().items())]


def _rooted_trivalent(t: LabeledTree):
    """Parent map, and per internal vertex its (left, right) children by min leaf."""
    parent, children, minleaf = t._rooted
    lr: dict[int, tuple[int, int]] = {}
    for v in t.internal_vertices:
        kids = children[v]
        assert len(kids) == 2, "rooted trivalent vertex must have two children"
        lr[v] = (kids[0], kids[1])
    return parent, lr


def decompose(t: LabeledTree, s: SigmaWeight) -> PairMultiset:
    """Split a semigroup element into path indicators by strand tracing.

    Each edge value is laid out as that many strands in a planar picture
    of the tree; at every vertex the strands are matched greedily without
    crossings, and each resulting leaf-to-leaf strand contributes one
    pair.  The result sums back to s and is crossing-free in the planar
    leaf order of the tree.
    """
    if not t.is_trivalent:
        raise ValueError("decomposition is defined for trivalent trees")
    if not in_semigroup(t, s):
        v = _violating_vertex(t, s)
        vals = _vertex_values(t, s, v)
        raise ValueError(
            f"weight is not in the semigroup: vertex {v} sees values {vals} "
            "(odd sum or triangle inequality fails)"
        )
    parent, lr = _rooted_trivalent(t)
    root_child = t.adjacency[1][0]

    # edges are keyed by their endpoint away from the root
    def sval(v: int) -> int:
        return s.value(t.edge_id_of(v, parent[v]))

    def step(v: int, slot: int, down: bool) -> tuple[int, int, bool] | int:
        """One move across a vertex; returns the next state or the final leaf."""
        if down:
            if v <= t.n:
                return v
            left, right = lr[v]
            a, b, c = sval(v), sval(left), sval(right)
            x_ab = (a + b - c) // 2
            if slot < x_ab:
                return left, slot, True
            return right, c - a + slot, True
        u = parent[v]
        if u == 1:
            return 1
        left, right = lr[u]
        a, b, c = sval(u), sval(left), sval(right)
        x_ab = (a + b - c) // 2
        x_bc = (b + c - a) // 2
        if v == left:
            if slot < x_ab:
                return u, slot, False
            return right, b - 1 - slot, True
        if slot >= c - (a + c - b) // 2:
            return u, a - c + slot, False
        return left, b - 1 - slot, True

    visited: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []
    for leaf in t.leaves:
        key = root_child if leaf == 1 else leaf
        down = leaf == 1
        for slot in range(sval(key)):
            if (key, slot) in visited:
                continue
            state: tuple[int, int, bool] | int = (key, slot, down)
            visited.add((key, slot))
            while not isinstance(state, int):
                v, sl, d = state
                state = step(v, sl, d)
                if not isinstance(state, int):
                    visited.add(state[:2])
            end = state
            assert end != leaf, "strand returned to its starting leaf"
            pairs.append((min(leaf, end), max(leaf, end)))
    out = PairMultiset(tuple(pairs))

    total = SigmaWeight(t, tuple(0 for _ in t.edge_ids))
    for i, j in out:
        total = total + omega(t, i, j)
    assert total == s, "strand decomposition does not sum back to the weight"
    return out


def graded_count(
    t: LabeledTree, *, plucker_degree: int | None = None, box_bound: int | None = None
) -> int:
    """Count semigroup elements in one graded piece.

    Exactly one of the two keyword modes must be given: `plucker_degree=d`
    counts weights whose leaf values sum to 2d, `box_bound=m` counts
    weights with every edge value at most m.
    """
    if (plucker_degree is None) == (box_bound is None):
        raise ValueError("give exactly one of plucker_degree= or box_bound=")
    if not t.is_trivalent:
        raise ValueError("graded counts are defined for trivalent trees")
    parent, lr = _rooted_trivalent(t)
    root_child = t.adjacency[1][0]

    if box_bound is not None:
        m = box_bound
        if m < 0:
            raise ValueError(f"box bound must be nonnegative, got {m}")

        def table(v: int) -> dict[int, int]:
            if v <= t.n:
                return {a: 1 for a in range(m + 1)}
            left, right = lr[v]
            tl, tr = table(left), table(right)
            out: dict[int, int] = {}
            for b, cb in tl.items():
                for c, cc in tr.items():
                    lo, hi = abs(b - c), min(b + c, m)
                    for a in range(lo, hi + 1, 2):
                        out[a] = out.get(a, 0) + cb * cc
            return out

        return sum(table(root_child).values())

    d = plucker_degree
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    top = 2 * d

    def table_deg(v: int) -> dict[tuple[int, int], int]:
        """(edge value, leaf sum below) -> count, leaf sum capped at 2d."""
        if v <= t.n:
            return {(a, a): 1 for a in range(top + 1)}
        left, right = lr[v]
        tl, tr = table_deg(left), table_deg(right)
        out: dict[tuple[int, int], int] = {}
        for (b, sb), cb in tl.items():
            for (c, sc), cc in tr.items():
                stot = sb + sc
                if stot > top:
                    continue
                lo, hi = abs(b - c), min(b + c, top)
                for a in range(lo, hi + 1, 2):
                    key = (a, stot)
                    out[key] = out.get(key, 0) + cb * cc
        return out

    tbl = table_deg(root_child)
    return sum(cnt for (a, stot), cnt in tbl.items() if a + stot == top)


def gorenstein_witness_check(t: LabeledTree, samples: int, *, seed: int = 0) -> bool:
    """Sample interior lattice points (tau, m) and test the canonical shift.

    Interior means every edge value is strictly between 0 and m and all
    triangle inequalities are strict; the check is that (tau - 2, m - 3)
    always lands back in the graded semigroup.
    """
    if not t.is_trivalent:
        raise ValueError("the witness check is defined for trivalent trees")
    rng = random.Random(seed)
    edge_count = len(t.edge_ids)
    index = {eid: i for i, eid in enumerate(t.edge_ids)}
    corners = tuple(
        tuple(index[t.edge_id_of(v, u)] for u in t.adjacency[v])
        for v in t.internal_vertices
    )

    def interior(vals: tuple[int, ...], m: int) -> bool:
        if any(v <= 0 or v >= m for v in vals):
            return False
        for ia, ib, ic in corners:
            a, b, c = vals[ia], vals[ib], vals[ic]
            if (a + b + c) % 2 != 0 or not (abs(a - b) < c < a + b):
                return False
        return True

    for _ in range(samples):
        for _attempt in range(20000):
            m = rng.randint(3, 12)
            vals = tuple(rng.randint(1, m - 1) for _ in range(edge_count))
            if interior(vals, m):
                break
        else:
            raise RuntimeError("could not sample an interior point; ranges too tight")
        shifted = tuple(v - 2 for v in vals)
        for ia, ib, ic in corners:
            a, b, c = shifted[ia], shifted[ib], shifted[ic]
            if (a + b + c) % 2 != 0 or not (abs(a - b) <= c <= a + b):
                return False
        if any(v > m - 3 for v in shifted):
            return False
    return True
