"""Tour the tropical and semigroup tools on six-leaf trees.

Run with `python3 demos/tropical_tour.py`.  Output is deterministic.
"""

from fractions import Fraction

from grasstrop import (
    DissimilarityVector,
    EdgeWeighting,
    decompose,
    dissimilarity,
    enumerate_trivalent,
    graded_count,
    in_semigroup,
    is_tropical_point,
    leaf_pairs,
    omega,
    reconstruct_tree,
    tree_to_newick,
)


def main() -> None:
    trees = enumerate_trivalent(6)
    print(f"{len(trees)} trivalent trees on 6 leaves; the first is the caterpillar:")
    t = trees[0]
    print(f"  {tree_to_newick(t)}")

    weights = {e: Fraction(3, 2) if e.startswith("e") else Fraction(1) for e in t.edge_ids}
    r = EdgeWeighting.of(t, weights)
    d = dissimilarity(r)
    print()
    print("Dissimilarity vector of a weighting with 1 on leaves, 3/2 inside:")
    print(f"  d(1,2) = {d.value(1, 2)}   d(1,6) = {d.value(1, 6)}   d(5,6) = {d.value(5, 6)}")
    ok, _ = is_tropical_point(d)
    print(f"  four-point condition holds: {ok}")
    t2, r2 = reconstruct_tree(d)
    print(f"  round trip recovers tree and weights: {t2 == t and r2 == r}")

    bumped = {pr: d.value(*pr) for pr in leaf_pairs(6)}
    bumped[(1, 6)] += 1
    ok2, witnesses = is_tropical_point(DissimilarityVector.of(6, bumped))
    print()
    print("Adding 1 to d(1,6) alone breaks it:")
    print(f"  four-point condition holds: {ok2}")
    print(f"  witness: {witnesses[0].describe()}")

    print()
    print("Value semigroup of the caterpillar:")
    s = omega(t, 1, 4) + omega(t, 2, 3) + omega(t, 5, 6)
    print(f"  s = omega(1,4) + omega(2,3) + omega(5,6) = {s.values}")
    print(f"  in the semigroup: {in_semigroup(t, s)}")
    pairs = ", ".join(f"({i},{j})" for i, j in decompose(t, s))
    print(f"  planar decomposition: {pairs}")

    print()
    print("Graded dimensions agree across all 105 trees:")
    for ddeg in (1, 2, 3):
        counts = {graded_count(u, plucker_degree=ddeg) for u in trees}
        print(f"  degree {ddeg}: {sorted(counts)}")

    print()
    print("Box counts with entries at most 3 depend on the tree shape:")
    box = sorted({graded_count(u, box_bound=3) for u in trees})
    print(f"  distinct counts over all trees: {box}")
    print(f"  caterpillar: {graded_count(t, box_bound=3)}")


if __name__ == "__main__":
    main()
