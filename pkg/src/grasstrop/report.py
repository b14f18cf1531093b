"""The four-leaf worked example, computed live and frozen as a golden text.

Everything below is recomputed from the library on every run: the three
trivalent trees, the lineality and cone rays of the tropical
Grassmannian of planes in 4-space, the valuation matrix of the first
tree, the values of the Pluecker generators, the monomial map to edge
variables, the kernel binomial, and the degree-two dimension check of
the initial ideal.  The result is compared byte for byte against the
golden text so any behavioral drift in the library surfaces as a diff.
"""

from __future__ import annotations

import difflib
from fractions import Fraction

from .ideals import (
    initial_form,
    initial_ideal_hilbert_check,
    internal_indicator,
    monomial_map,
    toric_kernel_membership,
)
from .plucker import (
    PlueckerMonomial,
    format_polynomial,
    p,
    three_term_relation,
)
from .trees import enumerate_trivalent, tree_to_newick
from .tropical import EdgeWeighting, dissimilarity, reconstruct_tree
from .valuation import rank_valuation, valuation_matrix


def _vec(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _split_text(t) -> str:
    (away,) = t.internal_splits
    near = sorted(set(t.leaves) - set(away))
    return (
        "{" + ",".join(str(i) for i in near) + "}|{"
        + ",".join(str(i) for i in sorted(away)) + "}"
    )


def build_report() -> str:
    lines: list[str] = []
    out = lines.append

    out("Grassmannian of planes in 4-space: trees, cones, and valuations")
    out("================================================================")
    out("")

    trees = enumerate_trivalent(4)
    out("Trivalent trees on 4 leaves, in canonical order:")
    for k, t in enumerate(trees, start=1):
        out(f"  sigma{k}: split {_split_text(t)}  newick {tree_to_newick(t)}")
    out("")

    t1 = trees[0]
    out("Pair order for all vectors below: 12, 13, 14, 23, 24, 34.")
    out("")
    out("Lineality rays (dissimilarity vectors of the leaf indicators):")
    for i in range(1, 5):
        r = EdgeWeighting.of(t1, {f"l{i}": Fraction(1)})
        out(f"  l{i}: {_vec(dissimilarity(r).values)}")
    out("")

    rint = internal_indicator(t1)
    dint = dissimilarity(rint)
    out("Ray of the internal edge of sigma1:")
    out(f"  e3-4: {_vec(dint.values)}")
    rt, rw = reconstruct_tree(dint)
    back = "sigma1" if rt == t1 else "a different tree"
    out(
        f"  reconstructs to {back} with weight {rw.weight('e3-4')} on e3-4"
        f" and 0 on every leaf"
    )
    out("")

    order = t1.edge_ids
    out("Valuation matrix of sigma1, edge order " + " > ".join(order) + ":")
    for row in valuation_matrix(t1, order).to_tsv().splitlines():
        out("  " + row)
    out("")

    out("Values of the Pluecker generators under the rank valuation:")
    pairs = [(i, j) for i in range(1, 5) for j in range(i + 1, 5)]
    matrix = valuation_matrix(t1, order)
    consistent = True
    for i, j in pairs:
        vv = rank_valuation(t1, order, p(i, j))
        out(f"  v(p[{i},{j}]) = {_vec(vv.values)}")
        consistent = consistent and matrix.column(i, j) == vv.values
    out(f"  columns of the matrix match these values: {'yes' if consistent else 'NO'}")
    out("")

    out("Monomial map of sigma1 into the edge variables:")
    for i, j in pairs:
        em = monomial_map(t1, PlueckerMonomial.of([(i, j)]))
        out(f"  p[{i},{j}] -> {em.format()}")
    binom = p(1, 3) * p(2, 4) - p(1, 4) * p(2, 3)
    out(f"Kernel binomial: {format_polynomial(binom)}")
    out(f"  lies in the kernel: {'yes' if toric_kernel_membership(t1, binom) else 'NO'}")
    init = initial_form(three_term_relation(1, 2, 3, 4), dint)
    matches = init == binom or init == binom.scaled(Fraction(-1))
    out(
        "  equals the initial form of the three-term relation up to sign: "
        + ("yes" if matches else "NO")
    )
    out("")

    rep = initial_ideal_hilbert_check(t1, 2)
    row = rep.degrees[-1]
    out("Initial ideal dimension check for sigma1 in degree 2:")
    out(
        f"  {row.monomials} monomials, span of the binomial ideal {row.ideal_dim},"
        f" quotient {row.quotient}, semigroup count {row.semigroup_count}:"
        f" {'PASS' if row.passed else 'FAIL'}"
    )
    out("")
    return "\n".join(lines)


GOLDEN = """\
Grassmannian of planes in 4-space: trees, cones, and valuations
================================================================

Trivalent trees on 4 leaves, in canonical order:
  sigma1: split {1,2}|{3,4}  newick (1,2,(3,4));
  sigma2: split {1,3}|{2,4}  newick (1,(2,4),3);
  sigma3: split {1,4}|{2,3}  newick (1,(2,3),4);

Pair order for all vectors below: 12, 13, 14, 23, 24, 34.

Lineality rays (dissimilarity vectors of the leaf indicators):
  l1: (1, 1, 1, 0, 0, 0)
  l2: (1, 0, 0, 1, 1, 0)
  l3: (0, 1, 0, 1, 0, 1)
  l4: (0, 0, 1, 0, 1, 1)

Ray of the internal edge of sigma1:
  e3-4: (0, 1, 1, 1, 1, 0)
  reconstructs to sigma1 with weight 1 on e3-4 and 0 on every leaf

Valuation matrix of sigma1, edge order l1 > l2 > l3 > l4 > e3-4:
  edge	p[1,2]	p[1,3]	p[1,4]	p[2,3]	p[2,4]	p[3,4]
  l1	1	1	1	0	0	0
  l2	1	0	0	1	1	0
  l3	0	1	0	1	0	1
  l4	0	0	1	0	1	1
  e3-4	0	1	1	1	1	0

Values of the Pluecker generators under the rank valuation:
  v(p[1,2]) = (1, 1, 0, 0, 0)
  v(p[1,3]) = (1, 0, 1, 0, 1)
  v(p[1,4]) = (1, 0, 0, 1, 1)
  v(p[2,3]) = (0, 1, 1, 0, 1)
  v(p[2,4]) = (0, 1, 0, 1, 1)
  v(p[3,4]) = (0, 0, 1, 1, 0)
  columns of the matrix match these values: yes

Monomial map of sigma1 into the edge variables:
  p[1,2] -> y[l1]*y[l2]
  p[1,3] -> y[l1]*y[l3]*y[e3-4]
  p[1,4] -> y[l1]*y[l4]*y[e3-4]
  p[2,3] -> y[l2]*y[l3]*y[e3-4]
  p[2,4] -> y[l2]*y[l4]*y[e3-4]
  p[3,4] -> y[l3]*y[l4]
Kernel binomial: p[1,3]*p[2,4] - p[1,4]*p[2,3]
  lies in the kernel: yes
  equals the initial form of the three-term relation up to sign: yes

Initial ideal dimension check for sigma1 in degree 2:
  21 monomials, span of the binomial ideal 1, quotient 20, semigroup count 20: PASS
"""


def check_report() -> tuple[bool, str]:
    """Compare the live report with the golden text.

    Returns (ok, text): the report itself when byte-identical, otherwise
    a unified diff from golden to live.
    """
    live = build_report()
    if live == GOLDEN:
        return True, live
    diff = difflib.unified_diff(
        GOLDEN.splitlines(keepends=True),
        live.splitlines(keepends=True),
        fromfile="golden",
        tofile="live",
    )
    return False, "".join(diff)
