"""Polynomials in the Pluecker variables p_ij and the straightening law.

Variables are indexed by pairs i < j of positive integers.  For four
labels i < j < k < l the determinantal identity

    p_ik * p_jl = p_ij * p_kl + p_il * p_jk

lets us rewrite any product containing a crossing pair of chords into
products that do not cross.  Crossing is judged against a circular order
of the labels; the default is 1..n, and planar trees pass their own leaf
order.  Each rewrite strictly lowers the total number of crossing chord
pairs, so straightening terminates, and the crossing-free expansion it
lands on is unique.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Pair = tuple[int, int]


def _check_pair(p: Pair) -> Pair:
    i, j = p
    if not (isinstance(i, int) and isinstance(j, int)) or i < 1 or j < 1:
        raise ValueError(f"variable indices must be positive integers, got ({i}, {j})")
    if i >= j:
        raise ValueError(f"variable indices must be increasing, got ({i}, {j})")
    return (i, j)


@dataclass(frozen=True)
class PlueckerMonomial:
    """Product of variables p_ij with positive integer exponents."""

    exps: tuple[tuple[Pair, int], ...]

    def __post_init__(self) -> None:
        seen: dict[Pair, int] = {}
        for p, e in self.exps:
            p = _check_pair(tuple(p))
            if not isinstance(e, int) or e <= 0:
                raise ValueError(f"exponent of p{p} must be a positive integer, got {e!r}")
            seen[p] = seen.get(p, 0) + e
        object.__setattr__(self, "exps", tuple(sorted(seen.items())))

    @classmethod
    def of(cls, data: Mapping[Pair, int] | Iterable[Pair]) -> "PlueckerMonomial":
        """From an exponent map, or from a list of pairs with repetition."""
        if isinstance(data, Mapping):
            return cls(tuple((p, e) for p, e in data.items() if e != 0))
        return cls(tuple((tuple(p), 1) for p in data))

    @classmethod
    def one(cls) -> "PlueckerMonomial":
        return cls(())

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def is_constant(self) -> bool:
        return not self.exps

    def expanded(self) -> tuple[Pair, ...]:
        """The variables with repetition, sorted."""
        out: list[Pair] = []
        for p, e in self.exps:
            out.extend([p] * e)
        return tuple(out)

    def as_dict(self) -> dict[Pair, int]:
        return dict(self.exps)

    def support(self) -> tuple[Pair, ...]:
        return tuple(p for p, _ in self.exps)

    def max_label(self) -> int:
        return max((j for (_, j), _ in self.exps), default=0)

    def __mul__(self, other: "PlueckerMonomial") -> "PlueckerMonomial":
        merged = self.as_dict()
        for p, e in other.exps:
            merged[p] = merged.get(p, 0) + e
        return PlueckerMonomial(tuple(merged.items()))


def _mon_key(m: PlueckerMonomial) -> tuple[int, tuple[tuple[Pair, int], ...]]:
    """Sort key: by degree, then lexicographically on the exponent tuple."""
    return (m.degree, m.exps)


@dataclass(frozen=True)
class PlueckerPolynomial:
    """Linear combination of monomials with nonzero rational coefficients."""

    terms: tuple[tuple[PlueckerMonomial, Fraction], ...]

    def __post_init__(self) -> None:
        merged: dict[PlueckerMonomial, Fraction] = {}
        for m, c in self.terms:
            c = Fraction(c)
            if c != 0:
                merged[m] = merged.get(m, Fraction(0)) + c
        clean = tuple(
            (m, c)
            for m, c in sorted(merged.items(), key=lambda mc: (-mc[0].degree, mc[0].exps))
            if c != 0
        )
        object.__setattr__(self, "terms", clean)

    @classmethod
    def of(cls, data: Mapping[PlueckerMonomial, object] | Iterable[tuple[PlueckerMonomial, object]]) -> "PlueckerPolynomial":
        items = data.items() if isinstance(data, Mapping) else data
        return cls(tuple((m, Fraction(str(c))) for m, c in items))

    @classmethod
    def zero(cls) -> "PlueckerPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: object) -> "PlueckerPolynomial":
        return cls(((PlueckerMonomial.one(), Fraction(str(c))),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: PlueckerMonomial) -> Fraction:
        for mm, c in self.terms:
            if mm == m:
                return c
        return Fraction(0)

    def monomials(self) -> tuple[PlueckerMonomial, ...]:
        return tuple(m for m, _ in self.terms)

    def max_label(self) -> int:
        return max((m.max_label() for m, _ in self.terms), default=0)

    def max_degree(self) -> int:
        return max((m.degree for m, _ in self.terms), default=0)

    def __add__(self, other: "PlueckerPolynomial") -> "PlueckerPolynomial":
        return PlueckerPolynomial(self.terms + other.terms)

    def __neg__(self) -> "PlueckerPolynomial":
        return PlueckerPolynomial(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "PlueckerPolynomial") -> "PlueckerPolynomial":
        return self + (-other)

    def __mul__(self, other: "PlueckerPolynomial") -> "PlueckerPolynomial":
        out: list[tuple[PlueckerMonomial, Fraction]] = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                out.append((m1 * m2, c1 * c2))
        return PlueckerPolynomial(tuple(out))

    def scaled(self, c: object) -> "PlueckerPolynomial":
        return PlueckerPolynomial(tuple((m, cc * Fraction(str(c))) for m, cc in self.terms))


def p(i: int, j: int) -> PlueckerPolynomial:
    """The generator p_ij as a polynomial."""
    return PlueckerPolynomial(((PlueckerMonomial.of([(i, j)]), Fraction(1)),))


def three_term_relation(i: int, j: int, k: int, l: int) -> PlueckerPolynomial:
    """p_ij p_kl - p_ik p_jl + p_il p_jk for i<j<k<l; vanishes on 2xn minors."""
    if not i < j < k < l:
        raise ValueError(f"need i < j < k < l, got ({i}, {j}, {k}, {l})")
    return p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k)


# ---------------------------------------------------------------------------
# Crossing and straightening


def _positions(order: Sequence[int] | None, labels: Iterable[int]) -> dict[int, int]:
    if order is None:
        return {x: x for x in labels}
    pos = {x: k for k, x in enumerate(order)}
    missing = [x for x in labels if x not in pos]
    if missing:
        raise ValueError(f"labels {sorted(set(missing))} not in the circular order")
    return pos


def _crosses(a: Pair, b: Pair, pos: Mapping[int, int]) -> bool:
    """Do the chords a and b cross in the circular order given by pos?"""
    if set(a) & set(b):
        return False
    pa, pb = sorted((pos[a[0]], pos[a[1]]))
    in1 = pa < pos[b[0]] < pb
    in2 = pa < pos[b[1]] < pb
    return in1 != in2


def is_noncrossing(m: PlueckerMonomial, order: Sequence[int] | None = None) -> bool:
    """True iff no two support variables cross (circular order 1..n by default)."""
    sup = m.support()
    pos = _positions(order, (x for pr in sup for x in pr))
    for a_idx in range(len(sup)):
        for b_idx in range(a_idx + 1, len(sup)):
            if _crosses(sup[a_idx], sup[b_idx], pos):
                return False
    return True


def _first_crossing(m: PlueckerMonomial, pos: Mapping[int, int]) -> tuple[Pair, Pair] | None:
    sup = m.support()
    best: tuple[Pair, Pair] | None = None
    for a_idx in range(len(sup)):
        for b_idx in range(a_idx + 1, len(sup)):
            if _crosses(sup[a_idx], sup[b_idx], pos):
                cand = (sup[a_idx], sup[b_idx])
                if best is None or cand < best:
                    best = cand
    return best


def _rewrite(u: Pair, v: Pair) -> tuple[tuple[Pair, Pair, int], tuple[Pair, Pair, int]]:
    """Replacements for the product p_u p_v of a crossing pair.

    Returns two (pair, pair, sign) triples whose signed sum equals p_u p_v
    modulo the Pluecker ideal, by the three-term relation on the four
    labels involved.
    """
    i, j, k, l = sorted(set(u) | set(v))
    disjoint = ((i, j), (k, l))
    middle = ((i, k), (j, l))
    nested = ((i, l), (j, k))
    pair_set = {u, v}
    if pair_set == set(middle):
        return (*disjoint, 1), (*nested, 1)
    if pair_set == set(disjoint):
        return (*middle, 1), (*nested, -1)
    if pair_set == set(nested):
        return (*middle, 1), (*disjoint, -1)
    raise AssertionError(f"{u}, {v} is not a pairing of four labels")


def straighten(f: PlueckerPolynomial, order: Sequence[int] | None = None) -> PlueckerPolynomial:
    """Expand f over crossing-free monomials for the given circular order.

    The result is equal to f modulo the Pluecker ideal and is supported on
    monomials without crossing pairs.  The rewrite loop always picks the
    largest remaining monomial (degree, then lexicographic) and its
    smallest crossing pair, which makes intermediate traces deterministic;
    the final expansion does not depend on this choice.
    """
    labels = {x for m, _ in f.terms for pr in m.support() for x in pr}
    pos = _positions(order, labels)
    work: dict[PlueckerMonomial, Fraction] = dict(f.terms)
    while True:
        target: PlueckerMonomial | None = None
        crossing: tuple[Pair, Pair] | None = None
        for m in sorted(work, key=_mon_key, reverse=True):
            hit = _first_crossing(m, pos)
            if hit is not None:
                target, crossing = m, hit
                break
        if target is None:
            break
        coeff = work.pop(target)
        u, v = crossing
        rest = target.as_dict()
        rest[u] -= 1
        rest[v] = rest.get(v, 0) - 1
        base = PlueckerMonomial.of({pr: e for pr, e in rest.items() if e > 0})
        for a, bpair, sign in _rewrite(u, v):
            newm = base * PlueckerMonomial.of([a, bpair])
            c = work.get(newm, Fraction(0)) + sign * coeff
            if c == 0:
                work.pop(newm, None)
            else:
                work[newm] = c
    return PlueckerPolynomial(tuple(work.items()))


# ---------------------------------------------------------------------------
# Text format: "c * p[i,j]^e * ..." terms joined by + / -


def format_polynomial(f: PlueckerPolynomial) -> str:
    if f.is_zero:
        return "0"
    parts: list[str] = []
    for idx, (m, c) in enumerate(f.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        factors = [
            f"p[{i},{j}]" + (f"^{e}" if e > 1 else "") for (i, j), e in m.exps
        ]
        if m.is_constant:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if idx == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


_TOKEN = re.compile(
    r"\s*(?:(?P<var>p\[\s*\d+\s*,\s*\d+\s*\])|(?P<num>\d+(?:/\d+)?|\d*\.\d+)"
    r"|(?P<op>[\^*+-]))"
)
_VAR = re.compile(r"p\[\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_polynomial(text: str) -> PlueckerPolynomial:
    """Parse the format produced by format_polynomial."""
    tokens: list[tuple[str, str]] = []
    pos = 0
    text = text.strip()
    if text == "0":
        return PlueckerPolynomial.zero()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"cannot tokenize polynomial at ...{text[pos:pos+20]!r}")
        pos = m.end()
        for kind in ("var", "num", "op"):
            if m.group(kind) is not None:
                tokens.append((kind, m.group(kind)))
                break
    terms: list[tuple[PlueckerMonomial, Fraction]] = []
    i = 0

    def parse_term(sign: int) -> None:
        nonlocal i
        coeff = Fraction(sign)
        pairs: dict[Pair, int] = {}
        saw_factor = False
        expect_factor = True
        while i < len(tokens):
            kind, tok = tokens[i]
            if kind == "op" and tok in "+-" and not expect_factor:
                break
            if kind == "num":
                coeff *= Fraction(tok)
                saw_factor = True
                i += 1
            elif kind == "var":
                vm = _VAR.fullmatch(tok)
                assert vm is not None
                pr = _check_pair((int(vm.group(1)), int(vm.group(2))))
                exp = 1
                i += 1
                if i + 1 < len(tokens) and tokens[i] == ("op", "^"):
                    if tokens[i + 1][0] != "num" or "/" in tokens[i + 1][1] or "." in tokens[i + 1][1]:
                        raise ValueError("exponent must be a plain integer")
                    exp = int(tokens[i + 1][1])
                    i += 2
                pairs[pr] = pairs.get(pr, 0) + exp
                saw_factor = True
            elif kind == "op" and tok == "*":
                if expect_factor:
                    raise ValueError("'*' must follow a coefficient or variable")
                i += 1
                expect_factor = True
                continue
            else:
                raise ValueError(f"unexpected token {tok!r} in polynomial")
            expect_factor = False
        if not saw_factor:
            raise ValueError("empty term in polynomial")
        if expect_factor:
            raise ValueError("dangling '*' at the end of a term")
        terms.append((PlueckerMonomial.of(pairs), coeff))

    # leading sign
    sign = 1
    if tokens and tokens[0] == ("op", "-"):
        sign = -1
        i = 1
    elif tokens and tokens[0] == ("op", "+"):
        i = 1
    parse_term(sign)
    while i < len(tokens):
        kind, tok = tokens[i]
        if kind != "op" or tok not in "+-":
            raise ValueError(f"expected + or - between terms, got {tok!r}")
        i += 1
        parse_term(1 if tok == "+" else -1)
    return PlueckerPolynomial(tuple(terms))
