"""Buchberger engine: reduced Groebner bases, normal forms, initial ideals,
standard monomials, and elimination.

The pair handling follows Gebauer-Moeller (the update step of Becker and
Weispfenning's GROEBNERNEWS2) with the normal selection strategy: process
the pair whose lcm has the lowest total degree first.  Everything is exact
over the rationals and deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, ResourceCapError
from .polyring import (Monomial, Polynomial, TermOrder, mono_degree, mono_div,
                       mono_divides, mono_lcm, mono_mul, unit_mono)

DEFAULT_SPAIR_CAP = 10 ** 6


@dataclass(frozen=True)
class IdealPresentation:
    """A list of generators in a labelled polynomial ring."""

    labels: tuple[str, ...]
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise InputError("variable labels must be unique")
        for g in self.generators:
            if g.width != self.width:
                raise InputError("generator width mismatch")
            if g.is_zero():
                raise InputError("zero generator")

    @property
    def width(self) -> int:
        return len(self.labels)

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def to_json(self) -> dict:
        return {"labels": list(self.labels),
                "generators": [g.to_json() for g in self.generators]}

    @staticmethod
    def from_json(data: dict) -> "IdealPresentation":
        labels = tuple(data["labels"])
        gens = tuple(Polynomial.from_json(g, len(labels))
                     for g in data["generators"])
        return IdealPresentation(labels, gens)


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    elements: tuple[Polynomial, ...]

    @property
    def max_degree(self) -> int:
        return max((g.degree() for g in self.elements), default=0)

    @property
    def is_quadratic(self) -> bool:
        return self.max_degree <= 2

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading(self.order)[0] for g in self.elements)

    def to_json(self) -> dict:
        return {"order": self.order.descriptor(),
                "elements": [g.to_json() for g in self.elements],
                "initial_ideal": [list(m) for m in self.leading_monomials()],
                "flags": {"max_degree": self.max_degree,
                          "quadratic": self.is_quadratic}}


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators (an antichain under divisibility)."""

    width: int
    generators: tuple[Monomial, ...]

    @property
    def is_quadratic(self) -> bool:
        return all(mono_degree(m) <= 2 for m in self.generators)

    @property
    def is_squarefree(self) -> bool:
        return all(all(e <= 1 for e in m) for m in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.generators)

    def to_json(self) -> dict:
        return {"width": self.width,
                "generators": [list(m) for m in self.generators],
                "flags": {"quadratic": self.is_quadratic,
                          "squarefree": self.is_squarefree}}


def monomial_ideal(width: int, gens) -> MonomialIdeal:
    """Minimalize and sort a generating set of monomials."""
    gens = sorted(set(gens))
    minimal = [m for m in gens
               if not any(g != m and mono_divides(g, m) for g in gens)]
    return MonomialIdeal(width, tuple(sorted(minimal)))


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def _reduce_dict(f: dict[Monomial, Fraction],
                 reducers: list[tuple[Monomial, Fraction, dict[Monomial, Fraction]]],
                 key) -> dict[Monomial, Fraction]:
    """Full normal form of the term dict f against (lm, lc, terms) reducers."""
    p = dict(f)
    remainder: dict[Monomial, Fraction] = {}
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        hit = None
        for glm, glc, gterms in reducers:
            if mono_divides(glm, lm):
                hit = (glm, glc, gterms)
                break
        if hit is None:
            remainder[lm] = lc
            del p[lm]
            continue
        glm, glc, gterms = hit
        shift = mono_div(lm, glm)
        scale = lc / glc
        for m, c in gterms.items():
            mm = mono_mul(m, shift)
            s = p.get(mm, Fraction(0)) - scale * c
            if s:
                p[mm] = s
            else:
                p.pop(mm, None)
    return remainder


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of f on division by gb; zero iff f lies in the ideal."""
    if f.width != gb.order.width:
        raise InputError("polynomial and basis live in different rings")
    key = gb.order.key
    reducers = [(g.leading(gb.order)[0], g.leading(gb.order)[1], g.terms)
                for g in gb.elements]
    reduced = _reduce_dict(f.terms, reducers, key)
    return Polynomial(f.width, reduced)


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

class _Engine:
    def __init__(self, order: TermOrder, spair_cap: int):
        self.order = order
        self.key = order.key
        self.cap = spair_cap
        self.processed = 0
        self.polys: list[dict[Monomial, Fraction]] = []
        self.lms: list[Monomial] = []

    def add_poly(self, terms: dict[Monomial, Fraction]) -> int:
        lm = max(terms, key=self.key)
        lc = terms[lm]
        if lc != 1:
            terms = {m: c / lc for m, c in terms.items()}
        self.polys.append(terms)
        self.lms.append(lm)
        return len(self.polys) - 1

    def reduce(self, terms: dict[Monomial, Fraction], against: list[int]):
        reducers = [(self.lms[i], Fraction(1), self.polys[i]) for i in against]
        return _reduce_dict(terms, reducers, self.key)

    def update(self, G: set[int], B: set[tuple[int, int]], ih: int):
        """Gebauer-Moeller pair update after adding basis element ih."""
        mh = self.lms[ih]
        C = set(G)
        D: set[tuple[int, int]] = set()
        while C:
            ig = C.pop()
            mg = self.lms[ig]
            lcm_hg = mono_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return mono_divides(mono_lcm(mh, self.lms[ip]), lcm_hg)

            if mono_mul(mh, mg) == lcm_hg or (
                    not any(lcm_divides(ip) for ip in C)
                    and not any(lcm_divides(pair[1]) for pair in D)):
                D.add((ih, ig))
        E = {(i, g) for i, g in D if mono_mul(mh, self.lms[g]) != mono_lcm(mh, self.lms[g])}
        B_new = set()
        for ig1, ig2 in B:
            lcm12 = mono_lcm(self.lms[ig1], self.lms[ig2])
            if (not mono_divides(mh, lcm12)
                    or mono_lcm(self.lms[ig1], mh) == lcm12
                    or mono_lcm(self.lms[ig2], mh) == lcm12):
                B_new.add((ig1, ig2))
        B_new |= E
        G_new = {ig for ig in G if not mono_divides(mh, self.lms[ig])}
        G_new.add(ih)
        return G_new, B_new

    def spoly(self, i: int, j: int) -> dict[Monomial, Fraction]:
        mi, mj = self.lms[i], self.lms[j]
        lcm = mono_lcm(mi, mj)
        si, sj = mono_div(lcm, mi), mono_div(lcm, mj)
        out: dict[Monomial, Fraction] = {}
        for m, c in self.polys[i].items():
            out[mono_mul(m, si)] = c
        for m, c in self.polys[j].items():
            mm = mono_mul(m, sj)
            s = out.get(mm, Fraction(0)) - c
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
        return out


_GB_CACHE: dict = {}
_GB_CACHE_LIMIT = 512


def reduced_gb(pres: IdealPresentation, order: TermOrder,
               spair_cap: int = DEFAULT_SPAIR_CAP) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal w.r.t. the order.

    Results are memoized per (presentation, order): the same quotient ring
    is interrogated many times across the pipeline.  Raises
    ResourceCapError after ``spair_cap`` processed S-pairs; that is a hard
    failure, never a silent truncation.
    """
    key = (pres, order, spair_cap)
    hit = _GB_CACHE.get(key)
    if hit is not None:
        return hit
    result = _reduced_gb_uncached(pres, order, spair_cap)
    if len(_GB_CACHE) >= _GB_CACHE_LIMIT:
        _GB_CACHE.pop(next(iter(_GB_CACHE)))
    _GB_CACHE[key] = result
    return result


def _reduced_gb_uncached(pres: IdealPresentation, order: TermOrder,
                         spair_cap: int) -> GroebnerBasis:
    if order.width != pres.width:
        raise InputError("order width does not match presentation")
    if not order.is_global:
        raise InputError("Groebner bases require a global (well-) order")
    eng = _Engine(order, spair_cap)

    # inter-reduce the input before starting; each element is reduced only
    # against already-kept ones, so content is never lost to mutual
    # cancellation, and we iterate to a fixpoint
    current = [dict(g.terms) for g in pres.generators]
    while True:
        kept: list[dict] = []
        changed = False
        for p in current:
            reducers = [(max(q, key=eng.key), q[max(q, key=eng.key)], q)
                        for q in kept]
            r = _reduce_dict(p, reducers, eng.key)
            if r != p:
                changed = True
            if r:
                lm = max(r, key=eng.key)
                lc = r[lm]
                kept.append({m: c / lc for m, c in r.items()})
        current = kept
        if not changed:
            break
    if not current:
        return GroebnerBasis(order, ())
    for p in current:
        eng.add_poly(p)

    G: set[int] = set()
    B: set[tuple[int, int]] = set()
    for ih in sorted(range(len(eng.polys)), key=lambda i: eng.key(eng.lms[i])):
        G, B = eng.update(G, B, ih)

    while B:
        pair = min(B, key=lambda p: (mono_degree(mono_lcm(eng.lms[p[0]], eng.lms[p[1]])),
                                     eng.key(mono_lcm(eng.lms[p[0]], eng.lms[p[1]])),
                                     p))
        B.remove(pair)
        eng.processed += 1
        if eng.processed > eng.cap:
            raise ResourceCapError(
                f"S-pair budget of {eng.cap} exceeded; raise --spair-cap to continue")
        s = eng.spoly(*pair)
        if not s:
            continue
        ordered = sorted(G, key=lambda i: eng.key(eng.lms[i]))
        h = eng.reduce(s, ordered)
        if h:
            ih = eng.add_poly(h)
            G, B = eng.update(G, B, ih)

    # minimalize and tail-reduce into the reduced basis
    chosen = sorted(G, key=lambda i: eng.key(eng.lms[i]))
    minimal = [i for i in chosen
               if not any(j != i and mono_divides(eng.lms[j], eng.lms[i])
                          for j in chosen)]
    final: list[Polynomial] = []
    for i in minimal:
        others = [j for j in minimal if j != i]
        r = eng.reduce(eng.polys[i], others)
        assert r, "minimal basis element reduced to zero"
        lm = max(r, key=eng.key)
        lc = r[lm]
        final.append(Polynomial(pres.width, {m: c / lc for m, c in r.items()}))
    final.sort(key=lambda g: eng.key(g.leading(order)[0]))
    return GroebnerBasis(order, tuple(final))


def is_quadratically_generated(pres: IdealPresentation,
                               gb: GroebnerBasis | None = None,
                               spair_cap: int = DEFAULT_SPAIR_CAP) -> bool:
    """Whether the ideal is generated by its elements of degree <= 2.

    The presentation may carry redundant higher-degree elements (an
    elimination output is a whole Groebner basis); quadraticity is a
    property of the ideal, so it is tested by reducing every basis element
    against the subideal spanned in degrees <= 2.
    """
    if gb is None:
        gb = reduced_gb(pres, TermOrder.grevlex(pres.width), spair_cap=spair_cap)
    low = tuple(g for g in gb.elements if g.degree() <= 2)
    if len(low) == len(gb.elements):
        return True
    if not low:
        return False
    sub = reduced_gb(IdealPresentation(pres.labels, low), gb.order,
                     spair_cap=spair_cap)
    return all(normal_form(g, sub).is_zero() for g in gb.elements)


def spolynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    """S-polynomial of two nonzero polynomials (used by property tests)."""
    mf, cf = f.leading(order)
    mg, cg = g.leading(order)
    lcm = mono_lcm(mf, mg)
    return (f.mul_term(mono_div(lcm, mf), 1 / cf)
            - g.mul_term(mono_div(lcm, mg), 1 / cg))


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    """Initial ideal of a reduced basis; generators are already minimal."""
    return monomial_ideal(gb.order.width, gb.leading_monomials())


# ---------------------------------------------------------------------------
# standard monomials and multiplication tables
# ---------------------------------------------------------------------------

def standard_monomials(ideal: MonomialIdeal, degree: int,
                       order: TermOrder | None = None) -> list[Monomial]:
    """All degree-d monomials outside the ideal, sorted by the order."""
    if degree < 0:
        raise InputError("degree must be >= 0")
    m = ideal.width
    order = order or TermOrder.grevlex(m)
    out = []
    for combo in itertools.combinations_with_replacement(range(m), degree):
        mono = [0] * m
        for v in combo:
            mono[v] += 1
        mono = tuple(mono)
        if not ideal.contains(mono):
            out.append(mono)
    out.sort(key=order.key)
    return out


@dataclass(frozen=True)
class MultiplicationTable:
    """Per-degree standard-monomial bases of a quotient ring together with
    the action of each variable in normal-form coordinates."""

    gb: GroebnerBasis
    bases: tuple[tuple[Monomial, ...], ...]
    index: tuple[dict, ...]
    # action[d][v][i] = sparse {target_index: coeff} for variable v times
    # the i-th basis monomial of degree d
    action: tuple[tuple[tuple[dict, ...], ...], ...]

    @property
    def degree_cap(self) -> int:
        return len(self.bases) - 1

    def dimension(self, d: int) -> int:
        return len(self.bases[d])

    def reduce_poly(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.gb)


def multiplication_table(gb: GroebnerBasis, degree_cap: int) -> MultiplicationTable:
    """Coordinatize K[Y]/I up to a degree cap via its standard monomials."""
    width = gb.order.width
    ini = initial_ideal(gb)
    bases = [tuple(standard_monomials(ini, d)) for d in range(degree_cap + 1)]
    index = [{m: i for i, m in enumerate(basis)} for basis in bases]
    action: list[tuple[tuple[dict, ...], ...]] = []
    for d in range(degree_cap + 1):
        per_var: list[tuple[dict, ...]] = []
        if d + 1 <= degree_cap:
            target = index[d + 1]
            for v in range(width):
                cols = []
                for mono in bases[d]:
                    prod = mono_mul(mono, unit_mono(width, v))
                    if prod in target:
                        cols.append({target[prod]: Fraction(1)})
                    else:
                        nf = normal_form(Polynomial.monomial(prod), gb)
                        cols.append({target[m]: c for m, c in nf.terms.items()})
                per_var.append(tuple(cols))
        action.append(tuple(per_var))
    return MultiplicationTable(gb, tuple(bases), tuple(index), tuple(action))


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def eliminate(pres: IdealPresentation, drop: set[int] | list[int] | tuple[int, ...],
              kept_order: TermOrder | None = None,
              spair_cap: int = DEFAULT_SPAIR_CAP) -> IdealPresentation:
    """Generators of the elimination ideal I inter K[kept variables].

    Uses a block order ranking dropped variables above kept ones; the
    y-only elements of the reduced basis generate (indeed form a reduced
    basis of) the intersection.
    """
    drop = set(drop)
    if not all(0 <= v < pres.width for v in drop):
        raise InputError("dropped variable out of range")
    keep = [v for v in range(pres.width) if v not in drop]
    if kept_order is None:
        kept_order = TermOrder.grevlex(pres.width)
    order = TermOrder.block(pres.width, sorted(drop), kept_order)
    gb = reduced_gb(pres, order, spair_cap=spair_cap)
    kept_polys = []
    for g in gb.elements:
        if all(all(m[v] == 0 for v in drop) for m in g.terms):
            kept_polys.append(g.project(keep))
    labels = tuple(pres.labels[v] for v in keep)
    return IdealPresentation(labels, tuple(kept_polys))
