"""Hilbert series, h-vectors, regular sequences, socles, Gorenstein certificates.

The Hilbert numerator of a monomial ideal is computed by the pivot-splitting
recursion Q(I) = Q(I + (x)) + t * Q(I : x) with memoization; the numerator of
an arbitrary homogeneous ideal is that of any initial ideal (Macaulay), which
the property suite re-checks across term orders.

Regularity of a linear form is certified by the exact factor test
H_{R/l}(t) = (1 - t) * H_R(t); an artinian reduction by a full linear system
of parameters exposes the socle, and Gorensteinness is decided by its
dimension.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .groebner import (DEFAULT_SPAIR_CAP, GroebnerBasis, IdealPresentation,
                       MonomialIdeal, initial_ideal, multiplication_table,
                       reduced_gb, standard_monomials)
from .linalg import Eliminator
from .polyring import (Monomial, Polynomial, QQ, TermOrder, mono_degree,
                       mono_divides, unit_mono)
from .toric import ToricIdeal

IntPoly = tuple[int, ...]  # coefficient list in t, constant term first


# ---------------------------------------------------------------------------
# univariate helpers
# ---------------------------------------------------------------------------

def poly1_trim(p: list[int]) -> IntPoly:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly1_add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    return poly1_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                       for i in range(n)])


def poly1_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    return poly1_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                       for i in range(n)])


def poly1_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly1_trim(out)


def poly1_shift(a: IntPoly, k: int) -> IntPoly:
    if not a:
        return ()
    return tuple([0] * k + list(a))


def poly1_div_one_minus_t(a: IntPoly) -> IntPoly | None:
    """Exact quotient a / (1 - t), or None when (1 - t) does not divide."""
    if not a:
        return ()
    if sum(a) != 0:
        return None
    out = []
    carry = 0
    for c in a[:-1]:
        carry += c
        out.append(carry)
    return poly1_trim(out)


def poly1_series_coeffs(numerator: IntPoly, denom_exponent: int, upto: int) -> list[int]:
    """Coefficients of numerator / (1-t)^denom_exponent up to degree ``upto``."""
    coeffs = [0] * (upto + 1)
    for i, c in enumerate(numerator):
        if i <= upto:
            coeffs[i] = c
    for _ in range(denom_exponent):
        for i in range(1, upto + 1):
            coeffs[i] += coeffs[i - 1]
    return coeffs


def poly1_str(p: IntPoly, var: str = "t") -> str:
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else ("-" if c == -1 else str(c))
            parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Hilbert numerator of a monomial ideal (pivot recursion)
# ---------------------------------------------------------------------------

_NUMERATOR_MEMO: dict[frozenset, IntPoly] = {}


def monomial_numerator(gens) -> IntPoly:
    """Numerator Q(t) with H(K[x_1..x_m]/I) = Q(t) / (1-t)^m.

    Q does not depend on the ambient width, only on the generators."""
    gens = _minimalized(gens)
    return _numerator(frozenset(gens))


def _minimalized(gens) -> list[Monomial]:
    gens = sorted(set(gens))
    return [g for g in gens
            if not any(h != g and mono_divides(h, g) for h in gens)]


def _numerator(gens: frozenset) -> IntPoly:
    cached = _NUMERATOR_MEMO.get(gens)
    if cached is not None:
        return cached
    result = _numerator_uncached(gens)
    _NUMERATOR_MEMO[gens] = result
    return result


def _numerator_uncached(gens: frozenset) -> IntPoly:
    if not gens:
        return (1,)
    lst = sorted(gens)
    width = len(lst[0])
    if any(mono_degree(g) == 0 for g in lst):
        return ()
    # pairwise coprime supports: the series factors
    supports = [frozenset(v for v, e in enumerate(g) if e) for g in lst]
    if all(supports[i].isdisjoint(supports[j])
           for i in range(len(lst)) for j in range(i + 1, len(lst))):
        out: IntPoly = (1,)
        for g in lst:
            one_minus = poly1_sub((1,), poly1_shift((1,), mono_degree(g)))
            out = poly1_mul(out, one_minus)
        return out
    # pivot on the most shared variable
    counts = [0] * width
    for s in supports:
        for v in s:
            counts[v] += 1
    pivot = max(range(width), key=lambda v: counts[v])
    pv = unit_mono(width, pivot)
    plus: list[Monomial] = [pv]
    colon: list[Monomial] = []
    for g in lst:
        if g[pivot] == 0:
            plus.append(g)
            colon.append(g)
        else:
            reduced = list(g)
            reduced[pivot] -= 1
            colon.append(tuple(reduced))
    q_plus = _numerator(frozenset(_minimalized(plus)))
    q_colon = _numerator(frozenset(_minimalized(colon)))
    return poly1_add(q_plus, poly1_shift(q_colon, 1))


def krull_dimension(ideal: MonomialIdeal) -> int:
    """Largest variable subset meeting no generator support (branch and bound)."""
    supports = [frozenset(v for v, e in enumerate(g) if e)
                for g in ideal.generators]
    if any(not s for s in supports):
        return -1  # unit ideal: empty ring
    memo: dict[frozenset, int] = {}

    def best(allowed: frozenset) -> int:
        hit = next((s for s in supports if s <= allowed), None)
        if hit is None:
            return len(allowed)
        cached = memo.get(allowed)
        if cached is not None:
            return cached
        out = max(best(allowed - {v}) for v in sorted(hit))
        memo[allowed] = out
        return out

    return best(frozenset(range(ideal.width)))


# ---------------------------------------------------------------------------
# HilbertData
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HilbertData:
    """Series numerator over (1-t)^m, Krull dimension, and the h-vector."""

    numerator: IntPoly
    denominator_exponent: int
    krull_dim: int
    h_numerator: IntPoly

    @property
    def h_vector(self) -> tuple[int, ...]:
        return self.h_numerator

    @property
    def socle_degree(self) -> int:
        return len(self.h_numerator) - 1

    def function_values(self, upto: int) -> list[int]:
        return poly1_series_coeffs(self.numerator, self.denominator_exponent, upto)

    def series_str(self) -> str:
        return (f"({poly1_str(self.h_numerator)})"
                f" / (1 - t)^{self.krull_dim}")

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator),
                "denominator_exponent": self.denominator_exponent,
                "dim": self.krull_dim,
                "h_vector": list(self.h_vector),
                "socle_degree": self.socle_degree}


def hilbert_data_of_monomial_ideal(ideal: MonomialIdeal) -> HilbertData:
    q = monomial_numerator(ideal.generators)
    dim = krull_dimension(ideal)
    h: IntPoly | None = q
    for _ in range(ideal.width - dim):
        h = poly1_div_one_minus_t(h)
        if h is None:
            raise InputError("dimension bug: numerator not divisible by (1-t)^codim")
    if h and h[0] != 1:
        raise InputError("h-vector does not start at 1 (is the ideal proper?)")
    return HilbertData(q, ideal.width, dim, h)


def hilbert_series(pres: IdealPresentation, order: TermOrder | None = None,
                   spair_cap: int = DEFAULT_SPAIR_CAP,
                   gb: GroebnerBasis | None = None) -> HilbertData:
    """Hilbert data of K[Y]/I, via the initial ideal of a reduced basis."""
    if not pres.homogeneous:
        raise InputError("hilbert_series expects a homogeneous ideal")
    if gb is None:
        order = order or TermOrder.grevlex(pres.width)
        gb = reduced_gb(pres, order, spair_cap=spair_cap)
    return hilbert_data_of_monomial_ideal(initial_ideal(gb))


def h_vector(hd: HilbertData) -> tuple[int, ...]:
    return hd.h_vector


# ---------------------------------------------------------------------------
# quotient by a linear form
# ---------------------------------------------------------------------------

def leading_variable(ell: Polynomial) -> int:
    """The greatest-index variable occurring in a linear form."""
    if ell.is_zero() or ell.degree() != 1 or not ell.is_homogeneous():
        raise InputError("expected a nonzero homogeneous degree-1 form")
    indices = [next(v for v, e in enumerate(m) if e) for m in ell.terms]
    return max(indices)


def quotient_by_linear_form(pres: IdealPresentation, ell: Polynomial,
                            spair_cap: int = DEFAULT_SPAIR_CAP,
                            old_numerator: IntPoly | None = None,
                            ) -> tuple[IdealPresentation, bool]:
    """Substitute away the leading variable of ell and test regularity.

    Returns the re-presented ideal in one fewer variable and True iff
    H_{R/l} = (1 - t) H_R exactly, i.e. the numerators agree.
    """
    if ell.width != pres.width:
        raise InputError("linear form width mismatch")
    lead = leading_variable(ell)
    lead_mono = unit_mono(pres.width, lead)
    coeff = ell.terms[lead_mono]
    tail = ell - Polynomial.monomial(lead_mono, coeff)
    replacement = tail * (Fraction(-1) / coeff)
    keep = [v for v in range(pres.width) if v != lead]
    new_gens = []
    for g in pres.generators:
        sub = g.substitute(lead, replacement).project(keep)
        if sub:
            new_gens.append(sub)
    new_labels = tuple(pres.labels[v] for v in keep)
    new_pres = IdealPresentation(new_labels, tuple(new_gens))
    if old_numerator is None:
        old_numerator = hilbert_series(pres, spair_cap=spair_cap).numerator
    new_numerator = hilbert_series(new_pres, spair_cap=spair_cap).numerator \
        if new_gens else (1,)
    return new_pres, new_numerator == old_numerator


def apply_linear_forms(pres: IdealPresentation, forms: list[Polynomial],
                       spair_cap: int = DEFAULT_SPAIR_CAP,
                       ) -> tuple[IdealPresentation, list[bool], list[IntPoly]]:
    """Quotient by the forms in order; forms are given in the original ring
    and re-expressed in each intermediate ring by label."""
    current = pres
    regular: list[bool] = []
    numerators: list[IntPoly] = []
    numerator = hilbert_series(pres, spair_cap=spair_cap).numerator
    original_labels = pres.labels
    for ell in forms:
        if ell.width != len(original_labels):
            raise InputError("forms must live in the original ring")
        label_pos = {lab: i for i, lab in enumerate(current.labels)}
        terms = {}
        for m, c in ell.terms.items():
            v = next(i for i, e in enumerate(m) if e)
            lab = original_labels[v]
            if lab not in label_pos:
                raise InputError(f"form uses already-eliminated variable {lab}")
            terms[unit_mono(current.width, label_pos[lab])] = c
        ell_here = Polynomial(current.width, terms)
        current, ok = quotient_by_linear_form(current, ell_here,
                                              spair_cap=spair_cap,
                                              old_numerator=numerator)
        regular.append(ok)
        numerator = hilbert_series(current, spair_cap=spair_cap).numerator \
            if current.generators else (1,)
        numerators.append(numerator)
    return current, regular, numerators


# ---------------------------------------------------------------------------
# socle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SocleData:
    dimension: int
    witnesses: tuple[Polynomial, ...]
    by_degree: tuple[tuple[int, int], ...]  # (degree, socle dim there)


def socle(pres: IdealPresentation, spair_cap: int = DEFAULT_SPAIR_CAP) -> SocleData:
    """Socle of an artinian quotient: everything killed by all variables.

    Computed degree by degree as the joint kernel of the multiplication maps
    on standard-monomial coordinates.
    """
    order = TermOrder.grevlex(pres.width)
    gb = reduced_gb(pres, order, spair_cap=spair_cap)
    ini = initial_ideal(gb)
    if krull_dimension(ini) != 0:
        raise InputError("socle is defined here only for artinian quotients")
    dims = []
    d = 0
    while True:
        count = len(standard_monomials(ini, d))
        if count == 0:
            break
        dims.append(count)
        d += 1
    top = len(dims) - 1
    table = multiplication_table(gb, top + 1)
    width = pres.width
    witnesses: list[Polynomial] = []
    by_degree: list[tuple[int, int]] = []
    for deg in range(top + 1):
        basis = table.bases[deg]
        dim_here = len(basis)
        if dim_here == 0:
            continue
        if deg == top:
            kernel_vectors = [{i: Fraction(1)} for i in range(dim_here)]
        else:
            elim = Eliminator(QQ)
            kernel_vectors = []
            target_block = table.dimension(deg + 1)
            for i in range(dim_here):
                stacked: dict[int, Fraction] = {}
                for v in range(width):
                    col = table.action[deg][v][i]
                    for row, c in col.items():
                        stacked[v * target_block + row] = c
                kernel_vectors.append(stacked)
            kernel_vectors = elim.kernel_of_columns(kernel_vectors)
        found = 0
        for vec in kernel_vectors:
            poly = Polynomial(width, {basis[i]: c for i, c in vec.items()})
            if poly:
                witnesses.append(poly)
                found += 1
        if found:
            by_degree.append((deg, found))
    return SocleData(len(witnesses), tuple(witnesses), tuple(by_degree))


def is_socle_element(pres: IdealPresentation, f: Polynomial,
                     spair_cap: int = DEFAULT_SPAIR_CAP) -> bool:
    """True iff f is nonzero in the quotient and every variable kills it."""
    from .groebner import normal_form
    order = TermOrder.grevlex(pres.width)
    gb = reduced_gb(pres, order, spair_cap=spair_cap)
    nf = normal_form(f, gb)
    if nf.is_zero():
        return False
    return all(normal_form(Polynomial.variable(pres.width, v) * nf, gb).is_zero()
               for v in range(pres.width))


# ---------------------------------------------------------------------------
# Gorenstein certificates
# ---------------------------------------------------------------------------

@dataclass
class GorensteinCertificate:
    presentation: IdealPresentation
    hilbert: HilbertData
    verdict: str  # "Gorenstein" | "NotGorenstein" | "Inconclusive"
    reason: str
    linear_system: list[Polynomial] = field(default_factory=list)
    regularity_checks: list[IntPoly] = field(default_factory=list)
    artinian_presentation: IdealPresentation | None = None
    socle_dimension: int | None = None
    socle_witnesses: tuple[Polynomial, ...] = ()

    def to_json(self) -> dict:
        art = self.artinian_presentation
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "h_vector": list(self.hilbert.h_vector),
            "dim": self.hilbert.krull_dim,
            "socle_degree": self.hilbert.socle_degree,
            "linear_system": [f.to_json() for f in self.linear_system],
            "artinian_labels": list(art.labels) if art else None,
            "socle_dimension": self.socle_dimension,
            "socle_witnesses": [w.to_json() for w in self.socle_witnesses],
        }


_LABEL_SET_RE = re.compile(r"^y_\{([0-9,]*)\}$")


def _label_subset(label: str) -> tuple[int, ...] | None:
    m = _LABEL_SET_RE.match(label)
    if not m:
        return None
    body = m.group(1)
    if not body:
        return ()
    return tuple(int(x) for x in body.split(","))


def lsop_candidates(labels: tuple[str, ...], seed: int, random_attempts: int):
    """Deterministic stream of degree-1 candidates for a linear system of
    parameters: the empty-set variable, vertex-minus-disjoint-edge
    differences, vertex-minus-vertex differences, bare variables, then
    seeded small-integer combinations.

    Differences are ordered by cyclic distance from the vertex so that
    successor-style pairings (the ones that work for the cycle-complement
    rings) are tried first.
    """
    width = len(labels)
    subsets = [_label_subset(lab) for lab in labels]
    top = max((max(s) for s in subsets if s), default=0) + 1

    def var(i: int) -> Polynomial:
        return Polynomial.variable(width, i)

    emitted = []
    for i, s in enumerate(subsets):
        if s == ():
            emitted.append(var(i))
    singles = [(i, s) for i, s in enumerate(subsets) if s is not None and len(s) == 1]
    bigger = [(i, s) for i, s in enumerate(subsets) if s is not None and len(s) >= 2]
    # round-robin across vertices, each vertex offering its cyclically
    # nearest disjoint edges first
    per_vertex: list[list[int]] = []
    for i, sv in singles:
        v = sv[0]
        disjoint = sorted((tuple(sorted((x - v) % top for x in se)), j)
                          for j, se in bigger if v not in se)
        per_vertex.append([j for _, j in disjoint])
    for rnd in range(max((len(es) for es in per_vertex), default=0)):
        for (i, _), edges in zip(singles, per_vertex):
            if rnd < len(edges):
                emitted.append(var(i) - var(edges[rnd]))
    pairs = []
    for a in range(len(singles)):
        for b in range(len(singles)):
            if a != b:
                va, vb = singles[a][1][0], singles[b][1][0]
                pairs.append(((vb - va) % top, va, singles[a][0], singles[b][0]))
    for _, _, ia, ib in sorted(pairs):
        emitted.append(var(ia) - var(ib))
    for j, _ in bigger:
        emitted.append(var(j))
    for i in range(width):
        emitted.append(var(i))
    yield from emitted
    rng = random.Random(seed)
    for _ in range(random_attempts):
        coeffs = [Fraction(rng.choice([-2, -1, 0, 1, 1, 2])) for _ in range(width)]
        if any(coeffs):
            yield Polynomial(width, {unit_mono(width, v): c
                                     for v, c in enumerate(coeffs) if c})


DEFAULT_LSOP_SEED = 20260811
DEFAULT_LSOP_ATTEMPTS = 20
DEFAULT_LSOP_BUDGET = 600


def find_regular_linear_system(pres: IdealPresentation, length: int,
                               seed: int = DEFAULT_LSOP_SEED,
                               attempts_per_slot: int = DEFAULT_LSOP_ATTEMPTS,
                               spair_cap: int = DEFAULT_SPAIR_CAP,
                               budget: int = DEFAULT_LSOP_BUDGET,
                               ) -> tuple[list[Polynomial], IdealPresentation] | None:
    """Depth-first search for ``length`` successively regular linear forms.

    Candidates are tried greedily in stream order with backtracking when a
    prefix dead-ends; at most ``budget`` regularity tests are spent before
    reporting failure.  Returns the forms (each in the ring of its own step)
    and the final quotient presentation, or None.
    """
    tests = [0]

    def dfs(current: IdealPresentation, numerator: IntPoly, slot: int,
            ) -> tuple[list[Polynomial], IdealPresentation] | None:
        if slot == length:
            return [], current
        for cand in lsop_candidates(current.labels, seed + slot,
                                    attempts_per_slot):
            if tests[0] >= budget:
                return None
            tests[0] += 1
            try:
                nxt, ok = quotient_by_linear_form(
                    current, cand, spair_cap=spair_cap, old_numerator=numerator)
            except InputError:
                continue
            if not ok:
                continue
            nxt_numerator = (hilbert_series(nxt, spair_cap=spair_cap).numerator
                             if nxt.generators else (1,))
            deeper = dfs(nxt, nxt_numerator, slot + 1)
            if deeper is not None:
                return [cand] + deeper[0], deeper[1]
        return None

    start_numerator = hilbert_series(pres, spair_cap=spair_cap).numerator
    return dfs(pres, start_numerator, 0)


def gorenstein_certificate(ideal: ToricIdeal | IdealPresentation,
                           seed: int = DEFAULT_LSOP_SEED,
                           attempts_per_slot: int = DEFAULT_LSOP_ATTEMPTS,
                           spair_cap: int = DEFAULT_SPAIR_CAP,
                           socle_even_if_asymmetric: bool = False,
                           ) -> GorensteinCertificate:
    """Certify or refute Gorensteinness via h-vector symmetry, an l.s.o.p.
    and the socle of the artinian reduction.

    An asymmetric h-vector already refutes Gorensteinness and short-circuits
    the search; pass socle_even_if_asymmetric=True to compute the socle
    witnesses anyway.
    """
    pres = ideal.presentation if isinstance(ideal, ToricIdeal) else ideal
    hd = hilbert_series(pres, spair_cap=spair_cap)
    h = hd.h_vector
    s = len(h) - 1
    if any(h[i] != h[s - i] for i in range(s + 1)) and not socle_even_if_asymmetric:
        return GorensteinCertificate(
            pres, hd, "NotGorenstein",
            "asymmetric h-vector (fails the necessary symmetry test)")
    found = find_regular_linear_system(pres, hd.krull_dim, seed=seed,
                                       attempts_per_slot=attempts_per_slot,
                                       spair_cap=spair_cap)
    if found is None:
        return GorensteinCertificate(
            pres, hd, "Inconclusive",
            "no linear system of parameters found within the attempt budget")
    forms, artinian = found
    if artinian.generators:
        soc = socle(artinian, spair_cap=spair_cap)
    else:
        soc = SocleData(1, (Polynomial.constant(artinian.width, 1),), ((0, 1),))
    verdict = "Gorenstein" if soc.dimension == 1 else "NotGorenstein"
    reason = (f"socle dimension {soc.dimension} after reduction by "
              f"{len(forms)} regular linear forms")
    return GorensteinCertificate(
        pres, hd, verdict, reason,
        linear_system=forms,
        artinian_presentation=artinian,
        socle_dimension=soc.dimension,
        socle_witnesses=soc.witnesses)
