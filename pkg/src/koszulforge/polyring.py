"""Exact multivariate polynomial arithmetic over Q with pluggable term orders.

Monomials are dense exponent tuples (ring widths here stay below ~40),
polynomials are mappings from monomials to nonzero rational coefficients.
A prime field is available as a fast cross-check for linear algebra; final
certificates always use exact rationals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InputError

Monomial = tuple[int, ...]


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------

def mono_one(width: int) -> Monomial:
    return (0,) * width


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """b / a, assuming divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def unit_mono(width: int, index: int, exp: int = 1) -> Monomial:
    m = [0] * width
    m[index] = exp
    return tuple(m)


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------

class RationalField:
    """The rationals; elements are Fraction."""

    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def convert(x: Fraction | int) -> Fraction:
        return Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Z/p for prime p; elements are ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise InputError(f"characteristic must be prime, got {p}")
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def convert(self, x: Fraction | int):
        p = self.characteristic
        if isinstance(x, int):
            return x % p
        num, den = x.numerator, x.denominator
        if den % p == 0:
            raise InputError(f"denominator {den} not invertible mod {p}")
        return num * pow(den, -1, p) % p

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return (a * b) % self.characteristic

    def neg(self, a):
        return (-a) % self.characteristic

    def inv(self, a):
        return pow(a, -1, self.characteristic)

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()

#: default prime for fast cross-checks, never for final certificates
DEFAULT_CHECK_PRIME = 32003


def field_of_characteristic(char: int):
    return QQ if char == 0 else PrimeField(char)


# ---------------------------------------------------------------------------
# term orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """A multiplicative total order on monomials of a fixed width.

    ``ranking`` lists variable indices from least to greatest, so
    ranking=(2,0,1) means var2 < var0 < var1.  Kinds:

    * ``lex``: compare exponents from the greatest variable down.
    * ``grevlex``: higher total degree wins; on ties the monomial with the
      strictly larger exponent on the least variable is the smaller one,
      recursing upward through the ranking.
    * ``revlex_nongraded``: the grevlex tiebreak without the degree-first
      comparison.  Not a well-order; exists as an investigation flag only.
    * ``weight``: compare w-weights first, break ties with ``tiebreak``.
    * ``block``: rank every monomial containing a ``dropped`` variable above
      all monomials in the kept variables (grevlex inside the dropped block,
      ``tiebreak`` on the kept part); used for elimination.
    """

    kind: str
    ranking: tuple[int, ...]
    weights: tuple[Fraction, ...] | None = None
    tiebreak: "TermOrder | None" = None
    dropped: tuple[int, ...] | None = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def lex(width: int, ranking: Iterable[int] | None = None) -> "TermOrder":
        return TermOrder("lex", _check_ranking(width, ranking))

    @staticmethod
    def grevlex(width: int, ranking: Iterable[int] | None = None) -> "TermOrder":
        return TermOrder("grevlex", _check_ranking(width, ranking))

    @staticmethod
    def revlex_nongraded(width: int, ranking: Iterable[int] | None = None) -> "TermOrder":
        return TermOrder("revlex_nongraded", _check_ranking(width, ranking))

    @staticmethod
    def weight(weights: Iterable[Fraction | int],
               ranking: Iterable[int] | None = None) -> "TermOrder":
        w = tuple(Fraction(x) for x in weights)
        rk = _check_ranking(len(w), ranking)
        return TermOrder("weight", rk, weights=w,
                         tiebreak=TermOrder.grevlex(len(w), rk))

    @staticmethod
    def block(width: int, dropped: Iterable[int], kept_order: "TermOrder") -> "TermOrder":
        dr = tuple(sorted(dropped))
        if kept_order.width != width:
            raise InputError("kept order width mismatch")
        return TermOrder("block", _check_ranking(width, None),
                         tiebreak=kept_order, dropped=dr)

    # -- behaviour ----------------------------------------------------------

    @property
    def width(self) -> int:
        return len(self.ranking)

    @property
    def is_global(self) -> bool:
        """True if 1 is the minimal monomial (a well-order)."""
        if self.kind == "revlex_nongraded":
            return False
        if self.kind == "weight":
            return all(w >= 0 for w in self.weights) and self.tiebreak.is_global
        return True

    def key(self, m: Monomial):
        """Sort key; bigger key means bigger monomial."""
        kind = self.kind
        if kind == "grevlex":
            return (sum(m), tuple(-m[v] for v in self.ranking))
        if kind == "lex":
            return tuple(m[v] for v in reversed(self.ranking))
        if kind == "revlex_nongraded":
            return tuple(-m[v] for v in self.ranking)
        if kind == "weight":
            w = sum(wi * e for wi, e in zip(self.weights, m))
            return (w, self.tiebreak.key(m))
        if kind == "block":
            dropped = self.dropped
            dropdeg = sum(m[v] for v in dropped)
            kept = tuple(0 if v in dropped else e for v, e in enumerate(m))
            return ((dropdeg, tuple(-m[v] for v in dropped)), self.tiebreak.key(kept))
        raise InputError(f"unknown term order kind {kind!r}")

    def compare(self, a: Monomial, b: Monomial) -> str:
        """Return 'LT', 'EQ' or 'GT' for a versus b."""
        if len(a) != self.width or len(b) != self.width:
            raise InputError("monomial width does not match order width")
        if a == b:
            return "EQ"
        return "GT" if self.key(a) > self.key(b) else "LT"

    def descriptor(self) -> dict:
        """JSON-ready description (stable field order)."""
        d: dict = {"kind": self.kind, "ranking": list(self.ranking)}
        if self.weights is not None:
            d["weights"] = [str(w) for w in self.weights]
        if self.dropped is not None:
            d["dropped"] = list(self.dropped)
        return d


def _check_ranking(width: int, ranking: Iterable[int] | None) -> tuple[int, ...]:
    if ranking is None:
        return tuple(range(width))
    rk = tuple(ranking)
    if sorted(rk) != list(range(width)):
        raise InputError(f"ranking must be a permutation of 0..{width - 1}")
    return rk


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Variable:
    index: int
    label: str


class Polynomial:
    """An exact multivariate polynomial: {monomial: nonzero Fraction}.

    Instances are immutable by convention; arithmetic returns new objects.
    """

    __slots__ = ("width", "terms")

    def __init__(self, width: int, terms: Mapping[Monomial, Fraction] | None = None):
        self.width = width
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != width:
                    raise InputError("term width mismatch")
                c = Fraction(c)
                if c:
                    clean[mono] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(width: int) -> "Polynomial":
        return Polynomial(width)

    @staticmethod
    def constant(width: int, c: Fraction | int) -> "Polynomial":
        return Polynomial(width, {mono_one(width): Fraction(c)})

    @staticmethod
    def monomial(mono: Monomial, coeff: Fraction | int = 1) -> "Polynomial":
        return Polynomial(len(mono), {mono: Fraction(coeff)})

    @staticmethod
    def variable(width: int, index: int) -> "Polynomial":
        return Polynomial.monomial(unit_mono(width, index))

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def is_binomial_pm1(self) -> bool:
        """True for u - v with unit coefficients (toric generator shape)."""
        if len(self.terms) != 2:
            return False
        return sorted(self.terms.values()) == [Fraction(-1), Fraction(1)]

    def leading(self, order: TermOrder) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise InputError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    # -- arithmetic ----------------------------------------------------------

    def _require_same_width(self, other: "Polynomial") -> None:
        if self.width != other.width:
            raise InputError("polynomial width mismatch")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.width == other.width
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.width, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_width(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _raw(self.width, out)

    def __neg__(self) -> "Polynomial":
        return _raw(self.width, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_width(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) - c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _raw(self.width, out)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._require_same_width(other)
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    s = out.get(m, Fraction(0)) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            return _raw(self.width, out)
        c = Fraction(other)
        if not c:
            return Polynomial.zero(self.width)
        return _raw(self.width, {m: c * v for m, v in self.terms.items()})

    __rmul__ = __mul__

    def mul_term(self, mono: Monomial, coeff: Fraction) -> "Polynomial":
        if not coeff:
            return Polynomial.zero(self.width)
        return _raw(self.width,
                    {mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise InputError("negative power")
        out = Polynomial.constant(self.width, 1)
        for _ in range(e):
            out = out * self
        return out

    def monic(self, order: TermOrder) -> "Polynomial":
        _, lc = self.leading(order)
        return self * (1 / lc)

    def evaluate(self, point: Iterable[Fraction]) -> Fraction:
        pt = list(point)
        if len(pt) != self.width:
            raise InputError("evaluation point width mismatch")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def substitute(self, index: int, replacement: "Polynomial") -> "Polynomial":
        """Substitute ``replacement`` for the variable at ``index``.

        The result lives in the same width; the caller is responsible for
        dropping the now-unused coordinate if desired.
        """
        self._require_same_width(replacement)
        out = Polynomial.zero(self.width)
        for m, c in self.terms.items():
            e = m[index]
            rest = list(m)
            rest[index] = 0
            part = Polynomial.monomial(tuple(rest), c)
            if e:
                part = part * (replacement ** e)
            out = out + part
        return out

    def project(self, keep: Iterable[int]) -> "Polynomial":
        """Re-express in the sub-ring on ``keep`` (all other exponents must be 0)."""
        keep = tuple(keep)
        out: dict[Monomial, Fraction] = {}
        dropped = set(range(self.width)) - set(keep)
        for m, c in self.terms.items():
            if any(m[v] for v in dropped):
                raise InputError("term involves a dropped variable")
            out[tuple(m[v] for v in keep)] = c
        return _raw(len(keep), out)

    def embed(self, width: int, positions: Iterable[int]) -> "Polynomial":
        """Map into a wider ring, variable i going to positions[i]."""
        pos = tuple(positions)
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            big = [0] * width
            for v, e in enumerate(m):
                big[pos[v]] = e
            out[tuple(big)] = c
        return _raw(width, out)

    # -- text and JSON -------------------------------------------------------

    def to_str(self, labels: Iterable[str], order: TermOrder | None = None) -> str:
        labels = tuple(labels)
        if not self.terms:
            return "0"
        order = order or TermOrder.grevlex(self.width)
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            factors = [f"{labels[v]}^{e}" if e > 1 else labels[v]
                       for v, e in enumerate(m) if e]
            mag = abs(c)
            body = "*".join(([] if mag == 1 and factors else [str(mag)]) + factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list[dict]:
        items = sorted(self.terms.items())
        return [{"coeff": str(c), "exps": list(m)} for m, c in items]

    @staticmethod
    def from_json(data: list[dict], width: int) -> "Polynomial":
        terms: dict[Monomial, Fraction] = {}
        for item in data:
            mono = tuple(item["exps"])
            terms[mono] = Fraction(item["coeff"])
        return Polynomial(width, terms)

    def __repr__(self):
        return f"Polynomial(width={self.width}, terms={len(self.terms)})"


def _raw(width: int, terms: dict[Monomial, Fraction]) -> Polynomial:
    """Construct without re-validating (terms already clean)."""
    p = Polynomial.__new__(Polynomial)
    object.__setattr__(p, "width", width)
    object.__setattr__(p, "terms", terms)
    return p


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_NUM_RE = re.compile(r"\d+(/\d+)?")


def parse_polynomial(text: str, labels: Iterable[str]) -> Polynomial:
    """Parse ``3*y_{1,2}^2*t - 1/2*x_3`` style text against known labels."""
    labels = tuple(labels)
    width = len(labels)
    by_label = {lab: i for i, lab in enumerate(labels)}
    label_re = "|".join(re.escape(lab) for lab in
                        sorted(labels, key=len, reverse=True))
    token_re = re.compile(rf"\s*(?:(?P<num>\d+/\d+|\d+)|(?P<var>{label_re})"
                          rf"|(?P<op>[-+*^()]))")
    pos = 0
    tokens: list[tuple[str, str]] = []
    while pos < len(text):
        m = token_re.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise InputError(f"cannot tokenize polynomial at: {text[pos:]!r}")
        pos = m.end()
        for kind in ("num", "var", "op"):
            if m.group(kind) is not None:
                tokens.append((kind, m.group(kind)))
                break

    result = Polynomial.zero(width)
    i = 0
    n = len(tokens)
    while i < n:
        sign = Fraction(1)
        saw_sign = False
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            saw_sign = True
            i += 1
        if i >= n:
            if saw_sign:
                raise InputError("dangling sign in polynomial")
            break
        coeff = sign
        mono = [0] * width
        saw_factor = False
        while i < n:
            kind, val = tokens[i]
            if kind == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind == "var":
                v = by_label[val]
                e = 1
                i += 1
                if i + 1 < n and tokens[i] == ("op", "^") and tokens[i + 1][0] == "num":
                    e = int(tokens[i + 1][1])
                    i += 2
                mono[v] += e
            else:
                break
            saw_factor = True
            if i < n and tokens[i] == ("op", "*"):
                i += 1
                continue
            break
        if not saw_factor:
            raise InputError("expected a term")
        result = result + Polynomial.monomial(tuple(mono), coeff)
    return result
