"""Exact multivariate Laurent-polynomial and rational-function arithmetic.

All coefficients are arbitrary-precision rationals (``fractions.Fraction``);
there is no floating point anywhere.  Variables come from a fixed interned
alphabet (z, q, kappa, t, u_i, eps_i, v_i, w_i, m_i, p_i) with a stable total
order, so equal values have identical representations and printed output is
reproducible bit for bit.

The two operations everything else is built on are ``expand_at`` (Laurent
series expansion of a rational function at z = 0 or z = infinity) and
``int_infty_minus_0`` (constant term at infinity minus constant term at 0).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union


class NonExpandable(Exception):
    """The requested Laurent expansion does not exist over this ring."""


# ---------------------------------------------------------------------------
# Variables
# ---------------------------------------------------------------------------

# Family rank fixes the global variable order; indexed families carry the
# index as a secondary key.
_FAMILY_RANK = {"z": 0, "q": 1, "kappa": 2, "t": 3,
                "u": 4, "eps": 5, "v": 6, "w": 7, "m": 8, "p": 9}
_BARE = {"z", "q", "kappa", "t"}
_NAME_RE = re.compile(r"^(z|q|kappa|t)$|^(u|eps|v|w|m|p)([0-9]+)$")


@dataclass(frozen=True)
class VarId:
    """An interned variable.  Compare and sort by (family, index)."""

    fam: int
    idx: int
    name: str

    def key(self) -> Tuple[int, int]:
        return (self.fam, self.idx)

    def __lt__(self, other: "VarId") -> bool:
        return self.key() < other.key()

    def __repr__(self) -> str:
        return self.name


_REGISTRY: Dict[str, VarId] = {}


def var(name: str) -> VarId:
    """Return the unique VarId with the given name (interned)."""
    v = _REGISTRY.get(name)
    if v is not None:
        return v
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"unknown variable name: {name!r}")
    if m.group(1):
        v = VarId(_FAMILY_RANK[m.group(1)], 0, name)
    else:
        fam, idx = m.group(2), int(m.group(3))
        if fam != "p" and idx < 1:
            raise ValueError(f"index of {fam!r} starts at 1: {name!r}")
        v = VarId(_FAMILY_RANK[fam], idx, name)
    _REGISTRY[name] = v
    return v


Exps = Tuple[Tuple[VarId, int], ...]
Scalar = Union[int, Fraction]


def _as_fraction(x: Union[int, Fraction]) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """A multivariate Laurent polynomial with exact rational coefficients.

    Stored as a map from exponent vectors (sparse, sorted by variable) to
    nonzero coefficients.  Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exps, Fraction]] = None):
        clean: Dict[Exps, Fraction] = {}
        if terms:
            for exps, coef in terms.items():
                coef = _as_fraction(coef)
                if coef == 0:
                    continue
                clean[exps] = coef
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def const(c: Scalar) -> "LaurentPoly":
        c = _as_fraction(c)
        return LaurentPoly({(): c} if c else {})

    @staticmethod
    def variable(name: str, exp: int = 1) -> "LaurentPoly":
        return LaurentPoly.monomial({name: exp})

    @staticmethod
    def monomial(exps: Mapping[str, int], coef: Scalar = 1) -> "LaurentPoly":
        key = tuple(sorted(((var(n), e) for n, e in exps.items() if e != 0),
                           key=lambda p: p[0].key()))
        return LaurentPoly({key: _as_fraction(coef)})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(): Fraction(1)}

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self._terms.get((), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def monomial_parts(self) -> Tuple[Exps, Fraction]:
        if not self.is_monomial():
            raise ValueError(f"not a monomial: {self}")
        ((exps, coef),) = self._terms.items()
        return exps, coef

    def variables(self) -> set:
        out = set()
        for exps in self._terms:
            for v, _ in exps:
                out.add(v)
        return out

    def terms(self) -> Iterable[Tuple[Exps, Fraction]]:
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exps, coef in other._terms.items():
            s = out.get(exps, Fraction(0)) + coef
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        out: Dict[Exps, Fraction] = {}
        for e1, c1 in self._terms.items():
            d1 = dict(e1)
            for e2, c2 in other._terms.items():
                prod = dict(d1)
                for v, e in e2:
                    ne = prod.get(v, 0) + e
                    if ne:
                        prod[v] = ne
                    else:
                        prod.pop(v, None)
                key = tuple(sorted(prod.items(), key=lambda p: p[0].key()))
                s = out.get(key, Fraction(0)) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            raise TypeError("exponent must be an int")
        if n < 0:
            return self.inv_monomial() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def inv_monomial(self) -> "LaurentPoly":
        """Inverse, defined only for monomials (the units of the Laurent ring)."""
        exps, coef = self.monomial_parts()
        return LaurentPoly({tuple((v, -e) for v, e in exps): Fraction(1) / coef})

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    # -- structure -----------------------------------------------------------

    def split_by(self, v: VarId) -> Dict[int, "LaurentPoly"]:
        """Collect terms by the exponent of ``v``; coefficients are free of ``v``."""
        buckets: Dict[int, Dict[Exps, Fraction]] = {}
        for exps, coef in self._terms.items():
            deg = 0
            rest = []
            for w, e in exps:
                if w == v:
                    deg = e
                else:
                    rest.append((w, e))
            buckets.setdefault(deg, {})[tuple(rest)] = coef
        return {d: LaurentPoly(t) for d, t in buckets.items()}

    def degree_range(self, v: VarId) -> Tuple[int, int]:
        degs = [dict(exps).get(v, 0) for exps in self._terms]
        if not degs:
            raise ValueError("zero polynomial has no degree")
        return min(degs), max(degs)

    def substitute(self, values: Mapping[str, Union["LaurentPoly", Scalar]]) -> "LaurentPoly":
        """Substitute values for variables (by name).

        A variable occurring with a negative exponent may only be replaced by
        a nonzero rational or an invertible monomial.
        """
        resolved = {var(n): _coerce(val) for n, val in values.items()}
        out = _ZERO
        for exps, coef in self._terms.items():
            term = LaurentPoly.const(coef)
            keep = {}
            for v, e in exps:
                if v in resolved:
                    term = term * (resolved[v] ** e)
                else:
                    keep[v] = e
            key = tuple(sorted(keep.items(), key=lambda p: p[0].key()))
            out = out + term * LaurentPoly({key: Fraction(1)})
        return out

    def rename(self, old: str, new: str) -> "LaurentPoly":
        return self.substitute({old: LaurentPoly.variable(new)})

    def monomial_content(self) -> Exps:
        """Per-variable minimum exponent over all terms (the monomial gcd)."""
        if not self._terms:
            return ()
        mins: Dict[VarId, int] = {}
        first = True
        for exps in self._terms:
            d = dict(exps)
            if first:
                mins = dict(d)
                first = False
            else:
                for v in list(mins):
                    mins[v] = min(mins[v], d.get(v, 0))
                for v in d:
                    if v not in mins:
                        mins[v] = min(0, d[v])
            for v in list(mins):
                if v not in d:
                    mins[v] = min(mins[v], 0)
        return tuple(sorted(((v, e) for v, e in mins.items() if e != 0),
                            key=lambda p: p[0].key()))

    def divide_by_monomial(self, exps: Exps) -> "LaurentPoly":
        shift = {v: -e for v, e in exps}
        out = {}
        for e, c in self._terms.items():
            d = dict(e)
            for v, s in shift.items():
                ne = d.get(v, 0) + s
                if ne:
                    d[v] = ne
                else:
                    d.pop(v, None)
            out[tuple(sorted(d.items(), key=lambda p: p[0].key()))] = c
        return LaurentPoly(out)

    # -- printing / parsing ---------------------------------------------------

    def _sorted_terms(self):
        def key(item):
            exps, _ = item
            total = sum(e for _, e in exps)
            return (-total, tuple((v.fam, v.idx, -e) for v, e in exps))
        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for i, (exps, coef) in enumerate(self._sorted_terms()):
            mono = "*".join(f"{v.name}^{e}" if e != 1 else v.name for v, e in exps)
            mag = abs(coef)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                chunks.append(body if coef > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if coef > 0 else f" - {body}")
        return "".join(chunks)

    __repr__ = __str__

    @staticmethod
    def parse(text: str) -> "LaurentPoly":
        """Parse the output of ``str``: a signed sum of ``coef*var^exp`` terms."""
        text = text.strip()
        if text == "0":
            return _ZERO
        out = _ZERO
        for sign, body in _split_signed_terms(text):
            coef = Fraction(sign)
            exps: Dict[str, int] = {}
            for factor in body.split("*"):
                factor = factor.strip()
                if not factor:
                    raise ValueError(f"empty factor in {text!r}")
                if re.fullmatch(r"-?[0-9]+(/[0-9]+)?", factor):
                    coef *= Fraction(factor)
                else:
                    m = re.fullmatch(r"([a-z]+[0-9]*)(\^(-?[0-9]+))?", factor)
                    if not m:
                        raise ValueError(f"bad factor {factor!r}")
                    name = m.group(1)
                    e = int(m.group(3)) if m.group(3) else 1
                    exps[name] = exps.get(name, 0) + e
            out = out + LaurentPoly.monomial(exps, coef)
        return out

    def to_json(self) -> dict:
        return {"terms": [{"coef": str(coef),
                           "exps": {v.name: e for v, e in exps}}
                          for exps, coef in self._sorted_terms()]}

    @staticmethod
    def from_json(data: Union[str, dict]) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        out = _ZERO
        for term in data["terms"]:
            out = out + LaurentPoly.monomial(term["exps"], Fraction(term["coef"]))
        return out


_ZERO = LaurentPoly()
_ONE = LaurentPoly({(): Fraction(1)})


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    return NotImplemented


def _split_signed_terms(text: str):
    # split on top-level " + " / " - ", honoring a leading sign
    text = text.strip()
    pieces = []
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    buf = []
    i = 0
    while i < len(text):
        if text.startswith(" + ", i):
            pieces.append((sign, "".join(buf)))
            sign, buf, i = 1, [], i + 3
        elif text.startswith(" - ", i):
            pieces.append((sign, "".join(buf)))
            sign, buf, i = -1, [], i + 3
        else:
            buf.append(text[i])
            i += 1
    pieces.append((sign, "".join(buf)))
    return pieces


# ---------------------------------------------------------------------------
# Univariate helpers (used for optional normalization and for the
# single-variable sums in localization)
# ---------------------------------------------------------------------------

def lp_divmod(a: LaurentPoly, b: LaurentPoly, v: VarId) -> Tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder for Laurent polynomials in the single variable ``v``."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    amin = a.degree_range(v)[0] if not a.is_zero() else 0
    bmin = b.degree_range(v)[0]
    da = {e: c for e, c in _uni_dict(a, v).items()}
    db = {e - bmin: c for e, c in _uni_dict(b, v).items()}
    da = {e - min(amin, 0): c for e, c in da.items()} if amin < 0 else da
    shift = min(amin, 0)
    deg_b = max(db)
    lead_b = db[deg_b]
    quo: Dict[int, Fraction] = {}
    rem = dict(da)
    while rem and max(rem) >= deg_b:
        d = max(rem)
        c = rem[d] / lead_b
        quo[d - deg_b] = c
        for e, bc in db.items():
            ne = d - deg_b + e
            s = rem.get(ne, Fraction(0)) - c * bc
            if s:
                rem[ne] = s
            else:
                rem.pop(ne, None)
    q = _uni_poly(quo, v, shift=-bmin - shift)
    r = _uni_poly(rem, v, shift=shift)
    return q, r


def lp_gcd(a: LaurentPoly, b: LaurentPoly, v: VarId) -> LaurentPoly:
    """Monic gcd of two Laurent polynomials in the single variable ``v``."""
    a0, b0 = a, b
    while not b0.is_zero():
        _, r = lp_divmod(a0, b0, v)
        a0, b0 = b0, r
    if a0.is_zero():
        return a0
    # make monic with lowest exponent 0
    lo, hi = a0.degree_range(v)
    lead = _uni_dict(a0, v)[hi]
    return _uni_poly({e - lo: c / lead for e, c in _uni_dict(a0, v).items()}, v, 0)


def _uni_dict(p: LaurentPoly, v: VarId) -> Dict[int, Fraction]:
    out = {}
    for exps, coef in p.terms():
        d = dict(exps)
        extra = [w for w in d if w != v]
        if extra:
            raise ValueError(f"{p} is not univariate in {v}")
        out[d.get(v, 0)] = coef
    return out


def _uni_poly(d: Dict[int, Fraction], v: VarId, shift: int) -> LaurentPoly:
    return LaurentPoly({(((v, e + shift),) if e + shift else ()): c
                        for e, c in d.items() if c})


# ---------------------------------------------------------------------------
# Rational functions and series expansion
# ---------------------------------------------------------------------------

ZERO_POINT = "0"
INF_POINT = "inf"


def _normalize_point(point) -> str:
    if point in (0, "0", ZERO_POINT):
        return ZERO_POINT
    if point in ("inf", "infty", "oo", INF_POINT) or point == float("inf"):
        return INF_POINT
    raise ValueError(f"expansion point must be 0 or inf, got {point!r}")


@dataclass(frozen=True)
class SeriesSlice:
    """A window of Laurent series coefficients of a rational function in z.

    ``window`` maps z-degree to a coefficient free of z.  At infinity the
    degrees descend from the leading exponent down to ``-order``; at 0 they
    ascend up to ``order``.  Degrees between the leading exponent and 0 are
    padded with explicit zeros so the constant term can always be read off.
    """

    point: str
    window: Dict[int, LaurentPoly]
    order: int

    def coeff(self, degree: int) -> LaurentPoly:
        return self.window.get(degree, LaurentPoly.zero())

    def constant_term(self) -> LaurentPoly:
        return self.coeff(0)


class RationalFunction:
    """A quotient of Laurent polynomials.

    Equality is decided by cross-multiplication; only monomial and numeric
    content is cancelled eagerly (full normalization is optional, see
    ``reduced``).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = _ONE
        else:
            both = LaurentPoly(dict(list(num.terms()) + [(e, c) for e, c in den.terms()
                                                         if e not in dict(num.terms())]))
            content = both.monomial_content()
            if content:
                num = num.divide_by_monomial(content)
                den = den.divide_by_monomial(content)
        # scale so den has integer primitive coefficients, positive leading term
        scale = _primitive_scale(den)
        if scale != 1:
            num = num * LaurentPoly.const(scale)
            den = den * LaurentPoly.const(scale)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):  # immutable
        raise AttributeError("RationalFunction is immutable")

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other) -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return _coerce_rf(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return _coerce_rf(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other) -> bool:
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        r = self.reduced()
        return hash((r.num, r.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def reduced(self) -> "RationalFunction":
        """Cancel the univariate gcd when num and den involve at most one variable."""
        if self.den.is_one() or self.num.is_zero():
            return self
        vs = self.num.variables() | self.den.variables()
        if len(vs) != 1:
            return self
        v = next(iter(vs))
        g = lp_gcd(self.num, self.den, v)
        if g.is_one() or g.is_zero():
            return self
        n, rn = lp_divmod(self.num, g, v)
        d, rd = lp_divmod(self.den, g, v)
        if not (rn.is_zero() and rd.is_zero()):
            return self
        return RationalFunction(n, d)

    def as_laurent(self) -> LaurentPoly:
        """Return the underlying Laurent polynomial; ValueError if den is not a unit."""
        if self.den.is_one():
            return self.num
        r = self.reduced()
        if r.den.is_one():
            return r.num
        if r.den.is_monomial():
            return r.num * r.den.inv_monomial()
        raise ValueError(f"not a Laurent polynomial: {self}")

    def substitute(self, values) -> "RationalFunction":
        return RationalFunction(self.num.substitute(values), self.den.substitute(values))

    # -- series ---------------------------------------------------------------

    def expand_at(self, point, order: int) -> SeriesSlice:
        """Laurent-expand in z at 0 or infinity, exactly, up to ``order``.

        Raises NonExpandable when the extremal z-coefficient of the
        denominator is not an invertible monomial (degenerate specialization).
        """
        point = _normalize_point(point)
        z = var("z")
        num_z = self.num.split_by(z)
        den_z = self.den.split_by(z)
        if not den_z:
            raise NonExpandable("zero denominator")
        at_inf = point == INF_POINT
        kd = max(den_z) if at_inf else min(den_z)
        lead = den_z[kd]
        if lead.is_zero():
            raise NonExpandable("denominator extremal coefficient vanishes")
        if not lead.is_monomial():
            raise NonExpandable(
                f"denominator extremal coefficient {lead} is not invertible")
        inv_lead = lead.inv_monomial()
        if not num_z:
            return SeriesSlice(point, {d: LaurentPoly.zero()
                                       for d in _window_keys(0, order, at_inf)}, order)
        kn = max(num_z) if at_inf else min(num_z)
        start = kn - kd
        # series coefficients s_j in the local parameter (1/z at inf, z at 0)
        sgn = -1 if at_inf else 1
        n_of = lambda j: num_z.get(kn + sgn * j, LaurentPoly.zero())
        d_of = lambda j: den_z.get(kd + sgn * j, LaurentPoly.zero())
        J = start * (-sgn) + order
        coeffs = []
        for j in range(0, max(J, -1) + 1):
            acc = n_of(j)
            for i in range(1, j + 1):
                acc = acc - d_of(i) * coeffs[j - i]
            coeffs.append(acc * inv_lead)
        window: Dict[int, LaurentPoly] = {}
        for d in _window_keys(start, order, at_inf):
            j = (start - d) if at_inf else (d - start)
            window[d] = coeffs[j] if 0 <= j <= J else LaurentPoly.zero()
        return SeriesSlice(point, window, order)

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__

    @staticmethod
    def parse(text: str) -> "RationalFunction":
        text = text.strip()
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", text)
        if m:
            return RationalFunction(LaurentPoly.parse(m.group(1)),
                                    LaurentPoly.parse(m.group(2)))
        return RationalFunction(LaurentPoly.parse(text))


def _window_keys(start: int, order: int, at_inf: bool):
    if at_inf:
        top = max(start, 0)
        return range(top, -order - 1, -1)
    bot = min(start, 0)
    return range(bot, order + 1)


def _coerce_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly)):
        return RationalFunction(x)
    return NotImplemented


def _primitive_scale(p: LaurentPoly) -> Fraction:
    """Scale making the coefficients of p integer, primitive, positive-lead."""
    from math import gcd
    terms = p._sorted_terms()
    if not terms:
        return Fraction(1)
    num_gcd = 0
    den_lcm = 1
    for _, c in terms:
        num_gcd = gcd(num_gcd, abs(c.numerator))
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    scale = Fraction(den_lcm, num_gcd if num_gcd else 1)
    if terms[0][1] < 0:
        scale = -scale
    return scale


def int_infty_minus_0(f: Union[RationalFunction, LaurentPoly]) -> LaurentPoly:
    """Constant term of f at z = infinity minus the constant term at z = 0.

    The result contains no z.  Vanishes identically on Laurent polynomials
    in z (both constant terms are the z^0 coefficient).
    """
    if isinstance(f, LaurentPoly):
        f = RationalFunction(f)
    c_inf = f.expand_at(INF_POINT, 0).constant_term()
    c_zero = f.expand_at(ZERO_POINT, 0).constant_term()
    return c_inf - c_zero
