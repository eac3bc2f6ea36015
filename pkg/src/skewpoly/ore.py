"""Normal forms and exact arithmetic in skew polynomial rings.

A ring is an ordered list of variables ``t_1, ..., t_n``, each twisting the
scalars through an automorphism/derivation pair ``(aut_i, der_i)`` with the
defining relation ``t_i * r = aut_i(r) * t_i + der_i(r)``.  Variables fix
each other (the tower flavor is the converted commuting-variable ring), so
every element has a unique expansion with left coefficients in the monomial
basis ``t_1^{i_1} ... t_n^{i_n}``.  ``SkewPoly`` stores that expansion as a
sparse map from exponent vectors to non-zero coefficients.

Multiplication distributes the right factor's monomials through the left
one, commuting scalars variable by variable; the closed-form commutation
identities are exercised by the test suite as independent oracles rather
than used as the implementation path.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import IncompatibleMaps, RingMismatch, ZeroPolynomial
from .maps import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    CheckRecord,
    IdentityAut,
    RingMap,
    ZeroDer,
    commutation_record,
    derivation_record,
)
from .scalars import Scalar, ScalarDomain

MINUS_INFINITY = float("-inf")


class Flavor(str, Enum):
    TOWER = "tower"
    COMMUTING = "commuting"


@dataclass(frozen=True, slots=True)
class Variable:
    name: str
    aut: RingMap
    der: RingMap


@dataclass(frozen=True, slots=True)
class RingCertificate:
    """Leibniz certification per variable plus pairwise map commutation."""

    records: tuple[CheckRecord, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def to_data(self) -> list:
        return [r.to_data() for r in self.records]


def _certify(domain, variables, samples, seed) -> RingCertificate:
    records = []
    for v in variables:
        rec = derivation_record(domain, v.aut, v.der, samples, seed)
        records.append(CheckRecord(f"leibniz({v.name})", rec.samples,
                                   rec.failures, rec.analytic))
    for i in range(len(variables)):
        for j in range(i + 1, len(variables)):
            a, b = variables[i], variables[j]
            for m1, m2 in ((a.aut, b.aut), (a.aut, b.der),
                           (a.der, b.aut), (a.der, b.der)):
                records.append(commutation_record(domain, m1, m2,
                                                  samples, seed))
    return RingCertificate(tuple(records))


class OreRing:
    """A skew polynomial ring over one of the supported scalar domains.

    The compatibility certificate is computed at construction: each
    derivation is checked against its automorphism and, for multi-variable
    rings, all map pairs are checked for commutation (analytically for the
    closed constructor family, on seeded samples otherwise).  Multiplication
    in the commuting flavor refuses to run on a failed certificate.
    """

    def __init__(self, domain: ScalarDomain, variables, flavor=Flavor.COMMUTING,
                 *, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED):
        vs = tuple(v if isinstance(v, Variable) else Variable(*v)
                   for v in variables)
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.domain = domain
        self.variables = vs
        self.flavor = Flavor(flavor)
        self.samples = samples
        self.seed = seed
        self.certificate = _certify(domain, vs, samples, seed)

    # -- structure -----------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    def twists(self) -> tuple[tuple[RingMap, RingMap], ...]:
        return tuple((v.aut, v.der) for v in self.variables)

    def tower_maps(self) -> tuple[RingMap, ...]:
        """All automorphisms and derivations, for F-membership checks."""
        out = []
        for v in self.variables:
            out.append(v.aut)
            out.append(v.der)
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, OreRing)
                and self.domain is other.domain
                and self.variables == other.variables
                and self.flavor == other.flavor)

    __hash__ = None

    def __repr__(self):
        vs = ", ".join(f"{v.name};{v.aut.describe()},{v.der.describe()}"
                       for v in self.variables)
        return f"OreRing({self.domain.name}[{vs}], {self.flavor.value})"

    def subring(self, count: int) -> "OreRing":
        """The ring on the first ``count`` variables."""
        return OreRing(self.domain, self.variables[:count], self.flavor,
                       samples=self.samples, seed=self.seed)

    def to_tower(self) -> "OreRing":
        """Convert a commuting-variable ring into its iterated tower.

        Higher twists extend to lower variables by fixing them and killing
        them, so the normal form and products are unchanged; the conversion
        is gated on the compatibility certificate.
        """
        if not self.certificate.ok:
            raise IncompatibleMaps(
                "cannot convert: compatibility certificate failed"
            )
        return OreRing(self.domain, self.variables, Flavor.TOWER,
                       samples=self.samples, seed=self.seed)

    # -- element constructors -------------------------------------------

    def zero(self) -> "SkewPoly":
        return SkewPoly(self, {})

    def constant(self, c: Scalar) -> "SkewPoly":
        return SkewPoly(self, {(0,) * self.nvars: c})

    def one(self) -> "SkewPoly":
        return self.constant(self.domain.one())

    def variable(self, i: int) -> "SkewPoly":
        return self.monomial(tuple(1 if t == i else 0
                                   for t in range(self.nvars)),
                             self.domain.one())

    def variable_named(self, name: str) -> "SkewPoly":
        return self.variable(self.names.index(name))

    def monomial(self, exponents, coeff: Scalar) -> "SkewPoly":
        return SkewPoly(self, {tuple(exponents): coeff})

    # -- commutation kernels ----------------------------------------------

    def _var_power_on_scalar(self, i: int, k: int, r: Scalar) -> dict:
        """t_i^k * r as a map power -> coefficient, by k single steps."""
        aut, der = self.variables[i].aut, self.variables[i].der
        if isinstance(aut, IdentityAut) and isinstance(der, ZeroDer):
            return {k: r}
        cur = {0: r}
        for _ in range(k):
            nxt: dict = {}
            for p, c in cur.items():
                up = aut(c)
                if not up.is_zero():
                    nxt[p + 1] = nxt[p + 1] + up if p + 1 in nxt else up
                down = der(c)
                if not down.is_zero():
                    nxt[p] = nxt[p] + down if p in nxt else down
            cur = {p: c for p, c in nxt.items() if not c.is_zero()}
        return cur

    def _monomial_on_scalar(self, exponents, r: Scalar) -> dict:
        """t^I * r as a map exponent-vector -> coefficient.

        Processes variables right to left; t_i^p commutes freely past the
        already-normalized higher variables.
        """
        n = self.nvars
        cur = {(0,) * n: r}
        for i in range(n - 1, -1, -1):
            k = exponents[i]
            if k == 0:
                continue
            nxt: dict = {}
            for key, c in cur.items():
                for p, d in self._var_power_on_scalar(i, k, c).items():
                    out = key[:i] + (p,) + key[i + 1:]
                    nxt[out] = nxt[out] + d if out in nxt else d
            cur = {e: c for e, c in nxt.items() if not c.is_zero()}
        return cur

    def var_power_times_scalar(self, i: int, k: int, r: Scalar) -> "SkewPoly":
        """Normal form of ``t_i^k * r`` (k >= 0)."""
        if k < 0:
            raise ValueError("exponent must be non-negative")
        n = self.nvars
        terms = {}
        for p, c in self._var_power_on_scalar(i, k, r).items():
            terms[tuple(p if t == i else 0 for t in range(n))] = c
        return SkewPoly(self, terms)

    def monomial_times_scalar(self, exponents, r: Scalar) -> "SkewPoly":
        """Normal form of ``t_1^{i_1} ... t_n^{i_n} * r``."""
        return SkewPoly(self, self._monomial_on_scalar(tuple(exponents), r))

    def scalar_var_power(self, r: Scalar, j: int, m: int) -> "SkewPoly":
        """Normal form of ``(r * t_j)^m`` (m >= 1)."""
        if m < 1:
            raise ValueError("power must be at least 1")
        base = self.monomial(tuple(1 if t == j else 0
                                   for t in range(self.nvars)), r)
        out = base
        for _ in range(m - 1):
            out = out * base
        return out


def evaluation_context(domain: ScalarDomain, names) -> OreRing:
    """A trivially twisted commuting ring used for leading forms, whose
    variables stand for central arguments."""
    ident = IdentityAut()
    return OreRing(domain, [(n, ident, ZeroDer(ident)) for n in names])


class SkewPoly:
    """Sparse normal form: exponent vector -> non-zero left coefficient.

    Values are immutable; all operations return fresh polynomials.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: OreRing, terms: dict):
        n = ring.nvars
        clean = {}
        for exps, c in terms.items():
            if len(exps) != n:
                raise ValueError(
                    f"exponent vector {exps} has wrong arity for {ring!r}"
                )
            if not c.is_zero():
                clean[tuple(exps)] = c
        self.ring = ring
        self.terms = clean

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self):
        """Maximal total exponent; the zero polynomial gets -inf."""
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int):
        if not self.terms:
            return MINUS_INFINITY
        return max(e[var] for e in self.terms)

    def coeff(self, exponents) -> Scalar:
        return self.terms.get(tuple(exponents), self.ring.domain.zero())

    def constant_value(self) -> Scalar:
        """The scalar value of a constant polynomial."""
        if self.total_degree() not in (MINUS_INFINITY, 0):
            raise ValueError(f"{self} is not constant")
        return self.coeff((0,) * self.ring.nvars)

    def ordered_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    # -- module structure --------------------------------------------------

    def _match(self, other):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if self.ring != other.ring:
            raise RingMismatch("operands live in different rings")

    def __add__(self, other):
        self._match(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return SkewPoly(self.ring, out)

    def __neg__(self):
        return SkewPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale_left(self, c: Scalar) -> "SkewPoly":
        """Left multiplication by a scalar (module scaling)."""
        return SkewPoly(self.ring,
                        {e: c * v for e, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, Scalar):
            return self.scale_left(c)
        return NotImplemented

    # -- ring structure ----------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Scalar):
            other = self.ring.constant(other)
        self._match(other)
        ring = self.ring
        if ring.flavor is Flavor.COMMUTING and not ring.certificate.ok:
            raise IncompatibleMaps(
                "multiplication refused: compatibility certificate failed"
            )
        out: dict = {}
        for right_exp, b in other.terms.items():
            for left_exp, a in self.terms.items():
                for mid_exp, c in ring._monomial_on_scalar(left_exp, b).items():
                    exps = tuple(m + r for m, r in zip(mid_exp, right_exp))
                    v = a * c
                    out[exps] = out[exps] + v if exps in out else v
        return SkewPoly(ring, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, SkewPoly)
                and self.ring == other.ring
                and self.terms == other.terms)

    __hash__ = None

    # -- decompositions ------------------------------------------------------

    def split_by_var(self, var: int) -> dict:
        """Map k -> coefficient polynomial of t_var^k (with var zeroed)."""
        buckets: dict = {}
        for e, c in self.terms.items():
            k = e[var]
            stripped = e[:var] + (0,) + e[var + 1:]
            buckets.setdefault(k, {})[stripped] = c
        return {k: SkewPoly(self.ring, t) for k, t in buckets.items()}

    def leading_form(self, excluded: int) -> "SkewPoly":
        """Top-total-degree terms as a commutative left-coefficient
        polynomial in the other variables; the excluded variable's exponent
        is dropped (it is determined by the remaining weight)."""
        if self.is_zero():
            raise ZeroPolynomial("leading form of the zero polynomial")
        top = self.total_degree()
        names = [n for t, n in enumerate(self.ring.names) if t != excluded]
        ctx = evaluation_context(self.ring.domain, names)
        terms: dict = {}
        for e, c in self.terms.items():
            if sum(e) != top:
                continue
            key = e[:excluded] + e[excluded + 1:]
            terms[key] = terms[key] + c if key in terms else c
        return SkewPoly(ctx, terms)

    # -- presentation ----------------------------------------------------------

    def _term_text(self, exponents, coeff, force_wrap=False) -> str:
        factors = []
        for name, e in zip(self.ring.names, exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        one = self.ring.domain.one()
        if not factors or coeff != one:
            text = str(coeff)
            if not coeff.is_atomic_factor() and (factors or force_wrap):
                text = f"({text})"
            factors.insert(0, text)
        return "*".join(factors)

    def __str__(self):
        if not self.terms:
            return "0"
        multi = len(self.terms) > 1
        pieces = []
        for e, c in self.ordered_terms():
            negative = c.is_display_negative()
            text = self._term_text(e, -c if negative else c,
                                   force_wrap=multi or negative)
            pieces.append((negative, text))
        first_neg, first = pieces[0]
        out = f"-{first}" if first_neg else first
        for negative, text in pieces[1:]:
            out += f" - {text}" if negative else f" + {text}"
        return out

    def __repr__(self):
        return f"<SkewPoly {self}>"

    def to_data(self) -> list:
        return [{"exponents": list(e), "coeff": str(c)}
                for e, c in self.ordered_terms()]


def reinterpret(f: SkewPoly, ring: OreRing) -> SkewPoly:
    """The same coefficient data read in another ring with as many variables
    (the left-module identification of equal monomial bases)."""
    if ring.nvars != f.ring.nvars:
        raise RingMismatch("variable counts differ")
    return SkewPoly(ring, dict(f.terms))


def restrict_to_prefix(f: SkewPoly, subring: OreRing) -> SkewPoly:
    """Read a polynomial free of the trailing variables in the prefix ring."""
    k = subring.nvars
    terms = {}
    for e, c in f.terms.items():
        if any(e[k:]):
            raise ValueError("polynomial involves variables beyond the prefix")
        terms[e[:k]] = c
    return SkewPoly(subring, terms)


def extend_from_prefix(f: SkewPoly, ring: OreRing) -> SkewPoly:
    """Embed a prefix-ring polynomial into the full ring (zero padding)."""
    pad = ring.nvars - f.ring.nvars
    if pad < 0:
        raise RingMismatch("target ring has fewer variables")
    return SkewPoly(ring, {e + (0,) * pad: c for e, c in f.terms.items()})


def random_poly(ring: OreRing, rng, max_degree=3, max_terms=4,
                nonzero=False) -> SkewPoly:
    """Seeded random polynomial with total degree <= max_degree."""
    n = ring.nvars
    for _ in range(64):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            d = rng.randint(0, max_degree)
            e = [0] * n
            for _ in range(d):
                if n:
                    e[rng.randrange(n)] += 1
            c = ring.domain.random(rng)
            if not c.is_zero():
                terms[tuple(e)] = c
        p = SkewPoly(ring, terms)
        if not (nonzero and p.is_zero()):
            return p
    raise RuntimeError("failed to draw a non-zero polynomial")
