"""Monicization and the constructive normalization chain.

``monicize`` makes a non-zero relation monic in a chosen variable through a
central linear change of variables ``y_k -> y_k + u_k * y_m`` and a left
scale; the shifts come from the central fixed subfield and are found by
recursive univariate specialization of the relation's leading form (a
non-zero left polynomial of degree d has at most d central roots, so d+1
candidates per coordinate always suffice).

``normalize`` iterates this: each witness relation is re-expressed through
the accumulated substitutions, reduced by the accumulated monic relations,
and then used to eliminate the current last variable, producing a chain of
monic relations that certifies left-module-finiteness over the residual
variables.  Witness relations are inputs; the tool never searches for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .errors import (
    IncompatibleMaps,
    NotAWitness,
    RingMismatch,
    SearchExhausted,
    SkewError,
    ZeroPolynomial,
)
from .evaluation import certify_tuple, evaluate, mix_derivations
from .maps import DEFAULT_SAMPLES, DEFAULT_SEED, central_fixed_stream, lin_comb
from .nullstellensatz import formal_substitute
from .ore import (
    Flavor,
    OreRing,
    SkewPoly,
    evaluation_context,
    extend_from_prefix,
    reinterpret,
    restrict_to_prefix,
)
from .scalars import Scalar


@dataclass(frozen=True, eq=False)
class Substitution:
    """The change of variables of one monicization.

    ``shifts`` holds u_k for the non-target variables in variable order;
    ``scale`` is the left factor a = leading_value^-1 with leading_value =
    h(u) recorded for audit.
    """

    target: int
    shifts: tuple[Scalar, ...]
    scale: Scalar
    leading_value: Scalar

    def to_data(self, names=None) -> dict:
        out = {
            "target": self.target,
            "shifts": [str(u) for u in self.shifts],
            "scale": str(self.scale),
            "leading_value": str(self.leading_value),
        }
        if names is not None:
            out["eliminated"] = names[self.target]
        return out


@dataclass(frozen=True, eq=False)
class MonicRelation:
    """t^m + eps_1 t^{m-1} + ... + eps_m = 0, leading coefficient exactly 1.

    The tails eps_j live in ``ring`` with zero degree in ``var``.
    """

    ring: OreRing
    var: int
    degree: int
    tails: tuple[SkewPoly, ...]

    def __post_init__(self):
        if self.degree < 1 or len(self.tails) != self.degree:
            raise ValueError("need exactly `degree` tail coefficients")
        for t in self.tails:
            if t.ring != self.ring:
                raise RingMismatch("tails must live in the relation's ring")
            if t.degree_in(self.var) > 0:
                raise ValueError("tails must not involve the monic variable")

    def polynomial(self) -> SkewPoly:
        one = self.ring.domain.one()
        n = self.ring.nvars
        out = self.ring.monomial(
            tuple(self.degree if t == self.var else 0 for t in range(n)), one)
        for j, eps in enumerate(self.tails, start=1):
            power = self.ring.monomial(
                tuple(self.degree - j if t == self.var else 0
                      for t in range(n)), one)
            out = out + eps * power
        return out

    def to_data(self) -> dict:
        return {
            "variable": self.ring.names[self.var],
            "degree": self.degree,
            "tails": [t.to_data() for t in self.tails],
        }


@dataclass(frozen=True, slots=True)
class PointSearch:
    point: tuple[Scalar, ...]
    specializations: int


def _specialize_first(h: SkewPoly, value: Scalar) -> SkewPoly:
    """Substitute a central value for the first context variable."""
    ctx = evaluation_context(h.ring.domain, h.ring.names[1:])
    terms: dict = {}
    for e, c in h.terms.items():
        v = c * value ** e[0]
        key = e[1:]
        if key in terms:
            v = terms[key] + v
        if v.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = v
    return SkewPoly(ctx, terms)


def find_nonvanishing_point(h: SkewPoly, stream) -> PointSearch:
    """A point of F^k with h(point) != 0, by univariate specialization.

    Per coordinate the first deg(h)+1 stream values are tried and the first
    one keeping the specialized polynomial non-zero is fixed; Gordon-Motzkin
    guarantees one exists, so exhaustion is defensive.
    """
    if h.is_zero():
        raise ZeroPolynomial("no non-vanishing point for the zero polynomial")
    budget = int(h.total_degree()) + 1
    candidates = list(islice(stream, budget))
    point = []
    tests = 0
    cur = h
    for _ in range(h.ring.nvars):
        for c in candidates:
            tests += 1
            sp = _specialize_first(cur, c)
            if not sp.is_zero():
                point.append(c)
                cur = sp
                break
        else:
            raise SearchExhausted(
                "all candidate specializations vanished (cannot occur for a "
                "non-zero polynomial over an infinite fixed subfield)"
            )
    return PointSearch(tuple(point), tests)


def _require_normalizable(ring: OreRing):
    if ring.flavor is not Flavor.COMMUTING:
        raise ValueError("a commuting-variable ring is required")
    if not ring.certificate.ok:
        raise IncompatibleMaps("ring compatibility certificate failed")
    auts = {v.aut for v in ring.variables}
    if len(auts) > 1:
        raise IncompatibleMaps(
            "all variables must share one automorphism for normalization"
        )


def monicize(f: SkewPoly, target: int | None = None,
             samples: int = DEFAULT_SAMPLES,
             seed: int = DEFAULT_SEED) -> tuple[Substitution, SkewPoly]:
    """Monic-in-``target`` form of a non-zero relation.

    Returns the substitution data and g = a * f(..., y_k + u_k y_target, ...)
    whose ``target`` degree equals deg(f) with leading coefficient exactly 1.
    """
    ring = f.ring
    _require_normalizable(ring)
    if f.is_zero():
        raise ZeroPolynomial("cannot monicize the zero polynomial")
    degree = f.total_degree()
    if degree < 1:
        raise ValueError("a non-constant relation is required")
    if target is None:
        target = ring.nvars - 1
    if not 0 <= target < ring.nvars:
        raise ValueError(f"no variable with index {target}")

    h = f.leading_form(target)
    stream = central_fixed_stream(ring.domain, ring.tower_maps())
    search = find_nonvanishing_point(h, stream)
    leading_value = formal_substitute(h, search.point)
    scale = leading_value.inv()

    aut = ring.variables[0].aut
    one = ring.domain.one()
    others = [i for i in range(ring.nvars) if i != target]
    shift_of = dict(zip(others, search.point))
    target_der = ring.variables[target].der

    mixed_vars = []
    elements = []
    t_var = ring.variable(target)
    for i, v in enumerate(ring.variables):
        if i == target:
            mixed_vars.append((v.name, aut, v.der))
            elements.append(t_var)
        else:
            d = lin_comb([(one, v.der), (shift_of[i], target_der)], twist=aut)
            mixed_vars.append((v.name, aut, d))
            elements.append(ring.variable(i) + t_var.scale_left(shift_of[i]))
    mixed_ring = OreRing(ring.domain, mixed_vars, Flavor.COMMUTING,
                         samples=samples, seed=seed)
    tup = certify_tuple(ring, elements, mixed_ring.twists(), samples, seed)
    g = evaluate(reinterpret(f, mixed_ring), tup).scale_left(scale)

    top = tuple(int(degree) if t == target else 0 for t in range(ring.nvars))
    if g.degree_in(target) != degree or g.coeff(top) != one:
        raise SkewError(
            "internal error: monicization postcondition failed"
        )
    return Substitution(target, search.point, scale, leading_value), g


@dataclass(frozen=True, eq=False)
class NormalizationStep:
    """One eliminated variable: the substitution, the new presentation's
    (aut, der) tower, and the monic relation the variable satisfies."""

    substitution: Substitution
    tower: tuple
    relation: MonicRelation

    def to_data(self) -> dict:
        return {
            "substitution": self.substitution.to_data(self.relation.ring.names),
            "mixed_derivations": [
                {"name": name, "aut": aut.to_data(), "der": der.to_data()}
                for name, (aut, der) in zip(self.relation.ring.names,
                                            self.tower)
            ],
            "monic_relation": self.relation.to_data(),
        }


def normalize_step(f: SkewPoly, samples: int = DEFAULT_SAMPLES,
                   seed: int = DEFAULT_SEED) -> NormalizationStep:
    """Eliminate the last variable using the witness relation ``f``.

    Monicizes f in the last variable, forms the new variables
    t_k = y_k - u_k y_n with the mixed tower (aut, der_k - u_k der_n), reads
    the monic relation off g, and asserts the replay identity
    g(t_1, ..., t_n) = a*f exactly.
    """
    ring = f.ring
    target = ring.nvars - 1
    sub, g = monicize(f, target, samples, seed)

    ders = [v.der for v in ring.variables]
    mixed = mix_derivations(ring.domain, ders, [-u for u in sub.shifts],
                            samples, seed)
    aut = ring.variables[0].aut
    new_ring = OreRing(
        ring.domain,
        [(v.name, aut, d) for v, d in zip(ring.variables, mixed)],
        Flavor.COMMUTING, samples=samples, seed=seed)

    m = int(g.degree_in(target))
    buckets = g.split_by_var(target)
    tails = tuple(
        reinterpret(buckets.get(m - j, ring.zero()), new_ring)
        for j in range(1, m + 1)
    )
    relation = MonicRelation(new_ring, target, m, tails)

    t_last = ring.variable(target)
    t_elements = [ring.variable(i) - t_last.scale_left(u)
                  for i, u in enumerate(sub.shifts)]
    t_elements.append(t_last)
    replay_tup = certify_tuple(ring, t_elements, new_ring.twists(),
                               samples, seed)
    if evaluate(reinterpret(g, new_ring), replay_tup) != f.scale_left(sub.scale):
        raise SkewError("internal error: replay identity g(t) = a*f failed")
    return NormalizationStep(sub, new_ring.twists(), relation)


def divmod_by_monic(e: SkewPoly, rel: MonicRelation) -> tuple[SkewPoly, SkewPoly]:
    """Left division by the monic relation: e = q * rel.polynomial() + r with
    the remainder's degree in the monic variable below rel.degree."""
    if e.ring != rel.ring:
        raise RingMismatch("element and relation live in different rings")
    rho = rel.polynomial()
    v, m = rel.var, rel.degree
    q = e.ring.zero()
    r = e
    while True:
        k = r.degree_in(v)
        if k < m:
            break
        top = {
            exp[:v] + (int(k) - m,) + exp[v + 1:]: c
            for exp, c in r.terms.items() if exp[v] == k
        }
        quo = SkewPoly(e.ring, top)
        r = r - quo * rho
        q = q + quo
        if r.degree_in(v) >= k:
            raise SkewError("internal error: reduction did not lower degree")
    return q, r


def reduce_by_monic(e: SkewPoly, rel: MonicRelation) -> SkewPoly:
    """Remainder of ``e`` modulo the left ideal of the monic relation."""
    return divmod_by_monic(e, rel)[1]


@dataclass(frozen=True, eq=False)
class NormalizationResult:
    """The replayable chain: one step per eliminated variable, the final
    presentation ring, and the relations re-expressed in it."""

    ring: OreRing
    steps: tuple[NormalizationStep, ...]
    presentation: OreRing
    relations: tuple[MonicRelation, ...]
    skipped: tuple[tuple[int, str], ...]

    @property
    def residual_variables(self) -> tuple[str, ...]:
        keep = self.ring.nvars - len(self.steps)
        return self.presentation.names[:keep]

    @property
    def generator_bounds(self) -> tuple[int, ...]:
        """Module-generator exponent bound per eliminated variable."""
        return tuple(s.relation.degree for s in self.steps)

    def to_data(self) -> dict:
        return {
            "steps": [s.to_data() for s in self.steps],
            "residual_variables": list(self.residual_variables),
            "generator_bounds": list(self.generator_bounds),
            "skipped": [{"relation": i, "reason": why}
                        for i, why in self.skipped],
        }


def normalize(ring: OreRing, relations,
              samples: int = DEFAULT_SAMPLES,
              seed: int = DEFAULT_SEED) -> NormalizationResult:
    """Run the normalization chain over the witness relations, in order.

    Each relation is re-expressed through the accumulated substitutions and
    reduced by the accumulated monic relations.  A relation that vanishes is
    reported and skipped; one that still involves an eliminated variable
    violates the witness precondition and raises ``NotAWitness``.
    """
    _require_normalizable(ring)
    presentation = ring
    active = ring.nvars
    exprs = [presentation.variable(i) for i in range(ring.nvars)]
    rels: list[MonicRelation] = []
    steps: list[NormalizationStep] = []
    skipped: list[tuple[int, str]] = []

    for index, f in enumerate(relations):
        if f.ring != ring:
            raise RingMismatch("relations must live in the input ring")
        if presentation == ring:
            w = f
        else:
            tup = certify_tuple(presentation, exprs, ring.twists(),
                                samples, seed)
            w = evaluate(f, tup)
        for rel in reversed(rels):
            w = reduce_by_monic(w, rel)
        if w.is_zero():
            skipped.append((index, "vanished after substitution and reduction"))
            continue
        if active == 0 or any(any(e[active:]) for e in w.terms):
            raise NotAWitness(
                f"relation {index} still involves eliminated variables "
                "after reduction"
            )
        sub_ring = presentation.subring(active)
        w_active = restrict_to_prefix(w, sub_ring)
        step = normalize_step(w_active, samples, seed)
        steps.append(step)

        new_presentation = OreRing(
            presentation.domain,
            list(step.relation.ring.variables)
            + list(presentation.variables[active:]),
            Flavor.COMMUTING, samples=samples, seed=seed)
        push_elements = []
        t_last = new_presentation.variable(active - 1)
        for i in range(presentation.nvars):
            if i < active - 1:
                push_elements.append(new_presentation.variable(i)
                                     + t_last.scale_left(step.substitution.shifts[i]))
            else:
                push_elements.append(new_presentation.variable(i))
        push = certify_tuple(new_presentation, push_elements,
                             presentation.twists(), samples, seed)
        exprs = [evaluate(e, push) for e in exprs]
        pushed = [
            MonicRelation(new_presentation, r.var, r.degree,
                          tuple(evaluate(t, push) for t in r.tails))
            for r in rels
        ]
        new_rel = MonicRelation(
            new_presentation, step.relation.var, step.relation.degree,
            tuple(extend_from_prefix(t, new_presentation)
                  for t in step.relation.tails))
        rels = pushed + [new_rel]
        presentation = new_presentation
        active -= 1

    return NormalizationResult(ring, tuple(steps), presentation,
                               tuple(rels), tuple(skipped))
