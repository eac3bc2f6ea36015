"""Automorphic elements, evaluation homomorphisms and derivation mixing.

An *automorphic tuple* is a family of commuting ring elements, each of which
commutes past scalars the way a fresh variable would: ``s*r = aut(r)*s +
der(r)``.  Substituting such a tuple for the variables is then a ring
homomorphism fixing the scalars, which is what makes the monicization
change of variables work.

Certificates are checked on construction: element commutation is an exact
polynomial identity, the automorphic law is verified on seeded scalar
samples, and F-linear combinations of the variables under a shared
automorphism are additionally flagged as analytically certified.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateFailed, RingMismatch, TwistMismatch
from .maps import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    CheckRecord,
    RingMap,
    commutation_record,
    derivation_record,
    in_fixed_subfield,
    lin_comb,
    require_in_fixed_subfield,
    sample_scalars,
)
from .ore import OreRing, SkewPoly


@dataclass(frozen=True, slots=True)
class TupleCertificate:
    records: tuple[CheckRecord, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def to_data(self) -> list:
        return [r.to_data() for r in self.records]


@dataclass(frozen=True, eq=False)
class AutomorphicTuple:
    """Elements of an ambient ring with their claimed twists and the
    certificate that they behave like variables."""

    ambient: OreRing
    elements: tuple[SkewPoly, ...]
    twists: tuple[tuple[RingMap, RingMap], ...]
    certificate: TupleCertificate

    def __len__(self):
        return len(self.elements)


def is_automorphic(s: SkewPoly, aut: RingMap, der: RingMap,
                   samples: int = DEFAULT_SAMPLES,
                   seed: int = DEFAULT_SEED) -> bool:
    """Whether ``s*r = aut(r)*s + der(r)`` holds for all sampled scalars."""
    ring = s.ring
    for r in sample_scalars(ring.domain, seed, samples):
        lhs = s * ring.constant(r)
        rhs = s.scale_left(aut(r)) + ring.constant(der(r))
        if lhs != rhs:
            return False
    return True


def _linear_form_flag(ambient: OreRing, s: SkewPoly, claimed_aut: RingMap):
    """Analytic shortcut: an F-linear combination of the variables under a
    shared automorphism is automorphic by construction."""
    auts = {v.aut for v in ambient.variables}
    if auts != {claimed_aut}:
        return None
    maps = ambient.tower_maps()
    for e, c in s.terms.items():
        if sum(e) != 1 or not in_fixed_subfield(ambient.domain, maps, c):
            return None
    return True


def certify_tuple(ambient: OreRing, elements, twists,
                  samples: int = DEFAULT_SAMPLES,
                  seed: int = DEFAULT_SEED) -> AutomorphicTuple:
    """Build a tuple and record its commutation / automorphic-law checks."""
    elements = tuple(elements)
    twists = tuple((a, d) for a, d in twists)
    if len(elements) != len(twists):
        raise ValueError("one (aut, der) pair is needed per element")
    for s in elements:
        if s.ring != ambient:
            raise RingMismatch("tuple elements must live in the ambient ring")
    records = []
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            equal = (elements[i] * elements[j] == elements[j] * elements[i])
            records.append(CheckRecord(f"commute(s{i + 1}, s{j + 1})",
                                       1, 0 if equal else 1))
    pool = sample_scalars(ambient.domain, seed, samples)
    for idx, (s, (aut, der)) in enumerate(zip(elements, twists)):
        failures = 0
        for r in pool:
            lhs = s * ambient.constant(r)
            rhs = s.scale_left(aut(r)) + ambient.constant(der(r))
            if lhs != rhs:
                failures += 1
        records.append(CheckRecord(f"automorphic(s{idx + 1})", samples,
                                   failures,
                                   _linear_form_flag(ambient, s, aut)))
    return AutomorphicTuple(ambient, elements, twists,
                            TupleCertificate(tuple(records)))


def evaluate(f: SkewPoly, tup: AutomorphicTuple) -> SkewPoly:
    """Substitute the tuple for the variables: sum of b_I s_1^{i_1}...s_n^{i_n}.

    This is the ring homomorphism of the certified tuple; it requires the
    polynomial's ring twists to match the tuple's claimed twists exactly.
    """
    if not tup.certificate.ok:
        raise CertificateFailed("tuple certificate did not pass")
    if f.ring.nvars != len(tup.elements):
        raise TwistMismatch("variable count differs from tuple length")
    if f.ring.domain is not tup.ambient.domain:
        raise RingMismatch("scalar domains differ")
    if f.ring.twists() != tup.twists:
        raise TwistMismatch(
            "polynomial ring twists differ from the tuple's claimed twists"
        )
    ambient = tup.ambient
    powers: list[dict] = [{0: ambient.one()} for _ in tup.elements]

    def power(i: int, e: int) -> SkewPoly:
        cache = powers[i]
        while e not in cache:
            top = max(cache)
            cache[top + 1] = cache[top] * tup.elements[i]
        return cache[e]

    out = ambient.zero()
    for exps, b in f.terms.items():
        term = ambient.one()
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        out = out + term.scale_left(b)
    return out


def _shared_twist(ders) -> RingMap:
    twists = {d.twist for d in ders}
    if len(twists) != 1:
        raise ValueError("derivations must share one paired automorphism")
    return next(iter(twists))


def mix_derivations(domain, ders, coeffs,
                    samples: int = DEFAULT_SAMPLES,
                    seed: int = DEFAULT_SEED) -> list[RingMap]:
    """d_i = der_i + a_i * der_n for i < n, d_n = der_n, with each a_i from F.

    The outputs are certified: twisted Leibniz for every d_i, commutation
    with the shared automorphism, and pairwise commutation.
    """
    ders = list(ders)
    coeffs = list(coeffs)
    if len(coeffs) != len(ders) - 1:
        raise ValueError("need one coefficient per derivation except the last")
    aut = _shared_twist(ders)
    fmaps = [aut, *ders]
    one = domain.one()
    mixed = []
    for der, a in zip(ders[:-1], coeffs):
        require_in_fixed_subfield(domain, fmaps, a)
        mixed.append(lin_comb([(one, der), (a, ders[-1])], twist=aut))
    mixed.append(ders[-1])
    for i, d in enumerate(mixed):
        if derivation_record(domain, aut, d, samples, seed).failures:
            raise CertificateFailed(f"mixed map d{i + 1} fails the Leibniz law")
        if commutation_record(domain, aut, d, samples, seed).failures:
            raise CertificateFailed(f"d{i + 1} does not commute with the twist")
        for j in range(i):
            if commutation_record(domain, mixed[j], d, samples, seed).failures:
                raise CertificateFailed(f"d{j + 1} and d{i + 1} do not commute")
    return mixed


def mix_elements(tup: AutomorphicTuple, coeffs,
                 samples: int = DEFAULT_SAMPLES,
                 seed: int = DEFAULT_SEED) -> AutomorphicTuple:
    """u_i = s_i + a_i * s_n for i < n, u_n = s_n, re-certified against the
    mixed derivations."""
    coeffs = list(coeffs)
    auts = {a for a, _ in tup.twists}
    if len(auts) != 1:
        raise ValueError("mixing requires a shared automorphism")
    mixed_ders = mix_derivations(tup.ambient.domain,
                                 [d for _, d in tup.twists], coeffs,
                                 samples, seed)
    aut = next(iter(auts))
    last = tup.elements[-1]
    elements = [s + last.scale_left(a)
                for s, a in zip(tup.elements[:-1], coeffs)]
    elements.append(last)
    out = certify_tuple(tup.ambient, elements,
                        [(aut, d) for d in mixed_ders], samples, seed)
    if not out.certificate.ok:
        raise CertificateFailed(
            "mixed tuple failed certification; an upstream hypothesis "
            "(commuting derivations or F-membership) does not hold"
        )
    return out
