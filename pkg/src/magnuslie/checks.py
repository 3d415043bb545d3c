"""Seeded property suites behind the CLI and the acceptance tests.

Each suite draws its cases from a private random.Random(seed), so a
report is a pure function of its arguments.  Failures carry a textual
counterexample; pass counts and seeds go into the run report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .liebasis import LieElement, bracket, generator_element, leading_lie_form, lyndon_words
from .quotient import ideal_component, ideal_component_alt
from .series import Series, WeightScheme
from .snf import integer_row_space
from .words import (Word, filtration_degree, free_reduce, generator,
                    group_commutator, magnus_embed, random_word, word_to_text)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    failures: int
    seed: int | None = None
    applicable: int | None = None
    counterexample: str | None = None
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0


# -- weighted filtration vs lower central series --------------------------


def floor_bound_suite(scheme: WeightScheme, samples: int = 1000, max_len: int = 12,
                 seed: int = 0, cutoff: int | None = None) -> SuiteResult:
    """Sampled floor bound between the two filtrations.

    For every sampled word whose weighted degree i is certified by the
    window and satisfies i >= e, the e = 1 degree of the same word must
    be at least floor(i / e).  The e = 1 degree only needs certifying
    down to that floor, so a tiny second window suffices.
    """
    if cutoff is None:
        cutoff = scheme.e + 3
    e1_scheme = WeightScheme(scheme.m, scheme.n, 1)
    rng = Random(seed)
    applicable = 0
    failures = 0
    counterexample = None
    for _ in range(samples):
        word = random_word(rng, scheme, max_len)
        weighted = filtration_degree(word, scheme, cutoff)
        if not weighted.exact or weighted.bound < scheme.e:
            continue
        applicable += 1
        floor = weighted.bound // scheme.e
        lower = filtration_degree(word, e1_scheme, max(floor, 1))
        if not lower.at_least(floor):
            failures += 1
            if counterexample is None:
                counterexample = word_to_text(word, scheme)
    return SuiteResult(
        name="floor_bound", cases=samples, failures=failures, seed=seed,
        applicable=applicable, counterexample=counterexample,
        detail={"cutoff": cutoff, "max_word_len": max_len, "e": scheme.e},
    )


# -- basic commutators under e = 1 -----------------------------------------


def left_normed_basic_sequences(scheme: WeightScheme, max_weight: int,
                                num_letters: int = 2) -> list[tuple[int, ...]]:
    """Index sequences of the left-normed basic commutators.

    Weight-1 sequences are the bare generators.  Longer ones satisfy
    i1 > i2 <= i3 <= ... <= ik, the standard collection condition for a
    left-normed bracket to be basic; their weighted degrees stay within
    max_weight.  Ordered by weight, then lexicographically.
    """
    letters = list(range(min(num_letters, scheme.letters)))
    weights = {g: scheme.letter_weight(g) for g in letters}
    out: list[tuple[int, ...]] = []
    for g in letters:
        if weights[g] <= max_weight:
            out.append((g,))

    def extend(seq: tuple[int, ...], weight: int):
        if len(seq) >= 2:
            out.append(seq)
        for g in letters:
            if g >= seq[-1] and weight + weights[g] <= max_weight:
                extend(seq + (g,), weight + weights[g])

    for first in letters:
        for second in letters:
            if first > second:
                w = weights[first] + weights[second]
                if w <= max_weight:
                    extend((first, second), w)
    out.sort(key=lambda seq: (sum(weights[g] for g in seq), seq))
    return out


def _left_normed_word(seq: tuple[int, ...]) -> Word:
    word = generator(seq[0])
    for g in seq[1:]:
        word = group_commutator(word, generator(g))
    return word


def _left_normed_bracket(scheme: WeightScheme, seq: tuple[int, ...]) -> LieElement:
    elem = generator_element(scheme, seq[0])
    for g in seq[1:]:
        elem = bracket(elem, generator_element(scheme, g))
    return elem


def magnus_e1_suite(scheme: WeightScheme, max_weight: int = 6,
                    num_letters: int = 2) -> SuiteResult:
    """Basic commutators pin the e = 1 filtration exactly.

    Every left-normed basic commutator word must have e = 1 degree equal
    to its letter count, with leading form the matching bracket of
    generators; under the weighted scheme its degree is at least its
    weighted letter sum.  Deterministic, no sampling.
    """
    e1_scheme = WeightScheme(scheme.m, scheme.n, 1)
    sequences = left_normed_basic_sequences(scheme, max_weight, num_letters)
    failures = 0
    counterexample = None

    def fail(seq):
        nonlocal failures, counterexample
        failures += 1
        if counterexample is None:
            counterexample = word_to_text(_left_normed_word(seq), scheme)

    for seq in sequences:
        word = _left_normed_word(seq)
        length = len(seq)
        e1_degree = filtration_degree(word, e1_scheme, length)
        if not (e1_degree.exact and e1_degree.bound == length):
            fail(seq)
            continue
        degree, form = leading_lie_form(word, e1_scheme, length)
        expected = _left_normed_bracket(e1_scheme, seq)
        if degree != length or form != expected:
            fail(seq)
            continue
        weighted_total = sum(scheme.letter_weight(g) for g in seq)
        weighted = filtration_degree(word, scheme, weighted_total)
        if not weighted.at_least(weighted_total):
            fail(seq)
    return SuiteResult(
        name="magnus_e1", cases=len(sequences), failures=failures,
        counterexample=counterexample,
        detail={"max_weight": max_weight, "num_letters": num_letters},
    )


# -- algebra law suites -----------------------------------------------------


def homomorphism_suite(scheme: WeightScheme, samples: int = 500,
                       max_len: int = 6, seed: int = 0,
                       cutoff: int = 5) -> SuiteResult:
    """Embedding of a product equals the product of the embeddings."""
    rng = Random(seed)
    failures = 0
    counterexample = None
    for _ in range(samples):
        w = random_word(rng, scheme, max_len)
        z = random_word(rng, scheme, max_len)
        product = free_reduce(w + z, scheme)
        lhs = magnus_embed(product, scheme, cutoff)
        rhs = magnus_embed(w, scheme, cutoff) * magnus_embed(z, scheme, cutoff)
        if lhs != rhs:
            failures += 1
            if counterexample is None:
                counterexample = (f"w = {word_to_text(w, scheme)}, "
                                  f"z = {word_to_text(z, scheme)}")
    return SuiteResult(
        name="mu_homomorphism", cases=samples, failures=failures, seed=seed,
        counterexample=counterexample,
        detail={"cutoff": cutoff, "max_word_len": max_len},
    )


def random_series(rng: Random, scheme: WeightScheme, cutoff: int,
                  max_terms: int = 5, max_term_weight: int | None = None) -> Series:
    """A random nonzero integer series with small support."""
    max_term_weight = cutoff if max_term_weight is None else max_term_weight
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        length = rng.randrange(0, max_term_weight + 1)
        mono = tuple(rng.randrange(scheme.letters) for _ in range(length))
        if scheme.monomial_weight(mono) > max_term_weight:
            continue
        coeff = rng.choice([-9, -3, -2, -1, 1, 2, 3, 9])
        terms[mono] = terms.get(mono, 0) + coeff
    if not any(terms.values()):
        terms[()] = 1
    return Series(scheme, cutoff, terms)


def valuation_mult_suite(scheme: WeightScheme, samples: int = 500,
                         seed: int = 0, cutoff: int = 8) -> SuiteResult:
    """Valuations add under multiplication when the sum fits the window."""
    rng = Random(seed)
    failures = 0
    applicable = 0
    counterexample = None
    half = cutoff // 2
    for _ in range(samples):
        f = random_series(rng, scheme, cutoff, max_term_weight=half)
        g = random_series(rng, scheme, cutoff, max_term_weight=half)
        if f.is_zero() or g.is_zero():
            continue
        applicable += 1
        expected = f.valuation() + g.valuation()
        if (f * g).valuation() != expected:
            failures += 1
            if counterexample is None:
                counterexample = f"f = {f.to_text()}, g = {g.to_text()}"
    return SuiteResult(
        name="valuation_multiplicativity", cases=samples, failures=failures,
        seed=seed, applicable=applicable, counterexample=counterexample,
        detail={"cutoff": cutoff},
    )


def random_lie_element(rng: Random, scheme: WeightScheme, degree: int) -> LieElement:
    basis = lyndon_words(scheme, degree)
    if not basis:
        return LieElement.zero(scheme, degree)
    coords = {}
    for word in basis:
        if rng.randrange(2):
            coords[word] = rng.choice([-3, -2, -1, 1, 2, 3])
    if not coords:
        coords[rng.choice(basis)] = 1
    return LieElement(scheme, degree, coords)


def jacobi_suite(scheme: WeightScheme, samples: int = 500, seed: int = 0,
                 max_degree: int = 3) -> SuiteResult:
    """Antisymmetry and the Jacobi identity on random homogeneous triples."""
    rng = Random(seed)
    failures = 0
    counterexample = None
    degrees = [k for k in range(1, max_degree + 1) if lyndon_words(scheme, k)]
    for _ in range(samples):
        a = random_lie_element(rng, scheme, rng.choice(degrees))
        b = random_lie_element(rng, scheme, rng.choice(degrees))
        c = random_lie_element(rng, scheme, rng.choice(degrees))
        anti = bracket(a, b) + bracket(b, a)
        jac = (bracket(bracket(a, b), c) + bracket(bracket(b, c), a)
               + bracket(bracket(c, a), b))
        if not (anti.is_zero() and jac.is_zero()):
            failures += 1
            if counterexample is None:
                counterexample = f"a = {a}, b = {b}, c = {c}"
    return SuiteResult(
        name="jacobi_antisymmetry", cases=samples, failures=failures,
        seed=seed, counterexample=counterexample,
        detail={"max_degree": max_degree},
    )


_STRATEGY_SCHEMES = (
    WeightScheme(2, 0, 1),
    WeightScheme(2, 1, 2),
    WeightScheme(1, 1, 2),
    WeightScheme(3, 1, 3),
)


def strategy_independence_suite(samples: int = 500, seed: int = 0,
                                max_extra: int = 3) -> SuiteResult:
    """Both ideal generation strategies span the same integer row space."""
    rng = Random(seed)
    failures = 0
    counterexample = None
    for _ in range(samples):
        scheme = _STRATEGY_SCHEMES[rng.randrange(len(_STRATEGY_SCHEMES))]
        d = rng.randrange(1, 4)
        while not lyndon_words(scheme, d):
            d = rng.randrange(1, 4)
        rho = random_lie_element(rng, scheme, d)
        n = d + rng.randrange(1, max_extra + 1)
        basis = lyndon_words(scheme, n)
        index = {w: i for i, w in enumerate(basis)}
        primary = ideal_component(rho, n, scheme)
        alt = ideal_component_alt(rho, n, scheme)
        rows_primary = [dict(enumerate(row)) for row in primary.matrix]
        rows_alt = [{index[w]: c for w, c in elem.coords.items()} for elem in alt]
        lhs = integer_row_space(rows_primary, len(basis))
        rhs = integer_row_space(rows_alt, len(basis))
        if lhs != rhs:
            failures += 1
            if counterexample is None:
                counterexample = f"scheme {scheme}, rho = {rho}, degree {n}"
    return SuiteResult(
        name="ideal_strategy_independence", cases=samples, failures=failures,
        seed=seed, counterexample=counterexample,
        detail={"max_extra": max_extra},
    )
