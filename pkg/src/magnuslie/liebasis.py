"""The free Lie ring on weighted generators, over a Lyndon word basis.

Generators mirror the series letters: xi_1..xi_m of weight 1 and
eta_1..eta_n of weight e.  The basis of the weight-k component consists
of the Lyndon words of weighted degree k over the ordered alphabet
xi_1 < .. < xi_m < eta_1 < .. < eta_n, each word carrying its standard
factorization bracketing.

Two classical facts drive the computations here and are exercised by
the test suite rather than re-derived:

* Triangularity: expanding the standard bracketing of a Lyndon word in
  the associative algebra gives the word itself with coefficient 1 plus
  lexicographically larger words of the same length.  Back substitution
  along increasing monomials therefore rewrites any Lie element into
  integer Lyndon coordinates deterministically.
* The left-to-right bracketing map D (z1 z2 .. zk goes to
  [..[[z1,z2],z3]..,zk], extended linearly) fixes Lie elements up to
  the factor k: a length-homogeneous p is a Lie element over the
  rationals exactly when D(p) = k p.  Recognition runs this check per
  word length and then demands integer Lyndon coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .series import INFINITY, Series, WeightScheme
from .words import Word, magnus_embed


class NotLieElement(ValueError):
    """Raised when a homogeneous component fails Lie recognition."""


class NotIntegralCoordinates(ValueError):
    """Raised when rational Lyndon coordinates are not integers."""


class DegreeAboveCutoff(ValueError):
    """Raised when a leading form is not certified by the cutoff window."""


# -- Lyndon words --------------------------------------------------------


@lru_cache(maxsize=None)
def _is_lyndon(word: tuple[int, ...]) -> bool:
    n = len(word)
    if n == 0:
        return False
    for i in range(1, n):
        if word[i:] + word[:i] <= word:
            return False
    return True


@lru_cache(maxsize=None)
def _weighted_lyndon_words(weights: tuple[int, ...], max_weight: int):
    """All Lyndon words of weighted degree <= max_weight, bucketed by degree.

    Duval's algorithm enumerates Lyndon words by length; every letter
    weighs at least 1, so length max_weight bounds the search.
    """
    k = len(weights)
    by_weight: dict[int, list[tuple[int, ...]]] = {w: [] for w in range(1, max_weight + 1)}
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        weight = sum(weights[letter] for letter in w)
        if weight <= max_weight:
            by_weight[weight].append(tuple(w))
        while len(w) < max_weight:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()
    for bucket in by_weight.values():
        bucket.sort()
    return {weight: tuple(bucket) for weight, bucket in by_weight.items()}


def lyndon_words(scheme: WeightScheme, weight: int) -> list[tuple[int, ...]]:
    """Lyndon words of the given weighted degree, in lexicographic order."""
    if weight < 1:
        raise ValueError("weight must be positive")
    table = _weighted_lyndon_words(scheme.letter_weights(), weight)
    return list(table.get(weight, ()))


def witt_dimensions(scheme: WeightScheme, up_to: int) -> list[int]:
    """dim of the weight-k component for k = 1..up_to, by Lyndon count."""
    if up_to < 1:
        raise ValueError("up_to must be positive")
    table = _weighted_lyndon_words(scheme.letter_weights(), up_to)
    return [len(table.get(k, ())) for k in range(1, up_to + 1)]


@lru_cache(maxsize=None)
def standard_factorization(word: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a Lyndon word at its lexicographically least proper suffix."""
    if len(word) < 2:
        raise ValueError("factorization needs length at least 2")
    best = 1
    for i in range(2, len(word)):
        if word[i:] < word[best:]:
            best = i
    return word[:best], word[best:]


@lru_cache(maxsize=None)
def standard_bracketing(word: tuple[int, ...]):
    """Nested-pair bracketing from the standard factorization."""
    if len(word) == 1:
        return word[0]
    left, right = standard_factorization(word)
    return (standard_bracketing(left), standard_bracketing(right))


def bracketing_text(bracketing, scheme: WeightScheme) -> str:
    if isinstance(bracketing, int):
        return scheme.generator_name(bracketing)
    left, right = bracketing
    return f"[{bracketing_text(left, scheme)}, {bracketing_text(right, scheme)}]"


@dataclass(frozen=True)
class LyndonBasisElement:
    word: tuple[int, ...]
    weight: int
    bracketing: object

    def text(self, scheme: WeightScheme) -> str:
        return bracketing_text(self.bracketing, scheme)


def lyndon_basis(scheme: WeightScheme, weight: int) -> list[LyndonBasisElement]:
    """The weight-homogeneous basis, words in lexicographic order."""
    return [LyndonBasisElement(w, weight, standard_bracketing(w))
            for w in lyndon_words(scheme, weight)]


# -- associative expansions ----------------------------------------------


@lru_cache(maxsize=None)
def _expand_word(word: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Associative expansion of the standard bracketing of a Lyndon word.

    Returned dicts are cached and shared: treat them as read-only.
    """
    if len(word) == 1:
        return {word: 1}
    left, right = standard_factorization(word)
    a = _expand_word(left)
    b = _expand_word(right)
    out: dict[tuple[int, ...], int] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            key = ma + mb
            out[key] = out.get(key, 0) + ca * cb
            key = mb + ma
            out[key] = out.get(key, 0) - ca * cb
    return {k: v for k, v in out.items() if v}


def _lyndon_rewrite(terms: dict) -> dict:
    """Back-substitute a Lie combination into Lyndon coordinates.

    Repeatedly strips the lexicographically least monomial; it must be
    Lyndon (triangularity) or the input was not in the Lie span.
    """
    rem = {mono: c for mono, c in terms.items() if c}
    coords: dict[tuple[int, ...], object] = {}
    while rem:
        mono = min(rem)
        if not _is_lyndon(mono):
            raise NotLieElement(f"monomial {mono} is not a Lyndon word; "
                                "input is outside the Lie span")
        c = rem[mono]
        coords[mono] = c
        for m2, c2 in _expand_word(mono).items():
            value = rem.get(m2, 0) - c * c2
            if value:
                rem[m2] = value
            else:
                rem.pop(m2, None)
    return coords


def _dynkin_expansion(mono: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Left-to-right bracketing of a single monomial, expanded."""
    out = {mono[:1]: 1}
    for z in mono[1:]:
        nxt: dict[tuple[int, ...], int] = {}
        suffix = (z,)
        for m, c in out.items():
            key = m + suffix
            nxt[key] = nxt.get(key, 0) + c
            key = suffix + m
            nxt[key] = nxt.get(key, 0) - c
        out = nxt
    return out


def _check_dynkin(terms: dict):
    """Per-length Dynkin test: D(p_k) must equal k * p_k exactly."""
    by_length: dict[int, dict] = {}
    for mono, c in terms.items():
        by_length.setdefault(len(mono), {})[mono] = c
    for length, component in by_length.items():
        if length == 0:
            raise NotLieElement("constant terms are never Lie elements")
        if length == 1:
            continue
        image: dict[tuple[int, ...], object] = {}
        for mono, c in component.items():
            for m2, c2 in _dynkin_expansion(mono).items():
                value = image.get(m2, 0) + c * c2
                if value:
                    image[m2] = value
                else:
                    image.pop(m2, None)
        expected = {mono: length * c for mono, c in component.items()}
        if image != expected:
            raise NotLieElement(
                f"bracketing test fails on the length-{length} part")


# -- Lie elements ---------------------------------------------------------


@dataclass(frozen=True)
class LieElement:
    """A homogeneous element, as integer coordinates over Lyndon words."""

    scheme: WeightScheme
    degree: int
    coords: dict

    def __post_init__(self):
        clean = {}
        for word, c in self.coords.items():
            word = tuple(word)
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coordinate expected, got {c!r}")
            if not c:
                continue
            if self.scheme.monomial_weight(word) != self.degree:
                raise ValueError(f"basis word {word} is not homogeneous of "
                                 f"degree {self.degree}")
            if not _is_lyndon(word):
                raise ValueError(f"{word} is not a Lyndon word")
            clean[word] = c
        object.__setattr__(self, "coords", clean)

    @classmethod
    def zero(cls, scheme: WeightScheme, degree: int) -> "LieElement":
        return cls(scheme, degree, {})

    def is_zero(self) -> bool:
        return not self.coords

    def content(self) -> int:
        """gcd of the coordinates; 0 for the zero element."""
        g = 0
        for c in self.coords.values():
            g = gcd(g, abs(c))
        return g

    def scale(self, scalar: int) -> "LieElement":
        return LieElement(self.scheme, self.degree,
                          {w: c * scalar for w, c in self.coords.items()})

    def __neg__(self):
        return self.scale(-1)

    def _check_compatible(self, other: "LieElement"):
        if self.scheme != other.scheme:
            raise ValueError("scheme mismatch")
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.coords)
        for w, c in other.coords.items():
            out[w] = out.get(w, 0) + c
        return LieElement(self.scheme, self.degree, out)

    def __sub__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self + (-other)

    def with_scheme(self, scheme: WeightScheme) -> "LieElement":
        """Reinterpret over a larger scheme; letters and weights must agree."""
        return LieElement(scheme, self.degree, dict(self.coords))

    def expansion(self) -> dict:
        """Associative expansion: sum of coordinates times word expansions."""
        out: dict[tuple[int, ...], int] = {}
        for word, c in self.coords.items():
            for mono, c2 in _expand_word(word).items():
                value = out.get(mono, 0) + c * c2
                if value:
                    out[mono] = value
                else:
                    del out[mono]
        return out

    def to_series(self, cutoff: int | None = None) -> Series:
        cutoff = self.degree if cutoff is None else cutoff
        return Series(self.scheme, cutoff, self.expansion())

    def to_text(self) -> str:
        """Report form: ``1*L[x1 x2] - 3*L[x1 x1 x2]``, words sorted."""
        if not self.coords:
            return "0"
        pieces = []
        for word in sorted(self.coords):
            c = self.coords[word]
            spelled = " ".join(self.scheme.generator_name(z) for z in word)
            if not pieces:
                sign = "-" if c < 0 else ""
                pieces.append(f"{sign}{abs(c)}*L[{spelled}]")
            else:
                sign = " - " if c < 0 else " + "
                pieces.append(f"{sign}{abs(c)}*L[{spelled}]")
        return "".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LieElement(degree={self.degree}, {self.to_text()})"


def generator_element(scheme: WeightScheme, letter: int) -> LieElement:
    """The degree-w(letter) basis generator as a LieElement."""
    return LieElement(scheme, scheme.letter_weight(letter), {(letter,): 1})


def to_lyndon_coords(component: Series, scheme: WeightScheme) -> LieElement:
    """Recognize a homogeneous series component as a Lie element.

    Runs the rational bracketing test first, then rewrites into Lyndon
    coordinates and insists they are integers.  Raises NotLieElement or
    NotIntegralCoordinates accordingly.
    """
    if component.domain.kind == "Fp":
        raise ValueError("Lie recognition works over Z or Q coefficients")
    if component.is_zero():
        raise ValueError("the zero component has no defined degree")
    weights = {scheme.monomial_weight(mono) for mono, _ in component.terms()}
    if len(weights) != 1:
        raise ValueError(f"component is not homogeneous: weights {sorted(weights)}")
    degree = weights.pop()
    terms = dict(component.terms())
    _check_dynkin(terms)
    coords = _lyndon_rewrite(terms)
    out: dict[tuple[int, ...], int] = {}
    for word, c in coords.items():
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise NotIntegralCoordinates(
                    f"coordinate of {word} is the non-integer {c}")
            c = c.numerator
        out[word] = c
    return LieElement(scheme, degree, out)


def bracket(a: LieElement, b: LieElement) -> LieElement:
    """Lie bracket via associative commutator plus Lyndon rewriting."""
    if a.scheme != b.scheme:
        raise ValueError("scheme mismatch")
    ea = a.expansion()
    eb = b.expansion()
    comm: dict[tuple[int, ...], int] = {}
    for ma, ca in ea.items():
        for mb, cb in eb.items():
            key = ma + mb
            comm[key] = comm.get(key, 0) + ca * cb
            key = mb + ma
            comm[key] = comm.get(key, 0) - ca * cb
    coords = _lyndon_rewrite(comm)
    return LieElement(a.scheme, a.degree + b.degree, coords)


@lru_cache(maxsize=None)
def _ad_row(letter: int, word: tuple[int, ...]) -> dict:
    """Lyndon coordinates of [generator, basis word].  Read-only cache.

    Scheme independent: the rewrite only uses the letter ordering, so
    one table serves every weighting of the same alphabet.
    """
    exp = _expand_word(word)
    prefix = (letter,)
    comm: dict[tuple[int, ...], int] = {}
    for mono, c in exp.items():
        key = prefix + mono
        comm[key] = comm.get(key, 0) + c
        key = mono + prefix
        comm[key] = comm.get(key, 0) - c
    return _lyndon_rewrite(comm)


def ad_generator(letter: int, elem: LieElement) -> LieElement:
    """[generator, elem] through the cached structure-constant rows."""
    out: dict[tuple[int, ...], int] = {}
    for word, c in elem.coords.items():
        for w2, c2 in _ad_row(letter, word).items():
            value = out.get(w2, 0) + c * c2
            if value:
                out[w2] = value
            else:
                del out[w2]
    degree = elem.degree + elem.scheme.letter_weight(letter)
    return LieElement(elem.scheme, degree, out)


def leading_lie_form(word: Word, scheme: WeightScheme, cutoff: int) -> tuple[int, LieElement]:
    """Degree and Lie form of the lowest-weight part of (embedding - 1).

    The identity word has no leading form; a nontrivial word whose
    degree exceeds the cutoff raises DegreeAboveCutoff, since the
    window certifies nothing there.
    """
    if not word:
        raise ValueError("the identity word has no leading form")
    f = magnus_embed(word, scheme, cutoff)
    delta = f - Series.one(scheme, cutoff)
    v = delta.valuation()
    if v is INFINITY:
        raise DegreeAboveCutoff(
            f"degree of the word exceeds the cutoff {cutoff}")
    component = delta.homogeneous_component(v)
    return v, to_lyndon_coords(component, scheme)
