"""Tame automorphisms as words in the standard generators.

Generators and their action on (X, Y):

    PhiX(n, lam)      (X, Y) -> (X, Y + lam X^n)        n >= 1
    PhiY(n, lam)      (X, Y) -> (X + lam Y^n, Y)        n >= 1
    Torus(mu)         (X, Y) -> (mu X, mu^-1 Y)         mu != 0
    Translate(c, d)   (X, Y) -> (X + c, Y + d)
    Xi                (X, Y) -> (Y, -X)

A word applies its generators left to right: the first entry acts first.
Applying a word to an element substitutes the images of X and Y and
re-normalizes, which preserves commutators because every generator's images
again satisfy the defining relation.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .polynomials import Poly, rat_from_str, rat_to_str
from .weyl import WeylElement, X, Y, commutator, xi_apply

__all__ = [
    "PhiX",
    "PhiY",
    "Torus",
    "Translate",
    "Xi",
    "AutoWord",
    "apply_auto",
    "invert_auto",
    "random_tame",
    "affine_decompose",
]


def _as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected a rational scalar, got {type(value).__name__}")


@dataclass(frozen=True)
class PhiX:
    n: int
    lam: Fraction

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("PhiX requires n >= 1")
        object.__setattr__(self, "lam", _as_rat(self.lam))

    def images(self):
        return X, Y + WeylElement({self.n: self.lam})

    def inverse_word(self):
        return (PhiX(self.n, -self.lam),)

    def to_json(self):
        return {"gen": "PhiX", "n": self.n, "lambda": rat_to_str(self.lam)}


@dataclass(frozen=True)
class PhiY:
    n: int
    lam: Fraction

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("PhiY requires n >= 1")
        object.__setattr__(self, "lam", _as_rat(self.lam))

    def images(self):
        return X + WeylElement({-self.n: self.lam}), Y

    def inverse_word(self):
        return (PhiY(self.n, -self.lam),)

    def to_json(self):
        return {"gen": "PhiY", "n": self.n, "lambda": rat_to_str(self.lam)}


@dataclass(frozen=True)
class Torus:
    mu: Fraction

    def __post_init__(self):
        mu = _as_rat(self.mu)
        if not mu:
            raise DomainError("Torus requires a nonzero scalar")
        object.__setattr__(self, "mu", mu)

    def images(self):
        return X * self.mu, Y * (1 / self.mu)

    def inverse_word(self):
        return (Torus(1 / self.mu),)

    def to_json(self):
        return {"gen": "Torus", "mu": rat_to_str(self.mu)}


@dataclass(frozen=True)
class Translate:
    c: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", _as_rat(self.c))
        object.__setattr__(self, "d", _as_rat(self.d))

    def images(self):
        return X + self.c, Y + self.d

    def inverse_word(self):
        return (Translate(-self.c, -self.d),)

    def to_json(self):
        return {"gen": "Translate", "c": rat_to_str(self.c), "d": rat_to_str(self.d)}


@dataclass(frozen=True)
class Xi:
    def images(self):
        return Y, -X

    def inverse_word(self):
        # Xi^4 = id and Xi^2 = Torus(-1), so Xi^-1 = Torus(-1) then Xi
        return (Torus(Fraction(-1)), Xi())

    def to_json(self):
        return {"gen": "Xi"}


_GEN_TYPES = {"PhiX": PhiX, "PhiY": PhiY, "Torus": Torus, "Translate": Translate, "Xi": Xi}


@dataclass(frozen=True)
class AutoWord:
    """A finite composition of generators, applied left to right."""

    gens: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))

    def __len__(self):
        return len(self.gens)

    def __add__(self, other):
        if isinstance(other, AutoWord):
            return AutoWord(self.gens + other.gens)
        return NotImplemented

    def to_json(self):
        return {"word": [g.to_json() for g in self.gens]}

    @staticmethod
    def from_json(obj) -> "AutoWord":
        gens = []
        for item in obj["word"]:
            kind = item["gen"]
            if kind == "PhiX" or kind == "PhiY":
                gens.append(_GEN_TYPES[kind](int(item["n"]), rat_from_str(item["lambda"])))
            elif kind == "Torus":
                gens.append(Torus(rat_from_str(item["mu"])))
            elif kind == "Translate":
                gens.append(Translate(rat_from_str(item["c"]), rat_from_str(item["d"])))
            elif kind == "Xi":
                gens.append(Xi())
            else:
                raise ValueError(f"unknown generator kind {kind!r}")
        return AutoWord(tuple(gens))

    def __str__(self):
        if not self.gens:
            return "identity"

        def signed(scalar, body=""):
            sign = "-" if scalar < 0 else "+"
            return f" {sign} {abs(scalar)}{body}"

        return " ; ".join(
            {
                "PhiX": lambda g: f"(X, Y{signed(g.lam, f'*X^{g.n}')})",
                "PhiY": lambda g: f"(X{signed(g.lam, f'*Y^{g.n}')}, Y)",
                "Torus": lambda g: f"({g.mu}*X, {1 / g.mu}*Y)",
                "Translate": lambda g: f"(X{signed(g.c)}, Y{signed(g.d)})",
                "Xi": lambda g: "(Y, -X)",
            }[type(g).__name__](g)
            for g in self.gens
        )


def _evaluate(a: WeylElement, image_x: WeylElement, image_y: WeylElement) -> WeylElement:
    """Substitute images for X and Y into the normal form of a."""
    h_image = image_y * image_x
    result = WeylElement()
    pow_cache: dict[int, WeylElement] = {}

    def vpow(i: int) -> WeylElement:
        if i not in pow_cache:
            base = image_x if i > 0 else image_y
            pow_cache[i] = base ** abs(i)
        return pow_cache[i]

    for i, f in a.components():
        # Horner evaluation of f at the image of H
        acc = WeylElement()
        last = None
        for e, c in reversed(f.terms):
            if last is None:
                acc = WeylElement({0: c})
            else:
                for _ in range(last - e):
                    acc = acc * h_image
                acc = acc + c
            last = e
        if last is not None and last > 0:
            for _ in range(last):
                acc = acc * h_image
        term = acc if i == 0 else acc * vpow(i)
        result = result + term
    return result


def _apply_gen(gen, a: WeylElement) -> WeylElement:
    if isinstance(gen, Torus):
        return WeylElement({i: f * gen.mu**i for i, f in a.components()})
    if isinstance(gen, Xi):
        return xi_apply(a)
    image_x, image_y = gen.images()
    return _evaluate(a, image_x, image_y)


def apply_auto(word: AutoWord, a: WeylElement) -> WeylElement:
    for gen in word.gens:
        a = _apply_gen(gen, a)
    return a


def auto_images(word: AutoWord):
    """(image of X, image of Y) under the whole word."""
    return apply_auto(word, X), apply_auto(word, Y)


def invert_auto(word: AutoWord) -> AutoWord:
    gens = []
    for gen in reversed(word.gens):
        gens.extend(gen.inverse_word())
    return AutoWord(tuple(gens))


def random_tame(seed: int, word_len: int = 4, max_n: int = 3, coeff_height: int = 5) -> AutoWord:
    """Deterministic pseudorandom word within the given limits."""
    if word_len < 1 or max_n < 1 or coeff_height < 1:
        raise DomainError("random_tame limits must be positive")
    rng = _random.Random(seed)

    def rat(nonzero=False):
        while True:
            value = Fraction(rng.randint(-coeff_height, coeff_height), rng.randint(1, coeff_height))
            if value or not nonzero:
                return value

    gens = []
    for _ in range(rng.randint(1, word_len)):
        kind = rng.choice(("PhiX", "PhiY", "Torus", "Translate", "Xi"))
        if kind == "PhiX":
            gens.append(PhiX(rng.randint(1, max_n), rat()))
        elif kind == "PhiY":
            gens.append(PhiY(rng.randint(1, max_n), rat()))
        elif kind == "Torus":
            gens.append(Torus(rat(nonzero=True)))
        elif kind == "Translate":
            gens.append(Translate(rat(), rat()))
        else:
            gens.append(Xi())
    return AutoWord(tuple(gens))


# ----------------------------------------------------------------------
# affine pairs
# ----------------------------------------------------------------------

def _linear_word(a, b, c, d) -> list:
    """Generators realizing X -> c Y + d X, Y -> a Y + b X (det ad - bc = 1),
    listed in application order."""
    if a * d - b * c != 1:
        raise DomainError("affine_decompose requires ad - bc = 1")
    if d:
        # matrix [[d, b], [c, a]] = lower(c/d) * diag(d) * upper(b/d),
        # composed right to left, so the word applies upper first
        word = []
        if b:
            word.append(PhiX(1, b / d))
        if d != 1:
            word.append(Torus(d))
        if c:
            word.append(PhiY(1, c / d))
        return word
    # d == 0 forces b c = -1; peel one Xi: M = (M * M(Xi)^-1) * M(Xi)
    inner = _linear_word(c, d, -a, -b)
    return [Xi()] + inner


def affine_decompose(a, b, c, d, lam, mu) -> AutoWord:
    """A word tau with tau(Y) = a Y + b X + lam and tau(X) = c Y + d X + mu."""
    a, b, c, d = _as_rat(a), _as_rat(b), _as_rat(c), _as_rat(d)
    lam, mu = _as_rat(lam), _as_rat(mu)
    gens = []
    if lam or mu:
        gens.append(Translate(mu, lam))
    gens.extend(_linear_word(a, b, c, d))
    word = AutoWord(tuple(gens))
    expect_y = WeylElement({-1: a, 1: b, 0: Poly.constant(lam)})
    expect_x = WeylElement({-1: c, 1: d, 0: Poly.constant(mu)})
    if apply_auto(word, Y) != expect_y or apply_auto(word, X) != expect_x:
        raise RuntimeError("affine decomposition failed verification; internal defect")
    return word
