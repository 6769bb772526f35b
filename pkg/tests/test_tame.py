import random
from fractions import Fraction as F

import pytest

from weylalg import (
    AutoWord,
    DomainError,
    PhiX,
    PhiY,
    Poly,
    Torus,
    Translate,
    WeylElement,
    Xi,
    affine_decompose,
    apply_auto,
    auto_images,
    commutator,
    invert_auto,
    random_tame,
    xi_apply,
)
from weylalg.weyl import H, ONE, X, Y
from helpers import random_weyl

Hp = Poly.gen()


def word(*gens):
    return AutoWord(tuple(gens))


class TestGenerators:
    def test_torus(self):
        assert apply_auto(word(Torus(F(2))), X) == X * 2
        assert apply_auto(word(Torus(F(2))), Y) == Y * F(1, 2)
        assert apply_auto(word(Torus(F(2))), H) == H

    def test_phi_x(self):
        assert apply_auto(word(PhiX(1, F(3))), Y) == Y + X * 3
        assert apply_auto(word(PhiX(5, F(-1))), X) == X

    def test_phi_y(self):
        assert apply_auto(word(PhiY(2, F(1, 2))), X) == X + WeylElement({-2: F(1, 2)})

    def test_translate(self):
        assert apply_auto(word(Translate(F(3), F(-1))), X) == X + 3
        assert apply_auto(word(Translate(F(3), F(-1))), Y) == Y - 1

    def test_xi_matches_xi_apply(self):
        rng = random.Random(71)
        for _ in range(50):
            a = random_weyl(rng)
            assert apply_auto(word(Xi()), a) == xi_apply(a)

    def test_validation(self):
        with pytest.raises(DomainError):
            PhiX(0, F(1))
        with pytest.raises(DomainError):
            Torus(F(0))

    def test_composite_example(self):
        w = word(PhiX(2, F(1)), Torus(F(2)))
        img_h = apply_auto(w, H)
        # tau(H) = tau(Y) tau(X) and the relation survives
        assert img_h == apply_auto(w, Y) * apply_auto(w, X)
        assert commutator(apply_auto(w, Y), apply_auto(w, X)) == ONE


class TestWordAlgebra:
    def test_left_to_right_application(self):
        w = word(PhiX(1, F(1)), Torus(F(2)))
        # first Y -> Y + X, then the torus scales each letter
        assert apply_auto(w, Y) == Y * F(1, 2) + X * 2

    def test_relation_preserved_random(self):
        for seed in range(40):
            w = random_tame(seed, word_len=5, max_n=3, coeff_height=4)
            p, q = apply_auto(w, Y), apply_auto(w, X)
            assert commutator(p, q) == ONE

    def test_homomorphism_random(self):
        rng = random.Random(72)
        for seed in range(25):
            w = random_tame(seed, word_len=3, max_n=2, coeff_height=3)
            a = random_weyl(rng, 2, 2, 4, 2)
            b = random_weyl(rng, 2, 2, 4, 2)
            assert apply_auto(w, a * b) == apply_auto(w, a) * apply_auto(w, b)
            assert apply_auto(w, a + b) == apply_auto(w, a) + apply_auto(w, b)


class TestInvert:
    def test_single_generator(self):
        assert invert_auto(word(PhiX(3, F(2)))) == word(PhiX(3, F(-2)))

    def test_empty(self):
        assert invert_auto(word()) == word()

    def test_reverse_and_invert(self):
        w = word(Torus(F(2)), PhiY(1, F(1)))
        assert invert_auto(w) == word(PhiY(1, F(-1)), Torus(F(1, 2)))

    def test_xi_inverse_expansion(self):
        assert invert_auto(word(Xi())) == word(Torus(F(-1)), Xi())

    def test_two_sided_inverse_random(self):
        rng = random.Random(73)
        for seed in range(30):
            w = random_tame(seed, word_len=4, max_n=3, coeff_height=4)
            iw = invert_auto(w)
            a = random_weyl(rng, 2, 2, 4, 2)
            assert apply_auto(iw, apply_auto(w, a)) == a
            assert apply_auto(w, apply_auto(iw, a)) == a


class TestRandomTame:
    def test_deterministic(self):
        limits = dict(word_len=6, max_n=4, coeff_height=7)
        assert random_tame(123, **limits) == random_tame(123, **limits)
        assert random_tame(123, **limits) != random_tame(124, **limits)

    def test_bounds(self):
        for seed in range(60):
            w = random_tame(seed, word_len=5, max_n=3, coeff_height=4)
            assert 1 <= len(w) <= 5
            for gen in w.gens:
                if isinstance(gen, (PhiX, PhiY)):
                    assert 1 <= gen.n <= 3
                    assert abs(gen.lam.numerator) <= 4 and gen.lam.denominator <= 4
                elif isinstance(gen, Torus):
                    assert gen.mu != 0

    def test_rejects_bad_limits(self):
        with pytest.raises(DomainError):
            random_tame(1, word_len=0)


class TestAffineDecompose:
    def test_identity(self):
        assert affine_decompose(1, 0, 0, 1, 0, 0) == word()

    def test_pure_translation(self):
        assert affine_decompose(1, 0, 0, 1, 5, 7) == word(Translate(F(7), F(5)))

    def test_rotation(self):
        w = affine_decompose(0, 1, -1, 0, 0, 0)
        assert apply_auto(w, Y) == X
        assert apply_auto(w, X) == -Y

    def test_rejects_bad_determinant(self):
        with pytest.raises(DomainError):
            affine_decompose(1, 0, 0, 2, 0, 0)

    def test_random_sl2_with_translations(self):
        rng = random.Random(74)
        count = 0
        while count < 60:
            a, b, c = (F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3))
            if a == 0:
                continue
            d = (1 + b * c) / a
            lam = F(rng.randint(-4, 4))
            mu = F(rng.randint(-4, 4), rng.randint(1, 2))
            w = affine_decompose(a, b, c, d, lam, mu)
            assert apply_auto(w, Y) == Y * a + X * b + lam
            assert apply_auto(w, X) == X * d + Y * c + mu
            count += 1

    def test_zero_pivot_branch(self):
        for b in (F(1), F(-2), F(1, 3)):
            c = -1 / b
            w = affine_decompose(F(0), b, c, F(0), F(2), F(-1))
            assert apply_auto(w, Y) == X * b + 2
            assert apply_auto(w, X) == Y * c - 1


class TestImages:
    def test_auto_images(self):
        w = word(PhiX(2, F(1)))
        ix, iy = auto_images(w)
        assert ix == X
        assert iy == Y + WeylElement({2: 1})
