import random

import pytest

from cubeforge import (
    MultiPoly,
    RationalGF,
    divides,
    find_form,
    general_quadform,
    implicitize,
    taylor_coefficients,
    twist_no_solution,
)
from cubeforge.errors import NoForm, NoTargetedForm, SingularSubstitution
from cubeforge.parsing import parse_poly


def P(text):
    return parse_poly(text, ("m", "n"))


def XYZ(text):
    return parse_poly(text, ("x", "y", "z"))


def homog(rng, deg):
    return MultiPoly(
        ("m", "n"), {(deg - i, i): rng.randint(-3, 3) for i in range(deg + 1)}
    )


PAPER_MATRIX = [[6, 7, -9], [6, -5, 4], [-8, -3, 3]]


class TestImplicitize:
    def test_pythagorean(self):
        s = implicitize(P("m^2 - n^2"), P("2*m*n"), P("m^2 + n^2"))
        assert divides(XYZ("x^2 + y^2 - z^2"), s)
        assert s.substitute({"x": P("m^2 - n^2"), "y": P("2*m*n"), "z": P("m^2 + n^2")}).is_zero

    def test_skewed_quadratic(self):
        s = implicitize(P("2*m^2 - 3*n^2"), P("2*m*n"), P("m^2 + n^2"))
        assert divides(XYZ("4*x^2 + 4*x*z + 25*y^2 - 24*z^2"), s)

    def test_cubic_parametrization(self):
        s = implicitize(P("m^3 - n^3"), P("m^2*n + m*n^2"), P("m^3 + n^3"))
        assert divides(XYZ("3*x^2*y + x^2*z + 4*y^3 - 3*y*z^2 - z^3"), s)

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            implicitize(P("5"), P("m"), P("n"))

    def test_random_substitution_vanishes(self):
        from cubeforge.errors import EliminationCollapse

        rng = random.Random(83)
        done = 0
        while done < 50:
            ps = [homog(rng, rng.choice([2, 2, 2, 3])) for _ in range(3)]
            if any(p.is_zero or p.is_constant() for p in ps):
                continue
            try:
                s = implicitize(*ps)
            except EliminationCollapse:
                continue
            assert s.substitute({"x": ps[0], "y": ps[1], "z": ps[2]}).is_zero
            done += 1


class TestTwist:
    def test_paper_coefficients(self):
        out = twist_no_solution(XYZ("x^3 + y^3 + z^3"), PAPER_MATRIX)
        assert out == XYZ(
            "-80*x^3 - 360*x^2*y + 36*x^2*z + 1116*x*y^2 - 2556*x*y*z"
            " + 1530*x*z^2 + 191*y^3 - 942*y^2*z + 1380*y*z^2 - 638*z^3"
        )

    def test_identity_matrix(self):
        f = XYZ("x^3 - 2*y^3 + 7*z^3")
        assert twist_no_solution(f, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == f

    def test_singular_rejected(self):
        with pytest.raises(SingularSubstitution):
            twist_no_solution(XYZ("x^3 + y^3 + z^3"), [[1, 1, 1], [1, 1, 1], [0, 0, 1]])

    def test_adjugate_inversion(self):
        # G = F o M, so G(adj(M) p) = F(det(M) p) = det^3 F(p) for cubic F
        rng = random.Random(89)
        f = XYZ("x^3 + y^3 + z^3")
        m = PAPER_MATRIX
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        adj = [
            [
                m[1][1] * m[2][2] - m[1][2] * m[2][1],
                m[0][2] * m[2][1] - m[0][1] * m[2][2],
                m[0][1] * m[1][2] - m[0][2] * m[1][1],
            ],
            [
                m[1][2] * m[2][0] - m[1][0] * m[2][2],
                m[0][0] * m[2][2] - m[0][2] * m[2][0],
                m[0][2] * m[1][0] - m[0][0] * m[1][2],
            ],
            [
                m[1][0] * m[2][1] - m[1][1] * m[2][0],
                m[0][1] * m[2][0] - m[0][0] * m[2][1],
                m[0][0] * m[1][1] - m[0][1] * m[1][0],
            ],
        ]
        g = twist_no_solution(f, m)
        for _ in range(10):
            p = [rng.randint(-9, 9) for _ in range(3)]
            image = [sum(adj[i][j] * p[j] for j in range(3)) for i in range(3)]
            lhs = g.evaluate({"x": image[0], "y": image[1], "z": image[2]})
            rhs = det**3 * f.evaluate({"x": p[0], "y": p[1], "z": p[2]})
            assert lhs == rhs


class TestFindForm:
    def test_constant_pair(self):
        r = find_form(
            [RationalGF((1,), (1, -3, 1)), RationalGF((0, 1), (1, -3, 1))],
            2,
            "constant",
        )
        assert r.coefficients == {(2, 0): 1, (1, 1): -3, (0, 2): 1}
        assert r.constant == 1
        assert not r.homogeneous_vanishing
        assert r.certificate.certified

    def test_alternating_pair(self):
        r = find_form(
            [RationalGF((1,), (1, -9, -1)), RationalGF((0, 1), (1, -9, -1))],
            2,
            "alternating",
        )
        # proportional to -X^2 + 9XY + Y^2 with C = -1
        coeffs = (
            r.coefficients.get((2, 0), 0),
            r.coefficients.get((1, 1), 0),
            r.coefficients.get((0, 2), 0),
        )
        reference = (-1, 9, 1)
        scale = r.constant / -1
        assert all(c == scale * ref for c, ref in zip(coeffs, reference))

    def test_identical_sequences_not_targetable(self):
        g = RationalGF((1,), (1, -3, 1))
        with pytest.raises(NoTargetedForm) as info:
            find_form([g, g], 2, "constant")
        assert {(2, 0): 1, (1, 1): -1} in info.value.vanishing

    def test_vanishing_target_none(self):
        g = RationalGF((1,), (1, -3, 1))
        r = find_form([g, g], 2, "none")
        assert r.homogeneous_vanishing and r.constant == 0
        assert r.certificate.certified

    def test_no_form_for_unrelated_sequences(self):
        with pytest.raises(NoForm):
            find_form(
                [RationalGF((1,), (1, -2)), RationalGF((1,), (1, -1, -1, -1, -1))],
                2,
                "constant",
            )

    def test_agreement_with_constructor(self):
        rng = random.Random(97)
        for _ in range(20):
            while True:
                c0, c1, d0, d1 = (rng.randint(-5, 5) for _ in range(4))
                k = rng.choice([-5, -4, -3, 3, 4, 5])
                if c0 * d1 - c1 * d0 != 0:
                    break
            form, const = general_quadform(c0, c1, d0, d1, k)
            found = find_form(
                [RationalGF((c0, c1), (1, -k, 1)), RationalGF((d0, d1), (1, -k, 1))],
                2,
                "constant",
            )
            v1 = (form.qa, form.qb, form.qc, const)
            v2 = (
                found.coefficients.get((2, 0), 0),
                found.coefficients.get((1, 1), 0),
                found.coefficients.get((0, 2), 0),
                found.constant,
            )
            assert all(
                v1[i] * v2[j] == v1[j] * v2[i] for i in range(4) for j in range(4)
            )

    def test_degree_three_family(self):
        rng = random.Random(101)
        done = 0
        while done < 5:
            k1, k2 = rng.randint(-4, 4), rng.randint(-4, 4)
            den = (1, -k1, -k2, -1)
            gfs = [
                RationalGF(tuple(rng.randint(-3, 3) for _ in range(3)), den)
                for _ in range(3)
            ]
            if any(not g.num for g in gfs):
                continue
            r = find_form(gfs, 3, "constant")
            assert r.certificate.certified and r.coefficients
            seqs = [taylor_coefficients(g, 31) for g in gfs]
            poly = r.as_poly(("X1", "X2", "X3"))
            for n in range(31):
                value = poly.evaluate(
                    {"X1": seqs[0][n], "X2": seqs[1][n], "X3": seqs[2][n]}
                )
                assert value == r.constant
            done += 1

    def test_serialization_shape(self):
        r = find_form(
            [RationalGF((1,), (1, -3, 1)), RationalGF((0, 1), (1, -3, 1))],
            2,
            "constant",
        )
        data = r.to_json()
        assert data == {
            "degree": 2,
            "coeffs": [[[2, 0], 1], [[1, 1], -3], [[0, 2], 1]],
            "C": 1,
            "target": "constant",
        }
