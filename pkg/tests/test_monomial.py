import itertools

import pytest
from hypothesis import given, strategies as st

from seqcm.errors import PreconditionError, RingMismatchError
from seqcm.monomial import (
    MonomialIdeal,
    PolyRing,
    ideal_colon,
    ideal_intersect,
    ideal_sum,
    minimalize,
    mul,
    polarize,
    radical,
)
from strategies import ideal_tuples, ideals, rings

R = PolyRing(("x", "y", "z"))
x, y, z = (R.var(j) for j in range(3))


def I(*gens, ring=R):
    return MonomialIdeal(ring, gens)


def sq(m):
    return tuple(2 * e for e in m)


def box(n, degree):
    """All monomials of total degree <= degree in n variables."""
    return [m for m in itertools.product(range(degree + 1), repeat=n) if sum(m) <= degree]


def brute_members(ideal, degree=3):
    return {m for m in box(ideal.ring.num_vars, degree) if ideal.contains(m)}


class TestMinimalize:
    def test_drops_multiples(self):
        assert minimalize(R, [x, sq(x)]).gens == (x,)

    def test_empty_is_zero(self):
        assert minimalize(R, []).is_zero

    def test_keeps_incomparable(self):
        xy, xz = mul(x, y), mul(x, z)
        assert set(minimalize(R, [xy, xz, mul(xy, z)]).gens) == {xy, xz}

    def test_wrong_length_rejected(self):
        with pytest.raises(RingMismatchError):
            minimalize(R, [(1, 0)])

    @given(ideals(max_vars=4), st.randoms())
    def test_idempotent_and_order_free(self, ideal, rnd):
        gens = list(ideal.gens)
        rnd.shuffle(gens)
        again = minimalize(ideal.ring, gens)
        assert again == ideal and again.gens == ideal.gens


class TestSumIntersect:
    def test_examples(self):
        assert I(x) + I(y) == I(x, y)
        J = I(mul(x, z), mul(y, z))
        assert J + MonomialIdeal.zero(R) == J
        assert set((J + I(sq(z))).gens) == {mul(x, z), mul(y, z), sq(z)}
        assert I(x) & I(y) == I(mul(x, y))
        assert I(x, y) & I(z) == J
        assert J & MonomialIdeal.unit(R) == J

    def test_intersection_matches_membership_degree3(self):
        assert brute_members(I(x, y) & I(z)) == brute_members(I(x, y)) & brute_members(I(z))

    def test_ring_mismatch(self):
        other = PolyRing(("a", "b", "c"))
        with pytest.raises(RingMismatchError):
            ideal_sum(I(x), MonomialIdeal(other, [(1, 0, 0)]))

    @given(ideal_tuples(3))
    def test_lattice_laws(self, triple):
        a, b, c = triple
        assert a + b == b + a and a & b == b & a
        assert (a + b) + c == a + (b + c)
        assert (a & b) & c == a & (b & c)
        assert a & (a + b) == a

    @given(ideal_tuples(2, max_vars=4, max_exp=2))
    def test_membership_oracle(self, pair):
        a, b = pair
        meet = ideal_intersect(a, b)
        for m in box(a.ring.num_vars, 4):
            assert meet.contains(m) == (a.contains(m) and b.contains(m))
            assert (a + b).contains(m) == (a.contains(m) or b.contains(m))


class TestColon:
    def test_examples(self):
        J = I(mul(x, z), mul(y, z))
        assert ideal_colon(J, I(x, y)) == I(z)
        assert ideal_colon(J, MonomialIdeal.unit(R)) == J
        assert ideal_colon(I(sq(x)), I(x)) == I(x)

    def test_colon_by_zero_is_whole_ring(self):
        assert ideal_colon(I(x), MonomialIdeal.zero(R)).is_unit

    def test_colon_brute_force(self):
        J = I(mul(x, z), mul(y, z))
        found = {m for m in box(3, 3) if all(J.contains(mul(m, g)) for g in (x, y))}
        assert found == brute_members(I(z))

    @given(ideal_tuples(2))
    def test_colon_times_divisor_inside(self, pair):
        a, b = pair
        q = ideal_colon(a, b)
        assert all(a.contains(mul(f, g)) for f in q.gens for g in b.gens)
        assert a.issubset(q)


class TestRadical:
    def test_examples(self):
        assert radical(I(sq(x), mul(x, y))) == I(x)
        J = I(mul(x, z), mul(y, z))
        assert radical(J) == J
        assert radical(I((2, 3, 0))) == I(mul(x, y))

    @given(ideals(max_vars=4))
    def test_idempotent_and_squarefree(self, ideal):
        r = radical(ideal)
        assert r.is_squarefree and radical(r) == r
        assert ideal.issubset(r)

    @given(ideals(max_vars=3, max_exp=3))
    def test_radical_of_polarization_is_itself(self, ideal):
        if ideal.is_unit:
            return
        p, _ = polarize(ideal)
        assert radical(p) == p


class TestPolarize:
    def test_single_power(self):
        k = PolyRing(("x",))
        p, pol = polarize(MonomialIdeal(k, [(2,)]))
        assert pol.target.var_names == ("x_1", "x_2")
        assert p.gens == ((1, 1),) and pol.added == 1

    def test_two_variables(self):
        k = PolyRing(("x", "y"))
        p, pol = polarize(MonomialIdeal(k, [(2, 1), (0, 2)]))
        assert pol.target.var_names == ("x_1", "x_2", "y_1", "y_2")
        assert set(p.generator_strings()) == {"x_1*x_2*y_1", "y_1*y_2"}

    def test_squarefree_is_fixed(self):
        J = I(mul(x, z), mul(y, z))
        p, pol = polarize(J)
        assert p == J and pol.added == 0

    def test_unit_rejected(self):
        with pytest.raises(PreconditionError):
            polarize(MonomialIdeal.unit(R))

    @given(ideals(max_vars=3))
    def test_result_is_squarefree(self, ideal):
        if ideal.is_unit:
            return
        p, pol = polarize(ideal)
        assert p.is_squarefree
        assert pol.target.num_vars == ideal.ring.num_vars + pol.added


class TestRing:
    def test_rejects_duplicate_names(self):
        with pytest.raises(PreconditionError):
            PolyRing(("x", "x"))

    @given(rings())
    def test_printing(self, ring):
        assert str(ring).split(",") == list(ring.var_names)
        assert ring.format_monomial(ring.one()) == "1"
