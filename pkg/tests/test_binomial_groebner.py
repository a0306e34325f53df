"""Specialized Buchberger completion: worked bases, completeness, confluence."""
import random

import pytest

from reeshk.binomial_groebner import (
    BinomialRelation,
    GroebnerBasisBM,
    buchberger,
    ideals_equal,
    quotient_colength,
)
from reeshk.monomial_algebra import Monomial, MonomialIdeal


def exps(gb):
    return sorted(m.exponents for m in gb.monomials)


REL5 = BinomialRelation(3, 0, 1, 5)


class TestRelation:
    def test_validation(self):
        with pytest.raises(ValueError):
            BinomialRelation(3, 0, 1, 1)  # exponent too small
        with pytest.raises(ValueError):
            BinomialRelation(3, 1, 0, 5)  # indices out of order
        with pytest.raises(ValueError):
            BinomialRelation(2, 0, 2, 5)  # index past ambient

    def test_lead(self):
        assert REL5.lead_exponents() == (5, 0, 0)


class TestBuchberger:
    def test_q8_chain(self):
        gb = buchberger(REL5, [(8, 0, 0), (0, 8, 0), (0, 0, 8)])
        assert exps(gb) == [(0, 0, 8), (0, 8, 0), (3, 5, 0), (8, 0, 0)]
        assert gb.initial_ideal().exponent_vectors() == [
            (0, 0, 8),
            (0, 8, 0),
            (3, 5, 0),
            (5, 0, 0),
        ]

    def test_binomial_lead_already_absorbed(self):
        rel = BinomialRelation(2, 0, 1, 2)
        gb = buchberger(rel, [(2, 0), (0, 2)])
        assert exps(gb) == [(0, 2), (2, 0)]
        assert gb.initial_ideal().exponent_vectors() == [(0, 2), (2, 0)]

    def test_small_q_extrapolation(self):
        # q < a is outside the regime of the worked chain; the same
        # completion loop covers it
        gb = buchberger(REL5, [(4, 0, 0), (0, 4, 0), (0, 0, 4)])
        assert exps(gb) == [(0, 0, 4), (0, 4, 0), (4, 0, 0)]
        assert gb.initial_ideal().exponent_vectors() == [(0, 0, 4), (0, 4, 0), (4, 0, 0)]

    def test_empty_generators_rejected(self):
        with pytest.raises(ValueError):
            buchberger(REL5, [])

    def test_accepts_monomial_objects(self):
        gb = buchberger(REL5, [Monomial((8, 0, 0)), Monomial((0, 8, 0)), Monomial((0, 0, 8))])
        assert (3, 5, 0) in exps(gb)

    def test_power_generator_chain_shape(self):
        # for gens (X^q, Y^q, Z^q) with q > a = 5 the initial ideal is
        # (X^5, Y^q, Z^q) plus the one chain element X^(q-5i) Y^(5i)
        # with 0 < q-5i < 5
        for q in (8, 16, 32):
            expected = [(5, 0, 0), (0, q, 0), (0, 0, q)]
            expected += [
                (q - 5 * i, 5 * i, 0)
                for i in range(1, q // 5 + 1)
                if 0 < q - 5 * i < 5
            ]
            gb = buchberger(REL5, [(q, 0, 0), (0, q, 0), (0, 0, q)])
            assert gb.initial_ideal() == MonomialIdeal.from_exponents(3, expected)


class TestCompleteness:
    @pytest.mark.parametrize(
        "rel,gens",
        [
            (REL5, [(8, 0, 0), (0, 8, 0), (0, 0, 8)]),
            (REL5, [(4, 0, 0), (0, 4, 0), (0, 0, 4)]),
            (REL5, [(32, 0, 0), (0, 32, 0), (0, 0, 32)]),
            (BinomialRelation(2, 0, 1, 5), [(9, 2), (2, 9), (0, 14), (14, 0)]),
            (BinomialRelation(2, 0, 1, 3), [(7, 0), (0, 7)]),
        ],
    )
    def test_every_spair_reduces_to_zero(self, rel, gens):
        gb = buchberger(rel, gens)
        assert gb.complete
        assert gb.spairs_reduce_to_zero()

    def test_random_generators(self):
        rng = random.Random(7)
        for _ in range(20):
            dim = rng.choice([2, 3])
            a = rng.randint(2, 6)
            rel = BinomialRelation(dim, 0, 1, a)
            gens = [
                tuple(rng.randint(0, 9) for _ in range(dim))
                for _ in range(rng.randint(1, 5))
            ]
            if all(all(e == 0 for e in g) for g in gens):
                continue
            gb = buchberger(rel, gens)
            assert gb.spairs_reduce_to_zero()

    def test_incomplete_basis_rejected(self):
        stub = GroebnerBasisBM(REL5, (Monomial((8, 0, 0)),), complete=False)
        with pytest.raises(ValueError):
            stub.initial_ideal()

    def test_characteristic_independence(self):
        # every reduction step rewrites one monomial into one monomial;
        # no coefficient field enters, so the basis is a function of
        # (a, gens) alone and reruns are bit-identical
        gens = [(16, 0, 0), (0, 16, 0), (0, 0, 16)]
        assert buchberger(REL5, gens) == buchberger(REL5, gens)


class TestNormalForm:
    def test_confluence_both_strategies(self):
        rng = random.Random(11)
        bases = [
            buchberger(REL5, [(16, 0, 0), (0, 16, 0), (0, 0, 16)]),
            buchberger(BinomialRelation(2, 0, 1, 5), [(9, 2), (2, 9)]),
            buchberger(BinomialRelation(2, 0, 1, 3), [(10, 0), (0, 10)]),
        ]
        for gb in bases:
            dim = gb.relation.ambient_dim
            for _ in range(100):
                mono = tuple(rng.randint(0, 20) for _ in range(dim))
                assert gb.normal_form(mono, "monomial-first") == gb.normal_form(
                    mono, "binomial-first"
                )

    def test_unknown_strategy(self):
        gb = buchberger(REL5, [(8, 0, 0), (0, 8, 0), (0, 0, 8)])
        with pytest.raises(ValueError):
            gb.normal_form((1, 1, 1), "random")

    def test_membership(self):
        gb = buchberger(REL5, [(8, 0, 0), (0, 8, 0), (0, 0, 8)])
        assert gb.contains_monomial((3, 5, 0))
        assert gb.contains_monomial((8, 2, 1))
        assert gb.contains_monomial((6, 3, 0))  # X^6 Y^3 -> X Y^8 -> 0
        # X^5 is only the lead of the binomial, not a member of the ideal
        assert not gb.contains_monomial((5, 0, 0))
        assert not gb.contains_monomial((4, 4, 4))


class TestQuotientColength:
    def test_worked_values(self):
        assert quotient_colength(REL5, [(8, 0, 0), (0, 8, 0), (0, 0, 8)]) == 272
        assert quotient_colength(REL5, [(4, 0, 0), (0, 4, 0), (0, 0, 4)]) == 64
        rel = BinomialRelation(2, 0, 1, 2)
        assert quotient_colength(rel, [(1, 0), (0, 1)]) == 1

    def test_power_series_parity(self):
        # 5q^2 - 4q when q is 1 or 4 mod 5; 5q^2 - 6q when q is 2 or 3
        for q in (4, 8, 16, 32, 64):
            value = quotient_colength(REL5, [(q, 0, 0), (0, q, 0), (0, 0, q)])
            if q % 5 in (1, 4):
                assert value == 5 * q * q - 4 * q
            else:
                assert value == 5 * q * q - 6 * q

    def test_infinite_quotient_propagates(self):
        from reeshk.monomial_algebra import InfiniteColength

        with pytest.raises(InfiniteColength):
            quotient_colength(REL5, [(8, 0, 0), (0, 8, 0)])  # no pure power of Z


class TestIdealsEqual:
    def test_tail_stabilization_example(self):
        # in k[[X,Y]]/(X^5-Y^5): m^[4] m^3 = m^7 but m^[4] m^2 != m^6
        rel = BinomialRelation(2, 0, 1, 5)
        m = MonomialIdeal.from_exponents(2, [(1, 0), (0, 1)])
        mq = m.frobenius(4)
        assert ideals_equal(rel, mq.product(m.power(3)).gens, m.power(7).gens)
        assert not ideals_equal(rel, mq.product(m.power(2)).gens, m.power(6).gens)

    def test_reflexive(self):
        rel = BinomialRelation(2, 0, 1, 3)
        assert ideals_equal(rel, [(4, 0), (0, 4)], [(4, 0), (0, 4)])

    def test_binomial_makes_unequal_monomial_ideals_equal(self):
        # modulo X^3 - Y^3, (X^3, Y^5) and (Y^3, Y^5) generate the same ideal
        rel = BinomialRelation(2, 0, 1, 3)
        assert ideals_equal(rel, [(3, 0), (0, 5)], [(0, 3)])
