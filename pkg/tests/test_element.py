"""Normal-form arithmetic in the RTT algebra: straightening, the
supercommutator, parity rules, and serialization."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superyangian import AlgebraContext


def gen_triples(size, max_r):
    return st.tuples(st.integers(1, size), st.integers(1, size),
                     st.integers(1, max_r))


@pytest.fixture(scope="module")
def ctx():
    return AlgebraContext(2, 1, 3, 4)


def test_truncation_order_validated():
    with pytest.raises(ValueError):
        AlgebraContext(1, 1, 3, 0)


def test_superscript_zero_rejected(ctx):
    with pytest.raises(ValueError):
        ctx.generator(1, 1, 0)


def test_t_entry_zeroth_coefficient_is_delta(ctx):
    assert ctx.t_entry(1, 1, 0) == ctx.one()
    assert ctx.t_entry(1, 2, 0) == ctx.zero()
    assert ctx.t_entry(2, 2, 1) == ctx.generator(2, 2, 1)


def test_products_are_in_normal_form(ctx):
    # every word in a product expansion is sorted in the PBW order
    el = ctx.generator(3, 1, 2) * ctx.generator(1, 2, 1) * ctx.generator(2, 2, 1)
    assert el
    for word in el.terms:
        assert list(word) == sorted(word)


def test_bracket_oracle_first_superscripts(ctx):
    # hand expansion of the defining relation at r = s = 1:
    # [t_{i,j}^{(1)}, t_{k,l}^{(1)}] =
    #   sign * (delta_{kj} t_{i,l}^{(1)} - delta_{il} t_{k,j}^{(1)})
    assert (ctx.generator(1, 1, 1).supercommutator(ctx.generator(1, 2, 1))
            == ctx.generator(1, 2, 1))
    assert (ctx.generator(1, 2, 1).supercommutator(ctx.generator(2, 1, 1))
            == ctx.generator(1, 1, 1) - ctx.generator(2, 2, 1))
    # odd-odd pair: the parity sign flips the delta terms
    a = ctx.generator(2, 3, 1)
    b = ctx.generator(3, 2, 1)
    assert a.supercommutator(b) == ctx.generator(3, 3, 1) - ctx.generator(2, 2, 1)


@settings(max_examples=60, deadline=None)
@given(gen_triples(3, 3), gen_triples(3, 3))
def test_supercommutator_super_skew(t1, t2):
    ctx = AlgebraContext(2, 1, 3, 4)
    a = ctx.generator(*t1)
    b = ctx.generator(*t2)
    sign = -1 if (a.parity() and b.parity()) else 1
    assert a.supercommutator(b) + b.supercommutator(a).scale(sign) == ctx.zero()


def test_odd_square_rule(ctx):
    # for odd x and p > 2: x * x = [x, x] / 2
    x = ctx.generator(1, 3, 2)
    assert (x * x).scale(2) == x.supercommutator(x)


def test_even_same_entry_coefficients_commute(ctx):
    a = ctx.generator(1, 2, 1)
    b = ctx.generator(1, 2, 3)
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(gen_triples(3, 2), gen_triples(3, 2), gen_triples(3, 2))
def test_associativity(t1, t2, t3):
    ctx = AlgebraContext(2, 1, 3, 4)
    a, b, c = (ctx.generator(*t) for t in (t1, t2, t3))
    assert (a * b) * c == a * (b * c)


def test_loop_degree(ctx):
    assert ctx.generator(1, 2, 3).loop_degree() == 2
    assert ctx.generator(1, 2, 1).loop_degree() == 0
    el = ctx.generator(1, 2, 3) * ctx.generator(2, 1, 2)
    assert el.loop_degree() == 3
    assert ctx.zero().loop_degree() is None


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(gen_triples(3, 4), st.integers(1, 2)),
                min_size=1, max_size=4))
def test_serialize_roundtrip(parts):
    ctx = AlgebraContext(2, 1, 3, 4)
    el = ctx.zero()
    for triple, coeff in parts:
        el = el + ctx.generator(*triple).scale(coeff)
    assert ctx.deserialize(el.serialize()) == el


def test_serialize_run_length(ctx):
    el = ctx.generator(1, 1, 1) * ctx.generator(1, 1, 1)
    data = el.serialize()
    # a squared even generator serializes as a single run of length 2
    assert data == [[[[1, 1, 1, 2]], 1]]


def test_p2_signs_degenerate():
    # at p = 2 the parity sign in the defining relation is invisible, so
    # the parity-reversing relabelling i <-> 3 - i on a (1,1) shape is an
    # algebra automorphism (it is not one for p > 2)
    from superyangian.maps import check_homomorphism, permutation
    ctx = AlgebraContext(1, 1, 2, 3)
    ok, witnesses = check_homomorphism(permutation(ctx, [2, 1]), 3)
    assert ok, witnesses
