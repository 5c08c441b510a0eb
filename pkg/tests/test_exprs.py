"""Grammar round-trips, error positions, and element addressing."""

import random

import pytest

from ringlab import exprs as E
from ringlab.errors import InvalidSubset, ParseError
from ringlab.exprs import (
    build_ideal,
    build_ring,
    build_subset,
    element_index,
    parse_element,
    parse_ideal_spec,
    parse_ring_expr,
    parse_subset_spec,
    print_ideal,
    print_ring,
    print_subset,
)


# --- random AST round-trips -------------------------------------------------

def _rand_elem(rng, depth=0):
    kind = rng.randrange(4) if depth < 2 else 0
    if kind == 0:
        return E.IntLit(rng.randrange(100))
    if kind == 1:
        return E.TupleLit((_rand_elem(rng, depth + 1),
                           _rand_elem(rng, depth + 1)))
    if kind == 2:
        k = rng.choice((1, 2))
        return E.MatrixLit(tuple(
            tuple(_rand_elem(rng, depth + 1) for _ in range(k))
            for _ in range(k)))
    return E.PolyLit(tuple(_rand_elem(rng, depth + 1)
                           for _ in range(rng.randrange(1, 4))))


def _rand_gen(rng):
    return E.GenSpec(tuple(_rand_elem(rng)
                           for _ in range(rng.randrange(1, 4))))


def _rand_ring(rng, depth=0):
    kind = rng.randrange(8) if depth < 3 else 0
    if kind == 0:
        return E.Zn(rng.randrange(2, 100))
    if kind == 1:
        return E.Prod(_rand_ring(rng, depth + 1), _rand_ring(rng, depth + 1))
    if kind == 2:
        return E.Mat(rng.randrange(1, 4), _rand_ring(rng, depth + 1))
    if kind == 3:
        return E.Quot(_rand_ring(rng, depth + 1), _rand_gen(rng))
    if kind == 4:
        return E.Idealize(_rand_ring(rng, depth + 1), rng.randrange(1, 10))
    if kind == 5:
        return E.Amalg(_rand_ring(rng, depth + 1),
                       _rand_ring(rng, depth + 1), _rand_gen(rng))
    if kind == 6:
        return E.Trunc(_rand_ring(rng, depth + 1), rng.randrange(1, 5))
    return E.IdealRing(_rand_ring(rng, depth + 1), _rand_gen(rng))


def test_ring_expr_round_trip_1000():
    rng = random.Random(0xC0FFEE)
    for _ in range(1000):
        node = _rand_ring(rng)
        assert parse_ring_expr(print_ring(node)) == node


def test_ideal_and_subset_spec_round_trip():
    rng = random.Random(7)
    for _ in range(300):
        spec = _rand_gen(rng)
        assert parse_ideal_spec(print_ideal(spec)) == spec
    for _ in range(300):
        spec = E.SubsetSpec(rng.choice(("mulclosed", "gen_s")),
                            _rand_gen(rng).elems)
        assert parse_subset_spec(print_subset(spec)) == spec


def test_product_prints_keep_associativity():
    left = parse_ring_expr("Z2 x Z3 x Z4")
    assert left == E.Prod(E.Prod(E.Zn(2), E.Zn(3)), E.Zn(4))
    right = E.Prod(E.Zn(2), E.Prod(E.Zn(3), E.Zn(4)))
    assert print_ring(right) == "Z2 x (Z3 x Z4)"
    assert parse_ring_expr(print_ring(right)) == right


# --- parse errors carry positions -------------------------------------------

@pytest.mark.parametrize("text,line,col", [
    ("Z", 1, 1),
    ("Z4 x", 1, 5),
    ("M(2 Z4)", 1, 5),
    ("quot(Z4, gen(2)", 1, 16),
    ("Z4 )", 1, 4),
    ("amalg(Z8, Z4, gen(2))", 1, 15),
])
def test_parse_error_positions(text, line, col):
    with pytest.raises(ParseError) as ei:
        parse_ring_expr(text)
    assert ei.value.line == line
    assert ei.value.col == col


def test_parse_error_expected_sets():
    with pytest.raises(ParseError) as ei:
        parse_ring_expr("Z4 x")
    assert "Z<n>" in ei.value.expected
    with pytest.raises(ParseError) as ei:
        parse_ring_expr("M(2 Z4)")
    assert ei.value.expected == [","]


@pytest.mark.parametrize("text", [
    "idealize(Z6, 4)",        # module order must divide the modulus
    "idealize(Z4 x Z2, 2)",   # base must be a Z_n
    "M(0, Z2)",
    "trunc(Z2, 0)",
    "amalg(Z8, Z3, mod, gen(0))",  # second modulus must divide the first
    "Z0",
])
def test_elaboration_rejects(text):
    with pytest.raises(ParseError):
        build_ring(parse_ring_expr(text))


# --- element addressing is construction-native ------------------------------

RING_EXPRS = [
    "Z12",
    "Z4 x Z6",
    "M(2, Z3)",
    "quot(Z36, gen(12))",
    "idealize(Z6, 3)",
    "amalg(Z8, Z4, mod, gen(2))",
    "trunc(Z4, 2)",
    "idealring(Z6, gen(2))",
]


@pytest.mark.parametrize("expr", RING_EXPRS)
def test_element_label_round_trip(expr):
    ring = build_ring(parse_ring_expr(expr))
    for i in range(ring.size):
        lit = parse_element(ring.element_label(i))
        assert element_index(ring, lit) == i


def test_addressing_specifics():
    prod = build_ring(parse_ring_expr("Z4 x Z6"))
    assert element_index(prod, parse_element("(2, 3)")) == prod.join(2, 3)

    mat = build_ring(parse_ring_expr("M(2, Z3)"))
    assert element_index(mat, parse_element("[[1, 0], [0, 1]]")) == mat.one

    quo = build_ring(parse_ring_expr("quot(Z36, gen(12))"))
    assert element_index(quo, parse_element("14")) == quo.project(14)

    tr = build_ring(parse_ring_expr("trunc(Z4, 2)"))
    assert element_index(tr, parse_element("poly(2, 1)")) == 2 + 1 * 4

    sub = build_ring(parse_ring_expr("idealring(Z6, gen(2))"))
    assert sub.element_label(sub.one) == "4"
    assert element_index(sub, parse_element("4")) == sub.one
    with pytest.raises(ParseError):
        element_index(sub, parse_element("5"))   # not inside the ideal

    am = build_ring(parse_ring_expr("amalg(Z8, Z4, mod, gen(2))"))
    idx = element_index(am, parse_element("(3, 1)"))   # 1 - f(3) = 2 in gen(2)
    assert am.element_label(idx) == "(3, 1)"
    with pytest.raises(ParseError):
        element_index(am, parse_element("(3, 0)"))     # offset 1 not in gen(2)

    zn = build_ring(parse_ring_expr("Z12"))
    with pytest.raises(ParseError):
        element_index(zn, parse_element("(1, 2)"))


def test_build_ideal_and_subset():
    ring = build_ring(parse_ring_expr("Z36"))
    ideal = build_ideal(ring, parse_ideal_spec("gen(4)"))
    assert sorted(map(int, ideal.members)) == list(range(0, 36, 4))
    assert ideal.label == "gen(4)"

    s = build_subset(ring, parse_subset_spec("mulclosed(1, 3, 9, 27)"))
    assert sorted(map(int, s.members)) == [1, 3, 9, 27]

    g = build_subset(ring, parse_subset_spec("gen_s(3)"))
    assert sorted(map(int, g.members)) == [3, 9, 27]

    with pytest.raises(InvalidSubset):
        build_subset(ring, parse_subset_spec("mulclosed(1, 5)"))
