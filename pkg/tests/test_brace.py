import random

import pytest

from bracekit.brace import (
    BraceContext,
    beta_parity,
    brace_axiom_check,
    brace_axiom_sides,
    brace_eval,
    braced_interleave_terms,
    braced_symmetrization_check,
)
from bracekit.errors import InputError
from bracekit.graded import InsertionPattern
from bracekit.multimap import GradedSpace, MultiMap
from helpers import random_map

POINT = GradedSpace([("e", 0)])
PLANE = GradedSpace([("a", 0), ("b", 0)])
MIXED = GradedSpace([("a", 0), ("b", 1)])


def const_map(space, arity, value_index=0):
    entries = {key: {value_index: 1} for key in space.tuples(arity)}
    degree = space.degrees[value_index] - 0
    return MultiMap(space, arity, degree, entries)


class TestBetaParity:
    def ctx(self, N, arities, degrees, slots):
        return BraceContext(N, tuple(arities), tuple(degrees), InsertionPattern(slots))

    def test_unary_inserts_of_degree_zero(self):
        assert beta_parity(self.ctx(2, (1,), (0,), (0, 1))) == 0
        assert beta_parity(self.ctx(2, (1,), (0,), (1, 0))) == 0

    def test_binary_insert_sees_leading_slot(self):
        assert beta_parity(self.ctx(2, (2,), (0,), (0, 1))) == 0
        assert beta_parity(self.ctx(2, (2,), (0,), (1, 0))) == 1

    def test_degree_shift_term(self):
        assert beta_parity(self.ctx(2, (1,), (1,), (0, 1))) == 1
        assert beta_parity(self.ctx(2, (1,), (1,), (1, 0))) == 1

    def test_unary_degree_zero_inserts_always_trivial(self):
        for slots in [(0, 0, 2), (1, 0, 1), (2, 0, 0), (0, 1, 1)]:
            assert beta_parity(self.ctx(4, (1, 1), (0, 0), slots)) == 0

    def test_leading_slot_term_flip(self):
        ctx = self.ctx(3, (2,), (0,), (1, 1))
        assert beta_parity(ctx) == 1
        assert beta_parity(ctx, include_leading_slot_term=False) == 0


class TestBraceEval:
    def test_empty_brace_is_identity(self):
        f = const_map(POINT, 2)
        assert brace_eval(f, []) == f

    def test_unary_insert_doubles(self):
        f = MultiMap(POINT, 2, 0, {(0, 0): {0: 1}})
        g = MultiMap(POINT, 1, 0, {(0,): {0: 1}})
        out = brace_eval(f, [g])
        assert out.arity == 2
        assert out.degree == 0
        assert out.value((0, 0)).coeffs == {0: 2}

    def test_signature(self):
        rng = random.Random(2)
        f = random_map(rng, MIXED, 3)
        g = random_map(rng, MIXED, 2)
        h = random_map(rng, MIXED, 1)
        out = brace_eval(f, [g, h])
        assert out.arity == 2 + 1 + 3 - 2
        assert out.degree == f.degree + g.degree + h.degree

    def test_too_many_inserts(self):
        f = const_map(POINT, 1)
        g = const_map(POINT, 1)
        with pytest.raises(InputError):
            brace_eval(f, [g, g])

    def test_binary_self_insertion_measures_associativity(self):
        # a*a=a, a*b=b, b*a=0, b*b=0 is associative
        mu = MultiMap(PLANE, 2, 0, {(0, 0): {0: 1}, (0, 1): {1: 1}})
        assert brace_eval(mu, [mu]).is_zero()
        # a*a=b, a*b=a is not
        bad = MultiMap(PLANE, 2, 0, {(0, 0): {1: 1}, (0, 1): {0: 1}})
        defect = brace_eval(bad, [bad])
        assert not defect.is_zero()
        # (aa)b - a(ab) = bb - aa = -b on the (a,a,b) slot
        assert defect.value((0, 0, 1)).coeffs == {1: -1}


class TestBraceAxiom:
    def test_no_inner_maps(self):
        rng = random.Random(4)
        x = random_map(rng, MIXED, 2)
        y = random_map(rng, MIXED, 1)
        assert brace_axiom_check(x, [], [y])

    def test_no_outer_maps(self):
        rng = random.Random(5)
        x = random_map(rng, MIXED, 2)
        g = random_map(rng, MIXED, 1)
        assert brace_axiom_check(x, [g], [])

    def test_random_instances(self):
        rng = random.Random(6)
        for _ in range(25):
            space = rng.choice((POINT, PLANE, MIXED))
            N = rng.randint(1, 3)
            x = random_map(rng, space, N)
            n = rng.randint(0, min(2, N))
            xs = [random_map(rng, space, rng.randint(1, 2)) for _ in range(n)]
            inner_arity = sum(m.arity for m in xs) + N - n
            r = rng.randint(0, min(2, inner_arity))
            ys = [random_map(rng, space, rng.randint(1, 2)) for _ in range(r)]
            assert brace_axiom_check(x, xs, ys)

    def test_overflow_terms_appear_and_cancel(self):
        # arity-2 outer with two inserted maps and two late maps forces
        # nestings that overflow both inner and outer braces
        rng = random.Random(7)
        x = random_map(rng, PLANE, 2)
        xs = [random_map(rng, PLANE, 2), random_map(rng, PLANE, 1)]
        ys = [random_map(rng, PLANE, 1), random_map(rng, PLANE, 1)]
        assert brace_axiom_check(x, xs, ys)

    def test_shape_preconditions(self):
        x = const_map(POINT, 1)
        g = const_map(POINT, 1)
        with pytest.raises(InputError):
            brace_axiom_check(x, [g, g], [])
        with pytest.raises(InputError):
            brace_axiom_check(x, [g], [g, g])

    def test_leading_slot_convention_is_load_bearing(self):
        e = POINT
        x = MultiMap(e, 2, 0, {(0, 0): {0: 1}})
        g = MultiMap(e, 2, 0, {(0, 0): {0: 1}})
        h = MultiMap(e, 1, 0, {(0,): {0: 1}})
        assert brace_axiom_check(x, [g], [h])
        assert not brace_axiom_check(x, [g], [h], include_leading_slot_term=False)

    def test_sides_share_signature(self):
        rng = random.Random(8)
        x = random_map(rng, MIXED, 3)
        xs = [random_map(rng, MIXED, 1)]
        ys = [random_map(rng, MIXED, 2)]
        lhs, rhs = brace_axiom_sides(x, xs, ys)
        assert (lhs.arity, lhs.degree) == (rhs.arity, rhs.degree)


class TestBracedSymmetrization:
    def test_interleave_term_count(self):
        rng = random.Random(9)
        f = random_map(rng, MIXED, 4)
        ys = [random_map(rng, MIXED, 1) for _ in range(2)]
        zs = [random_map(rng, MIXED, 1) for _ in range(2)]
        # 2! head perms times C(2+2,2) rifflings
        assert len(braced_interleave_terms(f, ys, zs)) == 12

    def test_no_tail_maps(self):
        rng = random.Random(10)
        f = random_map(rng, MIXED, 2)
        ys = [random_map(rng, MIXED, 1) for _ in range(2)]
        assert braced_symmetrization_check(f, ys, [])

    def test_no_head_maps(self):
        rng = random.Random(11)
        f = random_map(rng, MIXED, 2)
        zs = [random_map(rng, MIXED, 1) for _ in range(2)]
        assert braced_symmetrization_check(f, [], zs)

    def test_random_instances(self):
        rng = random.Random(12)
        for _ in range(12):
            space = rng.choice((POINT, MIXED))
            n = rng.randint(0, 2)
            m = rng.randint(0 if n else 1, 2)
            N = rng.randint(n + m, n + m + 1)
            if N == 0:
                continue
            f = random_map(rng, space, N)
            ys = [random_map(rng, space, rng.randint(1, 2)) for _ in range(n)]
            zs = [random_map(rng, space, rng.randint(1, 2)) for _ in range(m)]
            assert braced_symmetrization_check(f, ys, zs)

    def test_shape_precondition(self):
        f = const_map(POINT, 1)
        g = const_map(POINT, 1)
        with pytest.raises(InputError):
            braced_symmetrization_check(f, [g], [g])
