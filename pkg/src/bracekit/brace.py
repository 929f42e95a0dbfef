"""The insertion brace f{g_1, ..., g_n} on graded multilinear maps.

The brace sums, over all ways of keeping free slots between the inserted
maps, the signed tensor-block evaluations

    f{g_1,...,g_n} = sum over patterns (k_0,...,k_n) of
        (-1)^beta  f after (1^{k_0} (x) g_1 (x) ... (x) g_n (x) 1^{k_n})

with beta depending only on the shape data:

    beta = sum_{0 <= j < i} (a_i - 1)(k_j + a_j)      (a_0 = 0)
         + sum_i (N - i) q_i
         + sum_{j < i} q_i a_j

where N is f's arity and a_i, q_i are the arities and degrees of the g's.
The j = 0 term of the first sum is a convention choice; the keyword
include_leading_slot_term exists so its effect on the nesting identity can
be demonstrated, not because both conventions are supported downstream.

Viewed as algebra elements, maps are graded by brace parity
(p + k + 1 mod 2); the Koszul signs in the nesting identity and in the
symmetrization helpers below are taken over those parities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .graded import (
    DEFAULT_ENUMERATION_CAP,
    InsertionPattern,
    enumerate_permutations,
    insertion_patterns,
    koszul_sign,
)
from .multimap import MultiMap, _tensor_core


@dataclass(frozen=True)
class BraceContext:
    """Shape data of one insertion term: f's arity, the inserted maps'
    arities and degrees, and the free-slot pattern."""

    f_arity: int
    g_arities: tuple
    g_degrees: tuple
    slots: InsertionPattern

    def __post_init__(self):
        n = len(self.g_arities)
        if len(self.g_degrees) != n:
            raise InputError("need one degree per inserted map")
        if len(self.slots.slots) != n + 1:
            raise InputError(f"expected {n + 1} slot counts")
        if self.slots.total + n != self.f_arity:
            raise InputError(
                f"slots {self.slots.slots} plus {n} insertions "
                f"do not fill arity {self.f_arity}"
            )


def beta_parity(ctx: BraceContext, include_leading_slot_term: bool = True) -> int:
    """Parity of the brace sign on one insertion pattern."""
    a = ctx.g_arities
    q = ctx.g_degrees
    k = ctx.slots.slots
    n = len(a)
    N = ctx.f_arity
    total = 0
    for i in range(1, n + 1):
        lo = 0 if include_leading_slot_term else 1
        for j in range(lo, i):
            aj = a[j - 1] if j >= 1 else 0
            total += (a[i - 1] - 1) * (k[j] + aj)
    for i in range(1, n + 1):
        total += (N - i) * q[i - 1]
        for j in range(1, i):
            total += q[i - 1] * a[j - 1]
    return total & 1


def brace_eval(
    f: MultiMap,
    gs: Sequence[MultiMap],
    include_leading_slot_term: bool = True,
) -> MultiMap:
    """Insert the maps gs into f, summing all patterns with beta signs.

    The result has arity sum(a_i) + N - n and degree p + sum(q_i).
    With no gs the brace is f itself.
    """
    gs = tuple(gs)
    n = len(gs)
    N = f.arity
    if n > N:
        raise InputError(f"cannot insert {n} maps into a map of arity {N}")
    for g in gs:
        if g.space != f.space:
            raise InputError("all maps in a brace must share one space")
    if n == 0:
        return f
    arities = tuple(g.arity for g in gs)
    degrees = tuple(g.degree for g in gs)
    out_arity = sum(arities) + N - n
    out_degree = f.degree + sum(degrees)

    signed_patterns = []
    for pattern in insertion_patterns(N - n, n + 1):
        ctx = BraceContext(N, arities, degrees, pattern)
        sign = -1 if beta_parity(ctx, include_leading_slot_term) else 1
        signed_patterns.append((sign, pattern.slots))

    space = f.space
    basis = [space.basis_vector(i) for i in range(space.dim)]
    entries = {}
    for t in space.tuples(out_arity):
        args = [basis[i] for i in t]
        acc: dict = {}
        for sign, slots in signed_patterns:
            v = _tensor_core(f, gs, slots, args)
            for j, c in v.coeffs.items():
                acc[j] = acc.get(j, 0) + sign * c
        if acc:
            entries[t] = acc
    return MultiMap(space, out_arity, out_degree, entries)


def _brace_or_zero(
    f: MultiMap, gs: Sequence[MultiMap], include_leading_slot_term: bool = True
) -> MultiMap:
    """Brace with overflow collapsing to the zero map of the right shape.

    Handing a map more arguments than its arity leaves no valid insertion
    pattern, so the term is zero; its signature is still determined by the
    shapes, which keeps sums over nestings well typed.
    """
    gs = tuple(gs)
    n = len(gs)
    if n <= f.arity:
        return brace_eval(f, gs, include_leading_slot_term)
    out_arity = sum(g.arity for g in gs) + f.arity - n
    out_degree = f.degree + sum(g.degree for g in gs)
    return MultiMap.zero(f.space, out_arity, out_degree)


def _nestings(n: int, r: int):
    """All ways to hand the maps y_1..y_r to x_1..x_n in order: sequences
    0 <= i_1 <= j_1 <= ... <= i_n <= j_n <= r, as ((i_t, j_t)) pairs."""
    for seq in itertools.combinations_with_replacement(range(r + 1), 2 * n):
        yield tuple((seq[2 * t], seq[2 * t + 1]) for t in range(n))


def brace_axiom_sides(
    x: MultiMap,
    xs: Sequence[MultiMap],
    ys: Sequence[MultiMap],
    include_leading_slot_term: bool = True,
):
    """Both sides of the nesting identity for x{x_1..x_n}{y_1..y_r}.

    The right side redistributes the y's: each x_t swallows a consecutive
    run y_{i_t+1..j_t}, the rest feed the outer brace directly, and the
    term carries the Koszul sign of moving each x_t past the y's standing
    before its run, in brace parities.
    """
    xs = tuple(xs)
    ys = tuple(ys)
    n, r = len(xs), len(ys)
    if n > x.arity:
        raise InputError(f"cannot insert {n} maps into arity {x.arity}")
    inner = brace_eval(x, xs, include_leading_slot_term)
    if r > inner.arity:
        raise InputError(
            f"cannot insert {r} maps into the arity-{inner.arity} first brace"
        )
    lhs = brace_eval(inner, ys, include_leading_slot_term)

    bx = [m.brace_parity for m in xs]
    by = [m.brace_parity for m in ys]
    by_prefix = [0] * (r + 1)
    for i, p in enumerate(by):
        by_prefix[i + 1] = by_prefix[i] ^ p

    rhs = MultiMap.zero(x.space, lhs.arity, lhs.degree)
    for pairs in _nestings(n, r):
        outer_args = []
        sign = 0
        prev = 0
        for t, (i, j) in enumerate(pairs):
            outer_args.extend(ys[prev:i])
            outer_args.append(
                _brace_or_zero(xs[t], ys[i:j], include_leading_slot_term)
            )
            sign ^= bx[t] & by_prefix[i]
            prev = j
        outer_args.extend(ys[prev:])
        term = _brace_or_zero(x, outer_args, include_leading_slot_term)
        rhs = rhs + (term.scale(-1) if sign else term)
    return lhs, rhs


def brace_axiom_check(
    x: MultiMap,
    xs: Sequence[MultiMap],
    ys: Sequence[MultiMap],
    include_leading_slot_term: bool = True,
) -> bool:
    lhs, rhs = brace_axiom_sides(x, xs, ys, include_leading_slot_term)
    return lhs == rhs


def braced_interleave_terms(
    f: MultiMap,
    ys: Sequence[MultiMap],
    zs: Sequence[MultiMap],
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> list:
    """eps-signed head permutations and rifflings at the brace level.

    Returns (sign, argument maps) pairs: for each permutation of the y's
    and each insertion pattern of the z's into the gaps, the sign is the
    Koszul sign of the permutation times (-1)^{sum |y| * (z's placed
    earlier)}, all in brace parities.  Feeding each term to f's brace and
    summing yields the partially symmetrized brace.
    """
    ys = tuple(ys)
    zs = tuple(zs)
    n, m = len(ys), len(zs)
    by = [g.brace_parity for g in ys]
    bz = [g.brace_parity for g in zs]
    terms = []
    for sigma in enumerate_permutations(n, cap):
        base = koszul_sign(sigma, by)
        ys_s = sigma.apply(ys)
        by_s = sigma.apply(by)
        for pattern in insertion_patterns(m, n + 1):
            k = pattern.slots
            eta = 0
            seq = list(zs[: k[0]])
            zprefix = sum(bz[: k[0]]) & 1
            zpos = k[0]
            for i in range(1, n + 1):
                eta ^= by_s[i - 1] & zprefix
                seq.append(ys_s[i - 1])
                for idx in range(zpos, zpos + k[i]):
                    seq.append(zs[idx])
                    zprefix ^= bz[idx]
                zpos += k[i]
            terms.append((base * (-1 if eta else 1), tuple(seq)))
    return terms


def braced_symmetrization_sides(
    f: MultiMap,
    ys: Sequence[MultiMap],
    zs: Sequence[MultiMap],
    cap: int | None = DEFAULT_ENUMERATION_CAP,
):
    """Symmetrizing in two stages versus all at once.

    Left: permute the z's by eps, riffle them through the permuted y's
    (braced_interleave_terms), brace f with each term.  Right: brace f with
    all n+m maps permuted by eps over the full symmetric group.
    """
    ys = tuple(ys)
    zs = tuple(zs)
    n, m = len(ys), len(zs)
    if n + m > f.arity:
        raise InputError(f"cannot insert {n + m} maps into arity {f.arity}")
    everything = ys + zs
    parities = [g.brace_parity for g in everything]
    out_arity = sum(g.arity for g in everything) + f.arity - (n + m)
    out_degree = f.degree + sum(g.degree for g in everything)

    direct = MultiMap.zero(f.space, out_arity, out_degree)
    for rho in enumerate_permutations(n + m, cap):
        sign = koszul_sign(rho, parities)
        direct = direct + brace_eval(f, rho.apply(everything)).scale(sign)

    bz = [g.brace_parity for g in zs]
    staged = MultiMap.zero(f.space, out_arity, out_degree)
    for pi in enumerate_permutations(m, cap):
        zsign = koszul_sign(pi, bz)
        zs_p = pi.apply(zs)
        for sign, seq in braced_interleave_terms(f, ys, zs_p, cap):
            staged = staged + brace_eval(f, list(seq)).scale(zsign * sign)
    return staged, direct


def braced_symmetrization_check(
    f: MultiMap,
    ys: Sequence[MultiMap],
    zs: Sequence[MultiMap],
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> bool:
    staged, direct = braced_symmetrization_sides(f, ys, zs, cap)
    return staged == direct
