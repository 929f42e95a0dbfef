"""Symmetric braces: the unshuffle bracket on antisymmetric maps and the
symmetrized insertion brace, plus the checks tying the two together.

Two brackets satisfy the symmetric-brace axiom here:

  * symbrace_eval: defined only on antisymmetric maps; deals the arguments
    to the inserted maps through unshuffles with chi signs and a global
    (-1)^delta,

        delta = sum_i (N - i) q_i + sum_{j<i} q_i a_j
              + sum_{j<i} a_i a_j + sum_i (n - i) a_i.

  * symmetrize_brace: the eps-signed sum of plain braces f{g_sigma} over
    all orderings of the inserted maps, defined for any maps.

antisymmetrized_brace_check verifies the bridge: antisymmetrizing the
symmetrized brace of f over permuted g's equals the unshuffle bracket of
the antisymmetrizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .graded import (
    DEFAULT_ENUMERATION_CAP,
    UnshuffleSpec,
    antisym_koszul_sign,
    enumerate_permutations,
    enumerate_unshuffles,
    insertion_patterns,
    koszul_sign,
)
from .multimap import MultiMap, _tensor_core, antisymmetrize, is_antisymmetric
from .brace import brace_eval

FLAVOR_UNSHUFFLE = "example33"
FLAVOR_SYMMETRIZED = "symmetrized"
_FLAVORS = (FLAVOR_UNSHUFFLE, FLAVOR_SYMMETRIZED)


@dataclass(frozen=True)
class SymBraceContext:
    """Shape data: outer arity and the inserted maps' arities and degrees."""

    f_arity: int
    g_arities: tuple
    g_degrees: tuple

    def __post_init__(self):
        if len(self.g_arities) != len(self.g_degrees):
            raise InputError("need one degree per inserted map")
        if len(self.g_arities) > self.f_arity:
            raise InputError(
                f"cannot insert {len(self.g_arities)} maps into arity {self.f_arity}"
            )


def delta_parity(ctx: SymBraceContext) -> int:
    """Global sign parity of the unshuffle bracket."""
    a = ctx.g_arities
    q = ctx.g_degrees
    n = len(a)
    N = ctx.f_arity
    total = 0
    for i in range(1, n + 1):
        total += (N - i) * q[i - 1] + (n - i) * a[i - 1]
        for j in range(1, i):
            total += q[i - 1] * a[j - 1] + a[i - 1] * a[j - 1]
    return total & 1


def symbrace_eval(
    f: MultiMap,
    gs: Sequence[MultiMap],
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> MultiMap:
    """The unshuffle bracket f<g_1, ..., g_n> on antisymmetric maps.

    Arguments are dealt to g_1, ..., g_n and then to f's remaining inputs
    by every unshuffle, each term signed by chi of the unshuffle; the whole
    sum is scaled by (-1)^delta.  Inputs must all be antisymmetric.
    """
    gs = tuple(gs)
    n = len(gs)
    N = f.arity
    if n > N:
        raise InputError(f"cannot insert {n} maps into a map of arity {N}")
    for m in (f, *gs):
        if m.space != f.space:
            raise InputError("all maps in a bracket must share one space")
        if not is_antisymmetric(m):
            raise InputError("the unshuffle bracket needs antisymmetric maps")
    if n == 0:
        return f
    arities = tuple(g.arity for g in gs)
    degrees = tuple(g.degree for g in gs)
    free = N - n
    out_arity = sum(arities) + free
    out_degree = f.degree + sum(degrees)
    base = -1 if delta_parity(SymBraceContext(N, arities, degrees)) else 1
    gammas = list(enumerate_unshuffles(UnshuffleSpec(arities + (free,)), cap))
    slots = (0,) * n + (free,)

    space = f.space
    basis = [space.basis_vector(i) for i in range(space.dim)]
    entries = {}
    for t in space.tuples(out_arity):
        degs = [space.degrees[i] for i in t]
        args = [basis[i] for i in t]
        acc: dict = {}
        for gamma in gammas:
            sign = antisym_koszul_sign(gamma, degs)
            v = _tensor_core(f, gs, slots, gamma.apply(args))
            for j, c in v.coeffs.items():
                acc[j] = acc.get(j, 0) + sign * c
        if acc:
            entries[t] = {j: base * c for j, c in acc.items() if c}
    return MultiMap(space, out_arity, out_degree, entries)


def symmetrize_brace(
    f: MultiMap,
    gs: Sequence[MultiMap],
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> MultiMap:
    """eps-signed sum of plain braces over all orderings of the g's."""
    gs = tuple(gs)
    n = len(gs)
    if n > f.arity:
        raise InputError(f"cannot insert {n} maps into a map of arity {f.arity}")
    if n == 0:
        return f
    parities = [g.brace_parity for g in gs]
    out = MultiMap.zero(
        f.space,
        sum(g.arity for g in gs) + f.arity - n,
        f.degree + sum(g.degree for g in gs),
    )
    for sigma in enumerate_permutations(n, cap):
        sign = koszul_sign(sigma, parities)
        out = out + brace_eval(f, sigma.apply(gs)).scale(sign)
    return out


def graded_symmetry_check(
    f: MultiMap,
    gs: Sequence[MultiMap],
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> bool:
    """Swapping adjacent inserted maps costs (-1)^{|g_i||g_{i+1}|} in brace
    parities; checks every adjacent swap against the base bracket."""
    gs = tuple(gs)
    n = len(gs)
    if n <= 1:
        return True
    base = symbrace_eval(f, gs, cap)
    parities = [g.brace_parity for g in gs]
    for i in range(n - 1):
        swapped = gs[:i] + (gs[i + 1], gs[i]) + gs[i + 2 :]
        sign = -1 if parities[i] & parities[i + 1] else 1
        if symbrace_eval(f, swapped, cap) != base.scale(sign):
            return False
    return True


def _bracket_or_zero(bracket, f: MultiMap, args: Sequence[MultiMap], cap):
    """Apply a bracket, collapsing arity overflow to the zero map of the
    signature the shapes dictate."""
    args = tuple(args)
    if len(args) <= f.arity:
        return bracket(f, args, cap)
    out_arity = sum(m.arity for m in args) + f.arity - len(args)
    out_degree = f.degree + sum(m.degree for m in args)
    return MultiMap.zero(f.space, out_arity, out_degree)


def symbrace_axiom_sides(
    f: MultiMap,
    gs: Sequence[MultiMap],
    xs: Sequence[MultiMap],
    flavor: str = FLAVOR_UNSHUFFLE,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
):
    """Both sides of the symmetric-brace axiom f<gs><xs> = sum of dealt
    brackets, for either bracket flavor.

    The right side runs over all ordered splits of the x's into n+1 blocks
    (by size compositions and unshuffles): each g_i swallows a block, the
    last block feeds the outer bracket directly.  Signs: eps of the
    unshuffle on x brace parities, times each g_i crossing the x's dealt to
    earlier blocks.
    """
    if flavor not in _FLAVORS:
        raise InputError(f"unknown bracket flavor {flavor!r}")
    bracket = symbrace_eval if flavor == FLAVOR_UNSHUFFLE else symmetrize_brace
    gs = tuple(gs)
    xs = tuple(xs)
    n, r = len(gs), len(xs)
    if n > f.arity:
        raise InputError(f"cannot insert {n} maps into arity {f.arity}")
    inner = bracket(f, gs, cap)
    if r > inner.arity:
        raise InputError(
            f"cannot insert {r} maps into the arity-{inner.arity} first bracket"
        )
    lhs = bracket(inner, xs, cap)

    bg = [g.brace_parity for g in gs]
    bx = [x.brace_parity for x in xs]
    rhs = MultiMap.zero(f.space, lhs.arity, lhs.degree)
    block_cache: dict = {}
    for parts in insertion_patterns(r, n + 1):
        sizes = parts.slots
        for gamma in enumerate_unshuffles(UnshuffleSpec(sizes), cap):
            dealt = gamma.apply(xs)
            sign_exp = 0
            prefix = 0
            pos = 0
            outer_args = []
            for b in range(n):
                size = sizes[b]
                block = dealt[pos : pos + size]
                key = (b, gamma.images[pos : pos + size])
                if key not in block_cache:
                    block_cache[key] = _bracket_or_zero(bracket, gs[b], block, cap)
                outer_args.append(block_cache[key])
                sign_exp ^= bg[b] & prefix
                for x in block:
                    prefix ^= x.brace_parity
                pos += size
            outer_args.extend(dealt[pos:])
            term = _bracket_or_zero(bracket, f, outer_args, cap)
            sign = koszul_sign(gamma, bx) * (-1 if sign_exp else 1)
            rhs = rhs + term.scale(sign)
    return lhs, rhs


def symbrace_axiom_check(
    f: MultiMap,
    gs: Sequence[MultiMap],
    xs: Sequence[MultiMap],
    flavor: str = FLAVOR_UNSHUFFLE,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> bool:
    lhs, rhs = symbrace_axiom_sides(f, gs, xs, flavor, cap)
    return lhs == rhs


def symmetrized_axiom_check(
    f: MultiMap,
    gs: Sequence[MultiMap],
    xs: Sequence[MultiMap],
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> bool:
    """The symmetrized insertion brace satisfies the symmetric-brace axiom."""
    return symbrace_axiom_check(f, gs, xs, FLAVOR_SYMMETRIZED, cap)


def antisymmetrized_brace_sides(
    f: MultiMap,
    gs: Sequence[MultiMap],
    cap: int | None = DEFAULT_ENUMERATION_CAP,
):
    """as distributes over the symmetrized brace, against the unshuffle
    bracket of the antisymmetrizations.

    Left: sum over orderings sigma, eps(sigma) * as(f{g_sigma}).
    Right: as(f)<as(g_1), ..., as(g_n)>.
    """
    gs = tuple(gs)
    n = len(gs)
    if n > f.arity:
        raise InputError(f"cannot insert {n} maps into arity {f.arity}")
    parities = [g.brace_parity for g in gs]
    as_f = antisymmetrize(f, cap)
    as_gs = [antisymmetrize(g, cap) for g in gs]
    rhs = symbrace_eval(as_f, as_gs, cap)
    lhs = MultiMap.zero(f.space, rhs.arity, rhs.degree)
    for sigma in enumerate_permutations(n, cap):
        sign = koszul_sign(sigma, parities)
        lhs = lhs + antisymmetrize(brace_eval(f, sigma.apply(gs)), cap).scale(sign)
    return lhs, rhs


def antisymmetrized_brace_check(
    f: MultiMap,
    gs: Sequence[MultiMap],
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> bool:
    lhs, rhs = antisymmetrized_brace_sides(f, gs, cap)
    return lhs == rhs
