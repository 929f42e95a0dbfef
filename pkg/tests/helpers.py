"""Shared generators for unit tests: small homogeneous random tables."""

from bracekit.multimap import MultiMap, antisymmetrize


def random_map(rng, space, arity, density=0.6):
    """Homogeneous-by-construction random table over a small space.

    The internal degree is anchored so at least one entry is admissible,
    then each admissible (input tuple, output) pair is kept with the given
    density and a small nonzero integer coefficient.
    """
    anchor = tuple(rng.randrange(space.dim) for _ in range(arity))
    out = rng.randrange(space.dim)
    degree = space.degrees[out] - sum(space.degrees[i] for i in anchor)
    entries = {}
    for key in space.tuples(arity):
        target = degree + sum(space.degrees[i] for i in key)
        hits = {
            j: rng.choice((-2, -1, 1, 2))
            for j in range(space.dim)
            if space.degrees[j] == target and rng.random() < density
        }
        if hits:
            entries[key] = hits
    return MultiMap(space, arity, degree, entries)


def random_antisym_map(rng, space, arity, density=0.6):
    return antisymmetrize(random_map(rng, space, arity, density))
