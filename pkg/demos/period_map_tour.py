"""A tour of the Jacobian-ring period map.

For a smooth 4x7 quadric system the invariant deformation space has
dimension 6; for each character kappa the target splits as (4, 2) and
multiplication by x_kappa has rank 4 with a 2-dimensional kernel that
is spanned by an explicit family.
"""

import random

from latconf.configs import smoothness
from latconf.jacobian import (
    invariant_deformations,
    kappa_sum_bases,
    kappa_target,
    kernel_family_vectors,
    period_map,
    squarefree_triples,
)
from latconf.matrices import Matrix


def show(title):
    print()
    print(f"== {title} ==")


def random_smooth_system(rng):
    while True:
        q = Matrix([[rng.randint(-9, 9) for _ in range(7)]
                    for _ in range(4)])
        if q.rank() == 4 and smoothness(q)[0]:
            return q


def main():
    rng = random.Random(0)
    q = random_smooth_system(rng)
    show("A random smooth 4x7 system")
    for row in q.data:
        print("  " + " ".join(f"{int(x):3d}" for x in row))

    show("Graded dimensions")
    inv = invariant_deformations(q)
    print(f"invariant deformation space: dimension {inv.dimension}")
    for kappa in range(1, 8):
        first, second = kappa_target(q, kappa)
        pm = period_map(q, kappa)
        print(f"  kappa={kappa}: target ({first.dimension}, "
              f"{second.dimension}), rank {pm.rank}, "
              f"kernel {pm.kernel.rows}")

    show("Character triples behind the second summand")
    for kappa in (1, 7):
        print(f"  kappa={kappa}: all bases {kappa_sum_bases(kappa)}, "
              f"retained {squarefree_triples(kappa)}")

    show("The explicit kernel family (kappa = 3)")
    kappa = 3
    pm = period_map(q, kappa)
    first, _ = kappa_target(q, kappa)
    fam = kernel_family_vectors(q, kappa)
    print(f"family vectors: {len(fam)}")
    images_zero = all(
        all(x == 0 for x in first.reduce_vector(v)) for v in fam
    )
    coords = Matrix([pm.source.reduce_vector(v) for v in fam])
    print(f"all images vanish: {images_zero}")
    print(f"family rank on the source: {coords.rank()} "
          f"(= kernel dimension {pm.kernel.rows})")


if __name__ == "__main__":
    main()
