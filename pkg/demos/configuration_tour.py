"""A tour of the line-configuration machinery.

Stability strata of six labeled lines, the complete quadrangle, the
Cremona involution, and the group actions that organize everything.
"""

import random

from latconf.configs import (
    ConfigMatrix,
    canonical_form,
    complete_quadrangle,
    cremona,
    equivalent,
    gl3f2_elements,
    plucker,
    quadrangle_classes,
    stability,
    triple_points,
    wreath_elements,
)
from latconf.errors import DimensionError, VerticesCollinear
from latconf.matrices import frac_to_str


def show(title):
    print()
    print(f"== {title} ==")


def main():
    show("Stability strata")
    witnesses = [
        ("general position",
         [[1, 0, 0, 1, 2, 3], [0, 1, 0, 1, 5, 7], [0, 0, 1, 1, 11, 13]]),
        ("five concurrent lines",
         [[1, 0, 1, 1, 1, 0], [0, 1, 1, 2, 3, 0], [0, 0, 0, 0, 0, 1]]),
        ("three identical pairs",
         [[1, 1, 0, 0, 1, 1], [0, 0, 1, 1, 1, 1], [0, 0, 0, 0, 1, 1]]),
        ("four concurrent lines",
         [[1, 0, 1, 1, 0, 1], [0, 1, 1, 2, 0, 0], [0, 0, 0, 0, 1, 1]]),
    ]
    for name, rows in witnesses:
        rep = stability(ConfigMatrix(rows))
        print(f"  {name:28s} -> {rep.status}/{rep.stratum}")

    show("The complete quadrangle")
    quad = complete_quadrangle()
    rep = stability(quad)
    print(f"status: {rep.status}/{rep.stratum}")
    print(f"triple points: {len(triple_points(quad))}")
    trivial, even, full = quadrangle_classes()
    print(f"classes of labeled quadrangles: {len(trivial)} "
          f"(no group) -> {len(even)} (even wreath) -> {len(full)} "
          f"(full wreath)")
    print(f"wreath group order: {len(wreath_elements())}, "
          f"GL3(F2) order: {len(gl3f2_elements())}")

    show("Plücker minors of the general-position witness")
    coords = plucker(ConfigMatrix(witnesses[0][1]))
    shown = list(sorted(coords.items()))[:5]
    for key, value in shown:
        print(f"  m{key} = {frac_to_str(value)}")
    print(f"  ... ({len(coords)} minors total)")

    show("The Cremona involution on random stable configurations")
    rng = random.Random(0)
    checked = 0
    while checked < 5:
        try:
            c = ConfigMatrix([[rng.randint(-9, 9) for _ in range(6)]
                              for _ in range(3)])
        except DimensionError:
            continue
        if stability(c).status != "Stable":
            continue
        try:
            back = cremona(cremona(c))
        except VerticesCollinear:
            continue
        checked += 1
        normal, frame = canonical_form(c)
        print(f"  sample {checked}: involution holds = "
              f"{equivalent(back, c)} (canonical frame {frame})")


if __name__ == "__main__":
    main()
