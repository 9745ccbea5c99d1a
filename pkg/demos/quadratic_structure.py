"""Inspect the closed-form structure of fitted quadratics.

Run from the repository root:

    python3 demos/quadratic_structure.py
"""

from quadfit import (
    discriminant,
    from_vertex_form,
    quadratic_roots,
    to_vertex_form,
)


def describe(a: float, b: float, c: float) -> None:
    print(f"y = {a:g}x^2 + {b:g}x + {c:g}")
    disc = discriminant(a, b, c)
    print(f"  discriminant: {disc:g}")

    roots = quadratic_roots(a, b, c)
    if roots.multiplicity == 0:
        print("  no real roots")
    elif roots.multiplicity == 2:
        print(f"  double root at x = {roots.roots[0]:g}")
    else:
        print(f"  roots: x = {roots.roots[0]:g} and x = {roots.roots[1]:g}")

    v = to_vertex_form(a, b, c)
    kind = "minimum" if a > 0 else "maximum"
    print(f"  vertex form: {v.a:g}(x - {v.h:g})^2 + {v.k:g}  ({kind} at ({v.h:g}, {v.k:g}))")
    print(f"  round-trip check: {from_vertex_form(v)}")
    print()


def main() -> None:
    describe(1.0, -5.0, 6.0)    # factors as (x-2)(x-3)
    describe(1.0, -2.0, 1.0)    # perfect square
    describe(2.0, 0.0, 3.0)     # never crosses the axis

    # Why the quadratic formula is computed the careful way: with
    # b = 1e8 the textbook (-b + sqrt(disc))/(2a) cancels to exactly 0
    # for the small root.  The stable form keeps full precision.
    print("stress case y = x^2 + 1e8x + 1")
    roots = quadratic_roots(1.0, 1e8, 1.0)
    print(f"  small root: {roots.roots[1]:.17g}  (true value is about -1e-08)")
    print(f"  large root: {roots.roots[0]:.17g}")


if __name__ == "__main__":
    main()
