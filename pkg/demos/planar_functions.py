"""Planar functions from the presemifield products, plus the three sporadic examples."""
import time

import numpy as np

from semifields import build_field, is_do_polynomial, is_planar, polarize, square_map
from semifields.constructions import DiamondSpec, TwoParamSpec
from semifields.fn_analysis import diamond_planar_fn, sporadic_planar, two_param_planar_fn


def check(name, f):
    t0 = time.perf_counter()
    planar = is_planar(f)
    print(f"{name:<28} planar={planar!s:<5} DO={is_do_polynomial(f)!s:<5} "
          f"({time.perf_counter() - t0:.2f}s)")


def main():
    F = build_field(3, 3)
    base = TwoParamSpec(F, 1, 0)
    check("(x^4 + 2y^4, xy)", two_param_planar_fn(base))
    check("(x^4 + 2(y^4)^3, xy)", two_param_planar_fn(TwoParamSpec(F, 1, 1)))
    for c in (0, 1, 2):
        D = DiamondSpec(base, c)
        check(f"diamond c={c} (shift non-square: {D.non_square_shift})", diamond_planar_fn(D))
    for name in ("weng1", "weng2", "weng3"):
        check(name, sporadic_planar(name))

    # a commutative product is recovered from its square map
    for P in (base, DiamondSpec(base, 1)):
        same = np.array_equal(polarize(square_map(P)).table(), P.table())
        print(f"polarize(square_map({P.name})) == {P.name}: {same}")


if __name__ == "__main__":
    main()
