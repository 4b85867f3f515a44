"""Build the two-parameter presemifields over F_27, lift them to semifields and compare nuclei."""
import numpy as np

from semifields import build_field, check_axioms, distinguish, invariant_report, nucleus_report
from semifields.constructions import SemifieldProduct, TwoParamSpec, join


def main():
    F = build_field(3, 3)
    print(f"F_27 with modulus {list(F.modulus)}, generator {F.g}")

    reports = {}
    for r in (0, 1):
        P = TwoParamSpec(F, k=1, r=r)
        ax = check_axioms(P)
        print(f"\nk=1 r={r} alpha={P.alpha}: distributive={ax.distributive} "
              f"commutative={ax.commutative} zero divisors={not ax.no_zero_divisors} unit={ax.unit}")

        # (1,0) gives the L-map semifield; its unit is (1,0)*(1,0) = (2,0)
        S = SemifieldProduct(P, join(F, 1, 0))
        z = np.arange(S.size)
        print(f"  lifted unit {S.unit} acts trivially: {np.array_equal(S(S.unit, z), z)}")

        nr = nucleus_report(P)
        print(f"  nuclei {nr.sizes}, predicted middle {nr.predicted_middle}, "
              f"nucleus {nr.predicted_nucleus}")
        reports[r] = invariant_report(P)

    v = distinguish(reports[0], reports[1])
    print(f"\nr=0 vs r=1: {v.kind} ({v.witness})")


if __name__ == "__main__":
    main()
