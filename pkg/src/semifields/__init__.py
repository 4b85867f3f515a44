"""Commutative semifields, planar and APN functions over small finite fields."""
__version__ = "0.1.0"

from .constructions import (AlbertProduct, AxiomReport, BHSpec, DiamondSpec, DicksonSpec,
                            FieldProduct, Product, SemifieldProduct, TableProduct, TwoParamSpec,
                            albert_product, bh_function, bh_pair_product, check_axioms,
                            diamond_product, dickson_spec, L_inverse, L_map,
                            semifield_from_presemifield, two_param_product)
from .fn_analysis import (VecFn, alpha_apn_condition, apn_two_param_fn, diamond_planar_fn,
                          diff_spectrum, differential_uniformity, field_fn, is_apn,
                          is_do_polynomial, is_planar, polarize, sporadic_planar, square_map,
                          two_param_planar_fn)
from .gf_core import FieldCtx, build_field, gcd_power_formula, rel_trace
from .invariants import (count_classes, distinguish, enumerate_catalog, exponent_class,
                         gamma_rank, invariant_report)
from .nuclei import (left_nucleus, middle_nucleus, nucleus, nucleus_report, right_nucleus,
                     verify_nucleus_field)

