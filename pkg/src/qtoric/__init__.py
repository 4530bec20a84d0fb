"""Exact toric geometry applied to multipartite quantum states.

Cones, polytopes, fans, Hilbert bases, and binomial toric ideals in exact
integer/rational arithmetic, together with the Segre minor ideal,
separability testing, and the minor-norm concurrence of pure states.
"""

from .geometry import (Cone, Face, Fan, Polytope, dual_cone, faces,
                       fan_from_maximal, is_simplicial, is_strongly_convex,
                       make_fan, normal_fan, polar, polytope_hull, pos_hull,
                       validate_fan)
from .monoid import (LaurentMonomial, MonoidGenerators, hilbert_basis,
                     monoid_contains, monoid_generators)
from .qubit import (Chart, ChartAtlas, ParameterizationMap, Subvariety,
                    chart_atlas, invariant_subvarieties, multiqubit_fan,
                    multiqubit_polytope, parameterization,
                    parameterization_image, projective_space_fan,
                    verify_parameterization)
from .rationals import ComplexRational
from .segre import (MinorSpec, PublishedGenerator, ProductState, PureState,
                    SeparabilityResult, concurrence, is_separable,
                    minor_value, segre_map, segre_minors,
                    three_qubit_generators)
from .toric_ideal import (Binomial, BinomialIdeal, MonomialMap,
                          evaluate_binomial, homogenize, kernel_lattice,
                          projective_relations, toric_ideal_binomials)

__version__ = "0.1.0"

__all__ = [
    "Binomial", "BinomialIdeal", "Chart", "ChartAtlas", "ComplexRational",
    "Cone", "Face", "Fan", "LaurentMonomial", "MinorSpec", "MonoidGenerators",
    "MonomialMap", "PublishedGenerator", "ParameterizationMap", "Polytope",
    "ProductState", "PureState", "SeparabilityResult", "Subvariety",
    "chart_atlas", "concurrence", "dual_cone", "evaluate_binomial", "faces",
    "fan_from_maximal", "hilbert_basis", "homogenize",
    "invariant_subvarieties", "is_separable", "is_simplicial",
    "is_strongly_convex", "kernel_lattice", "make_fan", "minor_value",
    "monoid_contains", "monoid_generators", "multiqubit_fan",
    "multiqubit_polytope", "normal_fan", "parameterization",
    "parameterization_image", "polar", "polytope_hull", "pos_hull",
    "projective_relations", "projective_space_fan", "segre_map",
    "segre_minors", "three_qubit_generators", "toric_ideal_binomials",
    "validate_fan", "verify_parameterization",
]
