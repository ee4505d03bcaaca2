"""Euclidean ideal classes of real biquadratic fields Q(sqrt(p1), sqrt(q1*q2)).

Thin python layer over the C++ core: exact class numbers of real quadratic
fields, fundamental units, genus-field classification, Kuroda's class number
formula and the Euclidean-ideal-class decision procedure.
"""

from ._core import (
    Decision,
    DecideCertificate,
    GenusVerdict,
    ProgressionWitness,
    QuadFieldData,
    QuadUnit,
    UnitIndexResult,
    class_number,
    class_number_biquad,
    classify,
    conductor_biquad,
    conductor_quad,
    crt,
    decide,
    fundamental_unit,
    hilbert_symbol,
    is_a2_plus_32b2,
    is_power_of_two,
    is_prime,
    jacobi,
    narrow_class_number,
    product_over_places,
    progression_witness,
    quad_field_data,
    reference_table_csv,
    sqrt_mod_prime,
    unit_index,
    unit_residue_symbol,
    verify_reference_table,
)

__all__ = [
    "Decision",
    "DecideCertificate",
    "GenusVerdict",
    "ProgressionWitness",
    "QuadFieldData",
    "QuadUnit",
    "UnitIndexResult",
    "class_number",
    "class_number_biquad",
    "classify",
    "conductor_biquad",
    "conductor_quad",
    "crt",
    "decide",
    "fundamental_unit",
    "hilbert_symbol",
    "is_a2_plus_32b2",
    "is_power_of_two",
    "is_prime",
    "jacobi",
    "narrow_class_number",
    "product_over_places",
    "progression_witness",
    "quad_field_data",
    "reference_table_csv",
    "sqrt_mod_prime",
    "unit_index",
    "unit_residue_symbol",
    "verify_reference_table",
]

__version__ = "1.0.0"
