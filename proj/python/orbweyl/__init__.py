"""Exact computations with nilpotent Lie algebras and superalgebras.

Coordinates are exact rationals throughout: pass ints, strings like "2/3",
or fractions.Fraction; results come back as Fraction. Functionals and
vectors are either full-length lists or sparse {index: value} dicts.
"""

from ._core import (
    Algebra,
    act,
    algebra_from_json,
    build_gl_plus,
    build_n,
    build_super_heisenberg,
    classify_lambda,
    classify_quotient,
    coadjoint_act,
    darboux,
    eigenspace,
    graded_polarisation_rows,
    gram,
    induce,
    is_polarisation,
    orbit_dim,
    orbit_sample,
    radical_rows,
    s_bound,
    s_table,
    same_orbit,
    scalar_acting_rows,
    slice_verdict,
    vergne_rows,
    weight,
    weight_range_audit,
    weyl_pairs,
)

__all__ = [
    "Algebra",
    "act",
    "algebra_from_json",
    "build_gl_plus",
    "build_n",
    "build_super_heisenberg",
    "builtin",
    "classify_lambda",
    "classify_quotient",
    "coadjoint_act",
    "darboux",
    "eigenspace",
    "graded_polarisation_rows",
    "gram",
    "induce",
    "is_polarisation",
    "orbit_dim",
    "orbit_sample",
    "radical_rows",
    "s_bound",
    "s_table",
    "same_orbit",
    "scalar_acting_rows",
    "slice_verdict",
    "vergne_rows",
    "weight",
    "weight_range_audit",
    "weyl_pairs",
]


def builtin(token):
    """Build a shipped family from its token: "n_m:4", "glmn:3,2", or
    "super_heisenberg"."""
    if token == "super_heisenberg":
        return build_super_heisenberg()
    if token.startswith("n_m:"):
        return build_n(int(token[4:]))
    if token.startswith("glmn:"):
        m, n = token[5:].split(",")
        return build_gl_plus(int(m), int(n))
    raise ValueError(f"unknown builtin token: {token}")
