"""l2 operator norms of weighted mean matrices."""

import json as _json

from . import _core
from ._core import (  # noqa: F401
    ConditionViolated,
    DenseSizeExceeded,
    InvalidWeight,
    Method,
    TridiagonalSym,
    WeightSequence,
    apply_B,
    apply_Bt,
    build_certificate,
    build_gram_inverse,
    check_vertex_lemma,
    dense_mean,
    eigen_extreme,
    ftt_eigenvalues_closed_form,
    ftt_matrix,
    make_weights,
    power_norm,
    quadratic_form,
    ratio_profile,
    reduction_coefficient,
    reduction_constant,
    sturm_count,
    weights_from_values,
)

__version__ = _core.__version__


def certify(weights, l=None, trials=1000, seed=0):
    """Certificate report as a dict with the CLI's JSON keys."""
    return _json.loads(_core.certify_json(weights, l, trials, seed))


def verify_ftt_inequalities(n, a, b, trials=1000, seed=0):
    return _json.loads(_core.verify_ftt_inequalities(n, a, b, trials, seed))


def sine_certificate_check(a, b, n, sign="plus"):
    return _json.loads(_core.sine_certificate_check(a, b, n, sign))
