"""mosk: monotone operator splitting kit.

Resolvent-first monotone operators, a gallery of concrete examples with
exact or root-found resolvents, sampling certifiers for nonexpansiveness
and monotonicity classes, a composition sign calculus, and
Peaceman-Rachford / Douglas-Rachford / forward-backward iterations with
trace diagnostics.
"""

from .core import (
    GraphSample,
    MonotoneOperator,
    NonexpansiveMap,
    as_point,
    from_firmly_nonexpansive,
    from_neg_reflected,
    invert,
    minty_sample,
    reflected_map,
    reflected_resolvent,
    resolvent,
    resolvent_map,
    scale,
    solve_scalar_monotone,
)
from .combine import (
    SignedMap,
    compose,
    convex_combination,
    dr_operator,
    fb_operator,
    negate,
    pr_operator,
    predicted_sign,
)
from .certify import (
    ClassCertificate,
    Modulus,
    ModulusEstimate,
    SamplerConfig,
    SelfDualReport,
    certify_averaged,
    certify_banach_contraction,
    certify_cld,
    certify_firm,
    certify_lipschitz,
    certify_strongly_monotone,
    check_coercive,
    check_growth,
    check_lemma_3_5,
    check_selfdual,
    check_sequential,
    estimate_modulus,
    replay,
    scaled_pair_family,
    tighten_modulus,
)
from .split import (
    FejerReport,
    IterationTrace,
    StoppingRule,
    douglas_rachford,
    fejer_check,
    forward_backward,
    iterate,
    peaceman_rachford,
)
from . import exceptions, gallery

__version__ = "0.1.0"

__all__ = [
    "GraphSample",
    "MonotoneOperator",
    "NonexpansiveMap",
    "as_point",
    "from_firmly_nonexpansive",
    "from_neg_reflected",
    "invert",
    "minty_sample",
    "reflected_map",
    "reflected_resolvent",
    "resolvent",
    "resolvent_map",
    "scale",
    "solve_scalar_monotone",
    "SignedMap",
    "compose",
    "convex_combination",
    "dr_operator",
    "fb_operator",
    "negate",
    "pr_operator",
    "predicted_sign",
    "ClassCertificate",
    "Modulus",
    "ModulusEstimate",
    "SamplerConfig",
    "SelfDualReport",
    "certify_averaged",
    "certify_banach_contraction",
    "certify_cld",
    "certify_firm",
    "certify_lipschitz",
    "certify_strongly_monotone",
    "check_coercive",
    "check_growth",
    "check_lemma_3_5",
    "check_selfdual",
    "check_sequential",
    "estimate_modulus",
    "replay",
    "scaled_pair_family",
    "tighten_modulus",
    "FejerReport",
    "IterationTrace",
    "StoppingRule",
    "douglas_rachford",
    "fejer_check",
    "forward_backward",
    "iterate",
    "peaceman_rachford",
    "exceptions",
    "gallery",
]
