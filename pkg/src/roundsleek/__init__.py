"""Roundness and sleekness of metric spaces, decided exactly where possible and searched otherwise."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DomainMismatch,
    EmptyRegion,
    InvalidParameter,
    InvalidQuery,
    MissingDiameter,
    NotLinear,
    RoundSleekError,
    SpaceDefinitionError,
    UnknownName,
    UnknownTransform,
    UnsupportedDimension,
)
from .numbers import BoundedReal, Cmp, compare  # noqa: E402
from .intervals import Interval, IntervalUnion  # noqa: E402
from .space import (  # noqa: E402
    DiscreteSpace,
    EuclideanSpace,
    IntervalSpace,
    MetricSpace,
    ToleranceConfig,
    eval_distance,
    verify_metric_axioms,
)
from .constructions import (  # noqa: E402
    bounded_transform,
    euclidean_product,
    monotone_transform,
    product_metric_D,
    subspace,
    truncate_transform,
)
from .topology import BallKind, BallQuery, ball_member, closure_contains, exterior_limit_point  # noqa: E402
from .checkers import (  # noqa: E402
    CheckVerdict,
    Verdict,
    WitnessKind,
    WitnessRecord,
    check_convexity,
    check_round,
    check_sleek,
    check_strict_ball_convexity,
    check_strict_convexity,
    check_union_sleekness,
    decide_round_interval_union,
    decide_sleek_interval_union,
    replay_witness,
)
from .oracle import grid_oracle  # noqa: E402
from .gallery import gallery_space, productD_ball_oracle, xprime_ball_oracle  # noqa: E402
