"""Box-counting dimensions of generalised fractal nests.

Closed-form dimensions and Minkowski contents, resolution-eps nest geometry,
and empirical log-log estimation of the box dimension.
"""
from .basesets import (
    CubeFace, DBeta, EAlpha, FullCircle, Interval, Singleton, UniformCantor,
    base_dimension, cantor_minkowski_contents, cantor_segments, cube_sausage_volume,
    d_beta_angles, e_alpha_content, e_alpha_points, gamma_coeff, phi1,
)
from .boxcount import (
    CounterKind, CountSeries, EstimateReport, epsilon_schedule, grid_count,
    regression_dimension, relative_error, sausage_measure_1d,
)
from .nests import (
    Arc, Kind, NestSpec, Point, Scene, generate_scene, primitive_count, ring_radii,
)
from .split import ResourceLimitError, SplitIndices, split_indices
from .theory import (
    DimensionResult, ParameterRangeError, Regime, SynthesisedParams, bifractal_dimension,
    cantor_nest_dimension, centered_alpha, hypersphere_nest_dimension, nest_dimension,
    normalized_content_ratio, solve_parameters,
)

__version__ = "0.1.0"
