"""Width, Cheeger constant and related inequalities for planar convex polygons."""

from .asymmetry import asymmetry, best_translation, pose_distance
from .cheeger import (
    WH_MAX,
    CheegerResult,
    ShapeScalars,
    area_profile,
    cheeger,
    cheeger_constant,
    cheeger_radius,
    cheeger_scalars,
    profile_dominates,
    wh_exceeds,
    width_cheeger_product,
)
from .errors import DegenerateInput, GeometryError, NegativeOffset, OffsetBeyondInradius, ParamOutOfRange
from .geometry import (
    ConvexPolygon,
    Direction,
    EquilateralPose,
    HalfPlane,
    RoundedPolygon,
    area,
    canonicalize,
    diameter,
    directional_width,
    hausdorff,
    inner_parallel,
    inradius,
    inradius_center,
    intersect_halfplanes,
    minimal_width,
    minkowski_disk,
    perimeter,
    support,
    width,
)
from .search import SearchConfig, SearchResult, maximize_wh, minimize_wh_trace
from .shapes import (
    equilateral,
    family_Reps,
    family_T0,
    family_Teps,
    make_equilateral,
    random_convex,
    rect_RL,
    rectangle,
    regular_ngon,
    reuleaux_polygon,
)
from .verify import (
    CorpusReport,
    ShapeReport,
    StabilityParams,
    SweepRecord,
    check_area_comparison,
    check_ftouhi,
    check_lower,
    check_main,
    check_pal,
    check_width_lemma,
    deficit,
    shape_report,
    stability_check,
    stability_constant,
    sweep_rectangles,
    sweep_sharpness,
    verify_corpus,
    verify_shapes,
)

__version__ = "0.1.0"
