from .certificate import SegmentBox, box_sum_certificate, segment_sum_certificate
from .conjugate import conjugate
from .growth import GrowthReport, convolution_growth
from .minimize import minimize_via_projection
from .penalty import DISTANCES, PenaltyExtension, extend_with_penalty, penalty_distance, penalty_threshold
from .projection import dropped_sublattice, project_fn, project_set, restrict_to_kept
from .quadratic import quadratic_function
from .sums import add_functions, convolve, minkowski_sum
