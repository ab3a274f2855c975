from .laurent import QLaurent, Scalar, TQLaurent, as_rat
from .series import LSeries, invert_q, series_div, series_exp, series_log, series_mul, substitute_scale
