# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from .metric import validate_metric, metric_transform, cycle_metric, random_ultrametric
from .simplex import complete_refine, gamma_p
from .negtype import has_negative_type, has_strict_negative_type, generalized_roundness, equality_witnesses
from .lp import is_virtually_degenerate, vd_kernel, strict_p_negtype_lp
from .hilbert import gamma2_identity, classify_2_polygonal, affine_dependence, strict_2_negtype
