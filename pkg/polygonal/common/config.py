# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

import os.path


DEFAULT_PATH = os.path.join(os.getcwd(), "fixtures")

# Absolute tolerances
EPS_TRIANGLE = 1e-9
EPS_WEIGHT = 1e-9
EPS_COORD = 1e-9

# Eigenvalue tolerance is EPS_EIG_SCALE * max(1, largest |eigenvalue| of the projected form)
EPS_EIG_SCALE = 1e-8

TOL_P = 1e-6
P_MAX = 16.0

# Singular values below RANK_RTOL * largest singular value count as zero
RANK_RTOL = 1e-10

EPS_CLASSIFY = 1e-6

WORKER_COUNT = 4
