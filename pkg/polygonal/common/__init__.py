# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from .storage import Storage
from .parallel import BackgroundRunner
from .models import FiniteMetricSpace, LpPointSet, SignedSimplex, Vertex, VectorFamilies
