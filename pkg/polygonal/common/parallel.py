# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from concurrent.futures import ThreadPoolExecutor

from .config import WORKER_COUNT
from .logs import logger


class BackgroundRunner:
    @staticmethod
    def default_map(callback, items):
        # Not actually running anything in the background, just pretending to
        return [callback(item) for item in items]

    def __init__(self, size=WORKER_COUNT):
        self.executor = None
        if size is None:
            self.map = self.default_map
        else:
            self.executor = ThreadPoolExecutor(max_workers=size)

    def map(self, callback, items):
        items = list(items)
        logger.debug("Dispatching %d jobs to %d workers", len(items), self.executor._max_workers)
        # Executor.map yields in submission order
        return list(self.executor.map(callback, items))

    def close(self):
        if self.executor is not None:
            self.executor.shutdown(wait=True)
