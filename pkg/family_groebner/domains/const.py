"""Constants for domains module."""

from __future__ import annotations

import logging

LOGGER = logging.getLogger(__package__)
