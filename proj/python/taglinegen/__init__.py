"""Expertise tagline generation for social-media experts.

Thin wrapper over the compiled extension: occupation-pattern extraction,
link triangulation against a knowledge-base snapshot, user classification,
tf-idf based selection, and the study evaluation metrics.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
