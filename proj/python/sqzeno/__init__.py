"""Two-level atom in a broadband squeezed vacuum bath.

Closed-form and integrated Bloch dynamics, projective and indirect
measurement schemes, survival probabilities and Monte Carlo sampling,
mirroring the `sqzeno` command line tool.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
