"""Exact symbolic engine for the h-deformed Grassmann supergroup Gr(1|1).

Everything is re-exported from the compiled extension; see the project README
for the preset identifiers, matrix names, and check identifiers.
"""

from ._grh import *  # noqa: F401,F403
