from ._lue import *  # noqa: F401,F403
from ._lue import __version__  # noqa: F401
