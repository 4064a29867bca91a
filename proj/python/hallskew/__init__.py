from ._hallskew import *  # noqa: F401,F403
from ._hallskew import __doc__  # noqa: F401
