# Copyright (c) SI-Analytics. All rights reserved.
from .calculus import *  # noqa F403
from .core import *  # noqa F403
from .experiments import *  # noqa F403
from .grid import *  # noqa F403
from .groups import *  # noqa F403
from .multipliers import *  # noqa F403
from .utils import *  # noqa F403
from .version import __version__, version_info

__all__ = ['__version__', 'version_info']
