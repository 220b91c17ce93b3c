"""Exact local closures and Ore localizations over commutative and PBW algebras."""

from .errors import *  # noqa: F401,F403
from .orderings import *  # noqa: F401,F403
from .poly import *  # noqa: F401,F403
from .module import *  # noqa: F401,F403
from .groebner import *  # noqa: F401,F403
from .pbw import *  # noqa: F401,F403
from .intersection import *  # noqa: F401,F403
from .closure import *  # noqa: F401,F403
from .central import *  # noqa: F401,F403
from .fractions import *  # noqa: F401,F403
from .weyl import *  # noqa: F401,F403

__version__ = "0.1.0"
