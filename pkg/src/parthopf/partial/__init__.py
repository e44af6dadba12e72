"""Partial actions and partial coactions of Hopf algebras."""
from .core import *  # noqa: F401,F403
from .core import __doc__ as _core_doc  # noqa: F401
