# Copyright (c) SI-Analytics. All rights reserved.
from .context import ContextManager
from .rewriters import REWRITERS, build_rewriter

__all__ = ['ContextManager', 'REWRITERS', 'build_rewriter']
