# Copyright (c) SI-Analytics. All rights reserved.
from .base import BaseRewriter
from .builder import REWRITERS, build_rewriter
from .resolve import BuildGrid, ResolveGroup, ResolveMultipliers, SeedRandom

__all__ = [
    'BaseRewriter', 'REWRITERS', 'build_rewriter', 'BuildGrid',
    'ResolveGroup', 'ResolveMultipliers', 'SeedRandom'
]
