# Copyright (c) SI-Analytics. All rights reserved.
from .archive import load_decomposition, save_decomposition
from .builder import MULTIPLIERS, build_multiplier
from .decomposition import (BoundednessReport, DyadicDecomposition,
                            decompose, reconstruct)
from .kernels import kernel_of, multiplier_of
from .littlewood_paley import LittlewoodPaleySystem, build_lp_system
from .multiplier import (Constant, Derivative, DyadicHomogeneous, Gaussian,
                         JapaneseBracket, LinearCombination, Multiplier,
                         Product, RieszType, SmoothedNormPower,
                         bracket_order, symbol_order)
from .order import OrderEstimate, annulus_points, estimate_order
from .seminorms import (HormanderReport, MultiplierSeminorm, growth_constant,
                        hormander_seminorm, multiplier_seminorm,
                        order_convergence)
from .tails import TailReport, tail_smoothness_check

__all__ = [
    'load_decomposition', 'save_decomposition', 'MULTIPLIERS',
    'build_multiplier', 'BoundednessReport', 'DyadicDecomposition',
    'decompose', 'reconstruct', 'kernel_of', 'multiplier_of',
    'LittlewoodPaleySystem', 'build_lp_system', 'Constant', 'Derivative',
    'DyadicHomogeneous', 'Gaussian', 'JapaneseBracket', 'LinearCombination',
    'Multiplier', 'Product', 'RieszType', 'SmoothedNormPower',
    'bracket_order', 'symbol_order',
    'OrderEstimate', 'annulus_points', 'estimate_order', 'HormanderReport',
    'MultiplierSeminorm', 'growth_constant', 'hormander_seminorm',
    'multiplier_seminorm', 'order_convergence', 'TailReport',
    'tail_smoothness_check'
]
