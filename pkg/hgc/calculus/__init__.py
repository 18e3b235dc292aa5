# Copyright (c) SI-Analytics. All rights reserved.
from .asymptotic import (AsymptoticSum, RemainderCertificate, asymptotic_sum,
                         select_scales)
from .bump import (BumpProfile, FrazierJawerthReport, FrazierJawerthResult,
                   balanced_split, frazier_jawerth_ratio,
                   frazier_jawerth_sweep, origin_ratio_exact)
from .composition import (CompositionResult, RescaledPiece, compose_report,
                          convolve_kernels, decay_ratio, rescale_piece)
from .operators import (LeadingTermReport, OperatorMatrix, adjoint,
                        apply_operator, compose, interior_mask,
                        leading_term_check, max_entry_error, operator_matrix,
                        power_norm)
from .symbols import PsiDOSymbol

__all__ = [
    'AsymptoticSum', 'RemainderCertificate', 'asymptotic_sum',
    'select_scales', 'BumpProfile', 'FrazierJawerthReport',
    'FrazierJawerthResult', 'balanced_split', 'frazier_jawerth_ratio',
    'frazier_jawerth_sweep', 'origin_ratio_exact', 'CompositionResult',
    'RescaledPiece', 'compose_report', 'convolve_kernels', 'decay_ratio',
    'rescale_piece',
    'LeadingTermReport', 'OperatorMatrix', 'adjoint', 'apply_operator',
    'compose', 'interior_mask', 'leading_term_check', 'max_entry_error',
    'operator_matrix', 'power_norm', 'PsiDOSymbol'
]
