# Copyright (c) SI-Analytics. All rights reserved.
from .abelian_oracle import AbelianOracle
from .asymptotic_sum import AsymptoticSumScenario
from .compose_kernels import ComposeKernels
from .decompose_reconstruct import DecomposeReconstruct
from .fj_lemma import FrazierJawerthLemma
from .group_validate import GroupValidate
from .psido_apply import PsiDOApply

__all__ = [
    'AbelianOracle', 'AsymptoticSumScenario', 'ComposeKernels',
    'DecomposeReconstruct', 'FrazierJawerthLemma', 'GroupValidate',
    'PsiDOApply'
]
