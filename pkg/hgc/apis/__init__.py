# Copyright (c) SI-Analytics. All rights reserved.
from .report import log_report

__all__ = ['log_report']
