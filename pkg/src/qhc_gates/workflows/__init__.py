# -*- coding: utf-8 -*-
"""QHC synthesis workflows"""

from .qhc_synthesis import QhcSynthesisWorkflow, WorkflowResult
