"""redgrp computes and certifies quantitative invariants of marked groups:
approximate invariant means, compression norms of group-algebra elements,
the spectral radius formula and strong convergence of marked sequences."""

from . import groups

__version__ = '0.3.0'
