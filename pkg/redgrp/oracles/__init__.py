"""Concrete marked groups"""

from redgrp.oracles.abelian import AbelianOracle
from redgrp.oracles.dehn import DehnOracle
from redgrp.oracles.finite import FiniteOracle
from redgrp.oracles.free import FreeOracle
from redgrp.oracles.products import (
    DirectProductOracle,
    FreeProductOracle
)

__all__ = [
    'AbelianOracle',
    'DehnOracle',
    'DirectProductOracle',
    'FiniteOracle',
    'FreeOracle',
    'FreeProductOracle',
]
