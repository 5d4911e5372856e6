# license: MIT
'''main module of the sobolevop package'''

__version__ = '2026.10.19'

__all__ = [
    'CPoly',
    'LinearDiffOp',
    'ClassicalFamily',
    'GeneratingSystem',
    'SobolevSpaceSpec',
    'WeightFactor',
    'BandedPencil',
    'DiffPencil',
    'SobolevopError',
]

from .polycore import CPoly
from .diffop import LinearDiffOp
from .classical import ClassicalFamily
from .systems import GeneratingSystem
from .sobolev import SobolevSpaceSpec, WeightFactor
from .pencil import BandedPencil, DiffPencil
from .errors import SobolevopError
