"""
Exact computations with parahoric Bruhat-Tits group data: root data, the
Weyl alcove, parahoric descriptors, local types and the dimension formulas
for moduli of parahoric torsors.
"""
from .info import __version__
