"""
Legendre ODE Toolkit
Exact construction of Legendre polynomials and verification of the nonlinear
differential equations satisfied by their generating function
"""

__version__ = "0.1.0"
__license__ = "MIT"
