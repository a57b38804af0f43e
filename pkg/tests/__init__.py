"""
Test suite for the Legendre ODE toolkit
"""
