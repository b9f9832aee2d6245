"""
PC-family causal structure learning: PC, CPC, PC-Stable and PC-Max.
"""

__version__ = "0.1.0"
