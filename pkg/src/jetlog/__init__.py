"""
jetlog - jet schemes, motivic measures and KLT/LC thresholds in exact arithmetic.
"""

__version__ = "0.1.0"
