"""
List-source codes over finite fields with tunable secrecy.
"""

__version__ = '1.0.0'
