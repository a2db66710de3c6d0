"""
CoinvKit Core Modules

This package contains the core functionality of CoinvKit including:
- Colored words, ordered set partitions and faces with their statistics
- Monomial algebra in the x and Stanley-Reisner y presentations
- Garsia-Stanton bases, the rewrite engine and the ideal oracle
- Symmetric functions and characters
- CLI and configuration
"""

__version__ = "0.1.0"
__all__ = [
    'combinatorics',
    'monomials',
    'gs_basis',
    'rewrite',
    'oracle',
    'symmetric',
    'verify',
    'env',
]
