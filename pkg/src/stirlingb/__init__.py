"""
stirlingb - q-Stirling numbers of type B.

This package provides tools to:
- Compute q-Stirling numbers of both kinds by recursion and by enumeration
- Map signed permutations and set partitions to restricted growth words
- Compute inversion-type statistics, including the Sagan-Swanson statistic
- Verify the product, orthogonality and power-sum identities between them
"""

__version__ = "0.1.0"
