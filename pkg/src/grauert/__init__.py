"""Maximal Grauert domains of noncompact Riemannian symmetric spaces.

Exact computation of restricted root systems and the invariant domain
omega = {H : |alpha(H)| < pi/2 for all roots alpha}, rigidity classification
of the maximal domains, adapted-complex-structure block matrices along
geodesics, and numeric plurisubharmonicity certificates, with a matrix-level
oracle cross-checking the symbolic data.
"""

__version__ = "0.1.0"
