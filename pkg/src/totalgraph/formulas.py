"""Closed-form genus values and bounds."""

from __future__ import annotations

import math
from fractions import Fraction

from .graph import Graph, min_degree


def genus_complete(n: int) -> int:
    """Genus of K_n: ceil((n-3)(n-4)/12) for n >= 3, and 0 below."""
    if n <= 2:
        return 0
    return -((-(n - 3) * (n - 4)) // 12)


def genus_complete_bipartite(m: int, n: int) -> int:
    """Genus of K_{m,n}: ceil((m-2)(n-2)/4) for m, n >= 2, and 0 when a side has one vertex."""
    if m <= 1 or n <= 1:
        return 0
    return -((-(m - 2) * (n - 2)) // 4)


def cartesian_product_lower_bound(g1: Graph, g2: Graph, genus1: int, genus2: int) -> int:
    """``max(p1*genus2 + genus1, p2*genus1 + genus2)`` with ``p_i`` the vertex counts.

    Taken from the literature as a trusted bound on the genus of ``g1 x g2``;
    monotone in both genera, so lower bounds may be passed in.
    """
    return max(g1.n * genus2 + genus1, g2.n * genus1 + genus2)


def min_degree_genus_bound(nu: int, genus: int) -> Fraction:
    """Upper bound ``6 + (12 genus - 12) / nu`` on the minimum degree of a genus-``genus`` graph."""
    if nu < 3 or genus < 0:
        raise ValueError("requires nu >= 3 and genus >= 0")
    return 6 + Fraction(12 * genus - 12, nu)


def min_degree_excludes(g: Graph, genus: int) -> bool:
    """True when the minimum degree of ``g`` is too large for an embedding of genus ``genus``.

    This rules out genus ``genus`` itself; for connected graphs the bound is
    monotone in the genus, so it also rules out every smaller genus.
    """
    if g.n < 3:
        return False
    return min_degree(g) > min_degree_genus_bound(g.n, genus)


def euler_edge_bound(nu: int, edges: int) -> int:
    """Genus lower bound ``ceil((E - 3V + 6) / 6)`` for connected simple graphs with V >= 3."""
    return max(0, math.ceil((edges - 3 * nu + 6) / 6))
