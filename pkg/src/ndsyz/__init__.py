"""Gins, Betti tables, partial elimination ideals and h-vectors over GF(p)."""
from .polyring import DEFAULT_PRIME, BlockOrder, Ideal, Order, Polynomial, RingContext

__all__ = ["DEFAULT_PRIME", "BlockOrder", "Ideal", "Order", "Polynomial", "RingContext"]
