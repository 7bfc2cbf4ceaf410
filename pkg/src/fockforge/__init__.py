"""Exact fermionic and bosonic Fock spaces, affine gl(r) actions and
fixed-point combinatorics of framed sheaf moduli."""

__version__ = "0.1.0"
