"""Redei and tangent-Chebyshev rational maps over finite fields.

Thin pythonic surface over the C++ core.  Field elements travel as the
same comma-separated little-endian coefficient encodings the CLI uses
("3" in F_5, "1,1" for 1+t in F_4), and points of the projective line are
element encodings or "inf".
"""

from ._redchev import Field, Extension, decode_keyx, selftest

__all__ = ["Field", "Extension", "decode_keyx", "selftest"]
