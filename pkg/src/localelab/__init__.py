"""Workbench for finite pointfree topology.

Frames (finite distributive lattices), their sublocales and assemblies,
the covered-prime spectrum, finite spaces, and a symbolic infinite chain
exhibiting the phenomena that finite frames cannot.
"""

__version__ = "0.1.0"
