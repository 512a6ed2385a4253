"""Non-ambiguous trees: enumeration, bijections, formulas and series."""

__version__ = "0.1.0"
