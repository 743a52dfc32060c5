"""abaplus: assumption-based argumentation with preferences."""

__version__ = '0.3.0'
