"""Total graphs of finite commutative rings, graph genus, and certificates."""

__version__ = "0.1.0"
