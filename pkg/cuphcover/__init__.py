"""Low-load cuph covers and partitions of graphs and d-uniform hypergraphs."""

__version__ = "1.0.0"
