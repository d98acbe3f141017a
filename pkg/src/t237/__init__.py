"""Exact computations for stable surfaces with p_g = 1 of minimal volume and
the T_{2,3,7}-polarized K3 surfaces behind them."""

__version__ = "0.1.0"
