"""Doppler-shift physical layer key generation for inter-spacecraft links."""

__version__ = "0.1.0"
