"""Core infrastructure: error hierarchy and memo cache."""
