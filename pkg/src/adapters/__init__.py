"""Adapters between transmat values and external file formats."""
