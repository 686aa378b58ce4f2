"""Presentation layer - the transmat command line."""
