"""Tests for transmat."""
