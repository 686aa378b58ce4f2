"""Infrastructure components for transmat."""
