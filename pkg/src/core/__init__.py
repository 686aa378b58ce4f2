"""Core domain logic and business rules."""
