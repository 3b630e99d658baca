"""Domain value types and database models."""
