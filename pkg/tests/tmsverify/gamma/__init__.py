"""Group and group-sum tests."""
