"""Check tests."""
