"""Configuration and logging tests."""
