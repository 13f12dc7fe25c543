"""Cohomology model tests."""
