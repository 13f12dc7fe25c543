"""Sweep planning and concurrent execution."""
