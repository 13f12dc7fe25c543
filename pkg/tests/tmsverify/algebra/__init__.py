"""Polynomial arithmetic tests."""
