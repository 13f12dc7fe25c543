"""Orchestration tests."""
