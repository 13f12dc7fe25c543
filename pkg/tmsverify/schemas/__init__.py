"""Pydantic models shared across modules."""
