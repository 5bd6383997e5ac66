"""Shared pytest configuration (keeps tests/ importable as plain modules)."""
