"""Antenna spec domain types and documents."""
