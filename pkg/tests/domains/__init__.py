"""Tests for coefficient domains."""
