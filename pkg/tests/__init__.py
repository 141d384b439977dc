"""Tests for the stirlingb package."""
