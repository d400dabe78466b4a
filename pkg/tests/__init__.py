"""Tests for the ncres library and CLI."""
