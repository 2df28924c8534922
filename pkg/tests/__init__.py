"""Tests for SPI Agent."""
