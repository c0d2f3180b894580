"""
Tests Package

Contains unit and integration tests for the bisurf surface analyses.
"""
