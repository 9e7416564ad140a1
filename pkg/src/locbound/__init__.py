"""Exact local boundedness of real rational functions."""
