"""
Tests of parahorics package
"""
