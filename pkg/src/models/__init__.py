"""
Shared run-configuration models.
"""
