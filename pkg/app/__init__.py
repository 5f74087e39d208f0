"""Artin patterns of finite 3-groups and 3-class tower identification."""
__version__ = "0.4.0"
