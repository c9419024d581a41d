"""
Root conftest: keeps the repository root importable (config, models, services, utils)
"""
