"""Bundled .ffc files; load them through :mod:`flowcat.datasets`."""
