# version of the cancellative_bounds package, should match with setup.py
__version__ = "1.0.0"
