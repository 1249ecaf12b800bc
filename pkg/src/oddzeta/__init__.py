"""oddzeta: Rapidly converging series for odd zeta values, with certified digits."""

__version__ = "0.1.0"
__author__ = "oddzeta contributors"
__license__ = "MIT"
