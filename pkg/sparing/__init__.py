"""sparing-number: sparing numbers and weak integer additive set-labelings of graphs."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("sparing-number")
except PackageNotFoundError:
    __version__ = "0.0.0"
