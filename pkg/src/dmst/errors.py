"""Exceptions shared across the package."""


class Infeasible(Exception):
    """The graph admits no arborescence rooted at the requested root."""


class ParseError(ValueError):
    """Malformed instance text. The message names the offending line."""


class SolveTimeout(Exception):
    """A solver ran past its cooperative deadline."""
