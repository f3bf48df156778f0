"""Exception types shared across the package.

The CLI maps these onto exit codes: bad input or unmet preconditions exit
with 2, a theorem violation (a check that is mathematically guaranteed to
pass reported a failure, signalling a bug) exits with 1, I/O problems
exit with 3.
"""


class InputError(ValueError):
    """Invalid argument or unmet operation precondition."""


class FormatError(InputError):
    """A graph or partition file/string could not be parsed."""


class TheoremViolation(RuntimeError):
    """A verified mathematical identity failed on concrete data."""
