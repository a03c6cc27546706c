"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid generator set or curve specification."""


class RangeError(ValueError):
    """An exhaustive (oracle) routine was asked to exceed its hard range guard."""
