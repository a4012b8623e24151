"""Exception and warning types shared across the package."""


class ValidationError(ValueError):
    """Input data violates a contract (bad table, bad subset, bad dataset)."""


class ConfigError(ValueError):
    """A configuration value is out of range or unresolvable."""


class ModelTableWarning(UserWarning):
    """Non-fatal irregularity in a model table (missing subsets, odd scores)."""


class DatasetWarning(UserWarning):
    """Non-fatal irregularity while ingesting a dataset (rejected rows)."""
