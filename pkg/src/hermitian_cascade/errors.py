class ConfigurationError(ValueError):
    """Unsupported root system, catalog entry or node mapping."""


class ConsistencyError(AssertionError):
    """An internal invariant failed; indicates a broken pairing or table."""


class CapacityError(RuntimeError):
    """A brute-force enumeration guard was exceeded."""
