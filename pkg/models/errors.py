class CompositionError(ValueError):
    """Base class for every input error raised by the toolkit"""


class DomainMismatchError(CompositionError):
    """Algorithm needs an interval domain but got an explicit set"""


class DivergentCountError(CompositionError):
    """Count over all k is infinite because 0 is an allowed part"""


class InvalidCompositionError(CompositionError):
    """Tuple is not a member of the composition set it claims to be in"""


class ShiftError(CompositionError):
    """Shift bijection undefined (n < k*a or non-interval domain)"""


class OracleTooLargeError(CompositionError):
    """Brute-force enumeration would exceed the product-size guard"""


class BenchError(CompositionError):
    """Benchmark configuration or result set is unusable"""


class QueryError(CompositionError):
    """Invalid combination of request parameters / CLI flags"""


class BenchBusyError(BenchError):
    """A benchmark is already running in this process"""
