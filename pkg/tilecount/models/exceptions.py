class EnvironmentVarNotExists(Exception):
    """
    Raised when an environment variable is not defined in the .env file or the operating system.
    """

    def __init__(self, env_var: str):
        self.env_var = env_var

    def __str__(self):
        return f"Environment variable '{self.env_var}' does not exist."


class ParameterError(Exception):
    """
    Raised when the parameters of a shape, region or formula violate one of its constraints.
    """

    def __init__(self, name: str, constraint: str, value=None):
        self.name = name
        self.constraint = constraint
        self.value = value

    def __str__(self):
        if self.value is None:
            return f"INVALID PARAMETER {self.name}: requires {self.constraint}"
        return f"INVALID PARAMETER {self.name}={self.value}: requires {self.constraint}"


class ShapeError(Exception):
    """
    Raised when an operation is applied to a plane partition whose shape it does not support.
    """

    def __init__(self, operation: str, shape):
        self.operation = operation
        self.shape = shape

    def __str__(self):
        return f"{self.operation.upper()} IS NOT DEFINED FOR SHAPE {self.shape}"


class MatrixStructureError(Exception):
    """
    Raised when a matrix does not have the structure an evaluator needs (square, skew-symmetric, even size).
    """

    def __init__(self, requirement: str, dimension):
        self.requirement = requirement
        self.dimension = dimension

    def __str__(self):
        return f"MATRIX OF DIMENSION {self.dimension} IS NOT {self.requirement.upper()}"


class NonIntegralResult(Exception):
    """
    Raised when a product formula that counts objects does not reduce to a nonnegative integer.
    """

    def __init__(self, context: str, value):
        self.context = context
        self.value = value

    def __str__(self):
        return f"{self.context} EVALUATED TO {self.value}, NOT A NONNEGATIVE INTEGER"


class ResourceBudgetExceeded(Exception):
    """
    Raised when a brute-force computation would exceed a configured budget.
    """

    def __init__(self, budget: str, limit: int, demand: int | None = None):
        self.budget = budget
        self.limit = limit
        self.demand = demand

    def __str__(self):
        if self.demand is None:
            return f"BUDGET {self.budget}={self.limit} EXCEEDED"
        return f"BUDGET {self.budget}={self.limit} EXCEEDED BY DEMAND {self.demand}"


class ProvenanceError(Exception):
    """
    Raised when a bijection is requested for a region that was not built from the matching shape.
    """

    def __init__(self, operation: str, label: str):
        self.operation = operation
        self.label = label

    def __str__(self):
        return f"{self.operation.upper()} HAS NO INTERPRETATION FOR REGION {self.label}"


class SyntaxParseError(Exception):
    """
    Raised when shape, region or range syntax on the command line cannot be parsed.
    """

    def __init__(self, kind: str, text: str, hint: str = ""):
        self.kind = kind
        self.text = text
        self.hint = hint

    def __str__(self):
        message = f"CANNOT PARSE {self.kind.upper()} '{self.text}'"
        return f"{message}: {self.hint}" if self.hint else message


class CacheMismatch(Exception):
    """
    Raised when a cached count disagrees with a fresh recomputation.
    """

    def __init__(self, key: str, cached: int, computed: int):
        self.key = key
        self.cached = cached
        self.computed = computed

    def __str__(self):
        return f"CACHE ENTRY {self.key} HOLDS {self.cached} BUT RECOMPUTATION GAVE {self.computed}"


class IdentityMismatch(Exception):
    """
    Raised when two evaluations of the same closed form disagree.
    """

    def __init__(self, identity: str, first, second):
        self.identity = identity
        self.first = first
        self.second = second

    def __str__(self):
        return f"IDENTITY {self.identity} FAILED: {self.first} != {self.second}"
