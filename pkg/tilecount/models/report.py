# Standard Library Imports

# Third Party Imports
from pydantic import BaseModel, Field


# Local App Imports

Value = int | str | bool | list[int] | None


class InstanceResult(BaseModel):
    """
    One checked instance of a suite. equal is None when the instance was skipped.
    """

    params: dict[str, Value]
    methods: list[str]
    values: dict[str, Value]
    equal: bool | None
    experimental: bool = False
    elapsed: float = 0.0
    note: str = ""

    def sort_key(self) -> tuple:
        def rank(value: Value) -> tuple:
            return (0, value, "") if isinstance(value, int) else (1, 0, str(value))

        params = tuple(sorted((key, rank(value)) for key, value in self.params.items()))
        return params, tuple(self.methods)


class ReportSummary(BaseModel):
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    experimental: int = 0


class VerificationReport(BaseModel):
    """
    Result of one verification suite, serialised as JSON with a top level "schema" version.
    """

    schema_version: int = Field(default=1, serialization_alias="schema")
    suite: str
    grid: dict[str, Value] = {}
    instances: list[InstanceResult] = []
    summary: ReportSummary = ReportSummary()
    findings: list[str] = []

    def failures(self, strict: bool = False) -> list[InstanceResult]:
        return [
            i
            for i in self.instances
            if i.equal is False and (strict or not i.experimental)
        ]

    def passes(self, strict: bool = False) -> bool:
        return not self.failures(strict)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)
