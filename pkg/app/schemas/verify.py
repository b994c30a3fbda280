from pydantic import BaseModel, Field


class VerifyRequest(BaseModel):
    checks: list[str] | None = None
    trials: int | None = Field(default=None, ge=1)
    max_strands: int | None = Field(default=None, ge=2)
    max_length: int | None = Field(default=None, ge=0)
    max_colors: int | None = Field(default=None, ge=1)
    seed: int | None = None

    model_config = {
        "json_schema_extra": {
            "examples": [
                {"checks": ["markov", "routes"], "trials": 20, "max_strands": 4, "max_length": 8, "seed": 7}
            ]
        }
    }


class CheckFailureResponse(BaseModel):
    seed: int
    relation: str
    braids: list[str]
    expected: str
    actual: str


class CheckReportResponse(BaseModel):
    name: str
    trials: int
    passed: bool
    failures: list[CheckFailureResponse]


class VerifyResponse(BaseModel):
    passed: bool
    reports: list[CheckReportResponse]
