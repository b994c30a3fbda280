from typing import Literal

from pydantic import BaseModel, Field

from app.services.potential import PotentialKind


class BraidRequest(BaseModel):
    braid: str = ""
    colors: str

    model_config = {
        "json_schema_extra": {
            "examples": [
                {"braid": "-1 -1", "colors": "1,2"},
                {"braid": "-1 -1 -2 -2", "colors": "1,2,3"},
            ]
        }
    }


class BatchTask(BraidRequest):
    """One line of batch input."""

    mode: Literal["compute", "axis"] = "compute"


class LaurentTerm(BaseModel):
    coeff: str
    exp: list[int]


class LaurentPolyPayload(BaseModel):
    nvars: int = Field(ge=0)
    terms: list[LaurentTerm]


class ComponentEcho(BaseModel):
    strands: list[int]
    color: int


class BraidEcho(BaseModel):
    word: list[int]
    bottom: list[int]
    top: list[int]
    perm: list[int]
    components: list[ComponentEcho] | None = None


class PotentialResponse(BaseModel):
    components: int
    kind: PotentialKind
    value: LaurentPolyPayload
    denominator: str
    text: str
    latex: str
    braid: BraidEcho


class AxisResponse(BaseModel):
    variables: list[str]
    value: LaurentPolyPayload
    text: str
    latex: str
    braid: BraidEcho
