from app.schemas.potential import AxisResponse, BatchTask, BraidRequest, PotentialResponse
from app.schemas.verify import VerifyRequest, VerifyResponse

__all__ = [
    "AxisResponse",
    "BatchTask",
    "BraidRequest",
    "PotentialResponse",
    "VerifyRequest",
    "VerifyResponse",
]
