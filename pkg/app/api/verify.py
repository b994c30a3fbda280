from fastapi import APIRouter, HTTPException, status

from app.config import settings
from app.schemas.verify import VerifyRequest, VerifyResponse
from app.services.verify import CHECKS, run_suite

router = APIRouter()


@router.post(
    "",
    response_model=VerifyResponse,
    summary="Run the randomized identity checks",
)
def verify(body: VerifyRequest):
    """Failures are reported in the body; the request itself succeeds."""
    unknown = [name for name in body.checks or [] if name not in CHECKS]
    if unknown:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"Unknown checks: {', '.join(unknown)}",
        )
    trials = body.trials if body.trials is not None else settings.VERIFY_TRIALS
    if trials > settings.API_MAX_TRIALS:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"At most {settings.API_MAX_TRIALS} trials per check",
        )
    max_strands = body.max_strands if body.max_strands is not None else settings.VERIFY_MAX_STRANDS
    if max_strands > settings.API_MAX_STRANDS:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"max_strands is limited to {settings.API_MAX_STRANDS}",
        )
    max_length = body.max_length if body.max_length is not None else settings.VERIFY_MAX_LENGTH
    if max_length > settings.API_MAX_WORD_LENGTH:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"max_length is limited to {settings.API_MAX_WORD_LENGTH}",
        )
    # a braid on n strands never carries more than n colours
    max_colors = body.max_colors if body.max_colors is not None else settings.VERIFY_MAX_COLORS
    if max_colors > settings.API_MAX_STRANDS:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"max_colors is limited to {settings.API_MAX_STRANDS}",
        )

    reports = run_suite(
        checks=body.checks,
        trials=trials,
        max_strands=max_strands,
        max_length=max_length,
        seed=body.seed,
        max_colors=max_colors,
    )
    return VerifyResponse(
        passed=all(report.passed for report in reports),
        reports=[report.to_dict() for report in reports],
    )
