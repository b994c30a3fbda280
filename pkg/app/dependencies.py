import logging

from fastapi import HTTPException, status

from app.config import settings
from app.schemas.potential import BraidRequest
from app.services.braid import BraidError, ColoredBraid, parse_braid

logger = logging.getLogger(__name__)


def get_colored_braid(body: BraidRequest) -> ColoredBraid:
    """Parse the request braid and enforce the service size limits."""
    try:
        braid = parse_braid(body.braid, body.colors)
    except BraidError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))

    if braid.strands > settings.API_MAX_STRANDS:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"Braid has {braid.strands} strands, the limit is {settings.API_MAX_STRANDS}",
        )
    if len(braid.word) > settings.API_MAX_WORD_LENGTH:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"Braid word has {len(braid.word)} letters, the limit is {settings.API_MAX_WORD_LENGTH}",
        )
    if not braid.is_closed_colorable():
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"Braid is not closed-colourable: bottom ({braid.bottom.to_text()}) != top ({braid.top.to_text()})",
        )
    return braid
