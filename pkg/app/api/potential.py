from typing import Annotated

from fastapi import APIRouter, Depends, HTTPException, status

from app.dependencies import get_colored_braid
from app.schemas.potential import AxisResponse, PotentialResponse
from app.services.braid import ColoredBraid
from app.services.formatting import axis_names, potential_latex
from app.services.laurent import NotDivisible
from app.services.potential import axis_potential, potential_function

router = APIRouter()


@router.post(
    "",
    response_model=PotentialResponse,
    summary="Conway potential function of a braid closure",
)
def compute_potential(braid: Annotated[ColoredBraid, Depends(get_colored_braid)]):
    """Returns the potential function; knots come back as a numerator over t_k - t_k^-1."""
    try:
        potential = potential_function(braid)
    except NotDivisible:
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Potential function is not a Laurent polynomial; internal convention error",
        )
    return PotentialResponse(
        **potential.to_json(),
        text=potential.to_text(),
        latex=potential_latex(potential),
        braid=braid.to_json(),
    )


@router.post(
    "/axis",
    response_model=AxisResponse,
    summary="Potential function of the closure together with the braid axis",
)
def compute_axis(braid: Annotated[ColoredBraid, Depends(get_colored_braid)]):
    """The last variable, x, belongs to the axis."""
    value = axis_potential(braid)
    names = axis_names(braid.mu)
    return AxisResponse(
        variables=names,
        value=value.to_json(),
        text=value.to_text(names),
        latex=value.to_latex(names),
        braid=braid.to_json(),
    )
