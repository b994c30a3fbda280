import logging
from contextlib import asynccontextmanager
from urllib.parse import urlparse

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.api import potential, verify
from app.config import OUTPUT_FORMATS, settings

# Configure logging
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL, logging.WARNING),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger("app.startup")


def _is_http_url(value: str) -> bool:
    parsed = urlparse(value)
    return parsed.scheme in {"http", "https"} and bool(parsed.hostname)


def _get_cors_origins(cors_raw: str) -> list[str]:
    return [origin.strip() for origin in cors_raw.split(",") if origin.strip()]


def _validate_runtime_settings() -> None:
    errors = []
    warnings = []

    if settings.POTENTIAL_FORMAT not in OUTPUT_FORMATS:
        errors.append(f"POTENTIAL_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}.")

    if settings.LOG_LEVEL not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
        errors.append(f"LOG_LEVEL '{settings.LOG_LEVEL}' is not a logging level name.")

    limits = {
        "API_MAX_STRANDS": settings.API_MAX_STRANDS,
        "API_MAX_WORD_LENGTH": settings.API_MAX_WORD_LENGTH,
        "API_MAX_TRIALS": settings.API_MAX_TRIALS,
        "VERIFY_TRIALS": settings.VERIFY_TRIALS,
        "BATCH_WORKERS": settings.BATCH_WORKERS,
    }
    for name, value in limits.items():
        if value < 1:
            errors.append(f"{name} must be a positive integer.")

    if settings.VERIFY_MAX_STRANDS < 2:
        errors.append("VERIFY_MAX_STRANDS must be at least 2.")
    elif settings.VERIFY_MAX_STRANDS > 8:
        warnings.append(
            f"VERIFY_MAX_STRANDS={settings.VERIFY_MAX_STRANDS} makes exact determinants slow; 6 is the default."
        )

    if settings.GASSNER_DEBUG_CHECKS:
        warnings.append("GASSNER_DEBUG_CHECKS is on: every inverse generator matrix is re-verified.")

    origins = _get_cors_origins(settings.CORS_ORIGINS.strip())
    if not origins:
        errors.append("CORS_ORIGINS must contain at least one comma-separated origin URL.")
    else:
        invalid_origins = [origin for origin in origins if not _is_http_url(origin)]
        if invalid_origins:
            errors.append(f"CORS_ORIGINS contains invalid URL(s): {', '.join(invalid_origins)}")

    if warnings:
        logger.warning("Startup environment warnings: %s", " | ".join(warnings))

    if errors:
        raise RuntimeError("Startup environment validation failed: " + " | ".join(errors))


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info("Application startup initiated.")
    try:
        _validate_runtime_settings()
    except Exception as exc:
        logger.exception("Settings validation failed: %s", str(exc))
        raise
    logger.info("Application startup completed successfully.")
    yield


app = FastAPI(
    title="Braid Potential API",
    description=(
        "Conway potential functions of colored braid closures, computed exactly from "
        "reduced colored Gassner matrices, with a randomized identity checker."
    ),
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc",
    openapi_url="/openapi.json",
    lifespan=lifespan,
    openapi_tags=[
        {"name": "Potential", "description": "Potential function of a braid closure, directly or with the axis."},
        {"name": "Verify", "description": "Seedable randomized checks of the invariance identities."},
    ],
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=_get_cors_origins(settings.CORS_ORIGINS),
    allow_credentials=True,
    allow_methods=["GET", "POST", "OPTIONS"],
    allow_headers=["*"],
)

app.include_router(potential.router, prefix="/api/potential", tags=["Potential"])
app.include_router(verify.router, prefix="/api/verify", tags=["Verify"])


@app.get("/")
def root():
    return {"status": "ok", "service": "Braid Potential API"}


@app.get("/health")
def health():
    return {"status": "ok"}
