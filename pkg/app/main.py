from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
import logging

from config.settings import settings
from app.utils.errors import SymbolError

# Configure logging
logging.basicConfig(level=settings.log_level.upper())
logger = logging.getLogger(__name__)

logger.info("Starting symbol-pair API initialization...")

# Import routers one by one with error handling
try:
    from app.routes.families import router as families_router
    logger.info("✓ Families router imported successfully")
except Exception as e:
    logger.error(f"✗ Failed to import families router: {e}")
    families_router = None

try:
    from app.routes.decomp import router as decomp_router
    logger.info("✓ Decomposition router imported successfully")
except Exception as e:
    logger.error(f"✗ Failed to import decomposition router: {e}")
    decomp_router = None

try:
    from app.routes.springer import router as springer_router
    logger.info("✓ Springer router imported successfully")
except Exception as e:
    logger.error(f"✗ Failed to import springer router: {e}")
    springer_router = None

try:
    from app.routes.verify import router as verify_router
    logger.info("✓ Verify router imported successfully")
except Exception as e:
    logger.error(f"✗ Failed to import verify router: {e}")
    verify_router = None

app = FastAPI(title="Symbol Pairs API", version="0.1.0")

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_origins,
    allow_credentials=True,
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)


@app.exception_handler(SymbolError)
async def symbol_error_handler(request: Request, exc: SymbolError):
    logger.info("%s on %s: %s", type(exc).__name__, request.url.path, exc)
    return JSONResponse(status_code=exc.status_code, content={"detail": str(exc), "error": type(exc).__name__})


if families_router:
    app.include_router(families_router, prefix="/api/families", tags=["families"])
    app.include_router(families_router, prefix="/families", tags=["families-compat"])
if decomp_router:
    app.include_router(decomp_router, prefix="/api/decomp", tags=["decomp"])
    app.include_router(decomp_router, prefix="/decomp", tags=["decomp-compat"])
if springer_router:
    app.include_router(springer_router, prefix="/api/springer", tags=["springer"])
    app.include_router(springer_router, prefix="/springer", tags=["springer-compat"])
if verify_router:
    app.include_router(verify_router, prefix="/api/verify", tags=["verify"])
    app.include_router(verify_router, prefix="/verify", tags=["verify-compat"])

logger.info("Symbol-pair API setup complete!")


@app.get("/health")
def health_check():
    return {"status": "ok"}


@app.get("/")
async def root():
    """API root endpoint"""
    return {
        "message": "Symbol Pairs API",
        "version": "0.1.0",
        "docs": "/docs",
        "health": "/health",
    }
