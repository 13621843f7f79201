from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from contextlib import asynccontextmanager
import uvicorn
import structlog

from app.core.config import settings
from app.core.logging import configure_logging
from app.core.redis_client import redis_client

from app.api.seshadri import router as seshadri_router
from app.api.curves import router as curves_router
from app.api.pencil import router as pencil_router
from app.api.positivity import router as positivity_router

logger = structlog.get_logger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    configure_logging()
    await redis_client.connect()
    logger.info("api_started", version=settings.VERSION)

    yield

    await redis_client.close()
    logger.info("api_stopped")


app = FastAPI(
    title=settings.PROJECT_NAME,
    version=settings.VERSION,
    description="""
    Seshadri constants of the anticanonical divisor on del Pezzo surfaces,
    computed with exact arithmetic on the Picard lattice.

    **Endpoints:**
    - Seshadri constants at general and special points, with witness curves
    - The full case table for 1 <= r <= 8
    - (-1)-classes and expected dimensions of plane linear systems
    - Brute-force oracle against the nef threshold
    - Nodal members of the cubic pencil through eight points
    - Positivity counterexamples on ten and thirteen point blow-ups
    """,
    lifespan=lifespan,
    license_info={
        "name": "MIT License",
        "url": "https://opensource.org/licenses/MIT",
    },
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(seshadri_router, prefix=f"{settings.API_V1_STR}", tags=["Seshadri Constants"])
app.include_router(curves_router, prefix=f"{settings.API_V1_STR}", tags=["Curves & Linear Systems"])
app.include_router(pencil_router, prefix=f"{settings.API_V1_STR}", tags=["Cubic Pencil"])
app.include_router(positivity_router, prefix=f"{settings.API_V1_STR}", tags=["Positivity"])


@app.get("/health")
async def health_check():
    return {
        "status": "healthy",
        "version": settings.VERSION,
        "redis": "connected" if redis_client.redis else "disconnected",
    }


@app.get("/")
async def root():
    return {
        "message": settings.PROJECT_NAME,
        "documentation": "/docs",
        "health": "/health",
        "version": settings.VERSION,
        "key_endpoints": {
            "seshadri": f"{settings.API_V1_STR}/seshadri/7?point=general",
            "theorem_table": f"{settings.API_V1_STR}/theorem-table",
            "exceptional": f"{settings.API_V1_STR}/exceptional/8",
            "expected_dim": f"{settings.API_V1_STR}/expected-dim?d=6&mults=2,2,2,2,2,2,2,3",
            "oracle": f"{settings.API_V1_STR}/oracle/6?dmax=12",
            "pencil_nodes": f"{settings.API_V1_STR}/pencil-nodes?sample=1",
            "counterexample": f"{settings.API_V1_STR}/counterexample/thirteen-points",
        },
    }


if __name__ == "__main__":
    uvicorn.run(
        "main:app",
        host="0.0.0.0",
        port=8000,
        reload=True,
        log_level="info",
    )
