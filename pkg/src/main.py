from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from src.core.config import settings
from src.api.routes import verification

# Create FastAPI app
app = FastAPI(
    title=settings.APP_NAME,
    description="Exact cohomology checks for the tilting bundles on both sides of the flop X+ <--> X-",
    version=settings.VERSION,
    debug=settings.DEBUG
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routers
app.include_router(verification.router, prefix="/api", tags=["Verification"])


@app.get("/")
async def root():
    """Root endpoint"""
    return {
        "message": "Welcome to FlopVerify",
        "version": settings.VERSION,
        "status": "running"
    }


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "version": settings.VERSION,
        "schema": settings.SCHEMA_VERSION
    }
