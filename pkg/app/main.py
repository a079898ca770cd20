from __future__ import annotations

import logging
import re
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .config import settings
from .endpoints import health, llc
from .errors import LLCError, Unsupported

logging.basicConfig(level=settings.log_level)
log = logging.getLogger("llc")

app = FastAPI(title="llc-sp4 – explicit lokal Langlandskorrespondens för Sp4 och GSp4")


# ----------------------- CORS -----------------------
origins = []
regex = None
for part in [p.strip() for p in settings.cors_origins.split(",") if p.strip()]:
    if "*" in part:
        # översätt *.example.org => regex
        escaped = re.escape(part).replace(r"\*\.", ".*")
        regex = rf"https://{escaped}" if part.startswith("*.") else rf"{escaped}"
    else:
        origins.append(part)

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_origin_regex=regex,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Inkludera routers
app.include_router(health.router, tags=["health"])
app.include_router(llc.router, prefix="/api", tags=["llc"])


# --------------------- Fel -----------------------
@app.exception_handler(LLCError)
async def llc_error_handler(request: Request, exc: LLCError):
    status = 501 if isinstance(exc, Unsupported) else 422
    log.error("%s %s: %s", request.method, request.url.path, exc.message)
    return JSONResponse(status_code=status, content=exc.to_dict())


# --------------------- Models -----------------------
class ConfigOut(BaseModel):
    schema_version: str
    default_q0: int
    output_format: str
    label_declarations: str
    stability_sign_convention: str
    cors_origins: list[str]
    cors_regex: Optional[str]


# --------------------- Endpoints --------------------
@app.get("/config", response_model=ConfigOut)
async def get_config():
    return ConfigOut(
        schema_version=settings.schema_version,
        default_q0=settings.default_q0,
        output_format=settings.output_format,
        label_declarations=settings.label_declarations,
        stability_sign_convention=settings.stability_sign_convention,
        cors_origins=origins,
        cors_regex=regex,
    )
