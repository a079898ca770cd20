# app/config.py
from __future__ import annotations

import os
from dotenv import load_dotenv
from pydantic import BaseModel

# Ladda .env lokalt om den finns (Render använder sina egna env vars)
load_dotenv()


class Settings(BaseModel):
    # --- Server-inställningar ---
    host: str = os.getenv("LLC_HOST", "0.0.0.0")
    port: int = int(os.getenv("LLC_PORT", "8000"))

    # --- CORS-inställningar ---
    cors_origins: str = os.getenv(
        "LLC_CORS_ORIGINS",
        "http://localhost:3000,"
        "http://127.0.0.1:3000,"
        "http://localhost:5173",
    )

    # --- Beräkningar ---
    default_q0: int = int(os.getenv("LLC_DEFAULT_Q0", "3"))  # q0 när --q0 saknas
    output_format: str = os.getenv("LLC_OUTPUT_FORMAT", "json")  # json | table
    log_level: str = os.getenv("LLC_LOG_LEVEL", "INFO")

    # Deklarerade generiska etiketter, t.ex. "zeta:6,xi:generic"
    label_declarations: str = os.getenv("LLC_LABEL_DECLARATIONS", "")

    # Vilket tecken η2 ger i ½(Q ± q*G_sgn); bara det relativa tecknet är normativt
    stability_sign_convention: str = os.getenv("LLC_STABILITY_SIGN", "plus_for_eta2")

    schema_version: str = "v1"


settings = Settings()
