# app/core/config.py
from __future__ import annotations

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=False,  # .env keys dürfen groß/klein geschrieben sein
        extra="ignore",        # fremde Variablen in der Umgebung stören nicht
    )

    # ------------------------------------------------------------
    # 🧭 Allgemein
    # ------------------------------------------------------------
    APP_NAME: str = "hopf-setfam"
    LOG_LEVEL: str = "WARNING"

    # ------------------------------------------------------------
    # 🧮 Enumeration
    # ------------------------------------------------------------
    # Obergrenze für |I| bei allen aufzählenden Verfahren
    MAX_GROUND: int = Field(24, ge=0)

    # Worker für die Takeuchi-/Partitions-Aufzählung (1 = deterministisch sequenziell)
    THREADS: int = Field(1, ge=1)

    # ------------------------------------------------------------
    # 📈 Charaktere / Potenzreihen
    # ------------------------------------------------------------
    TRUNCATION: int = Field(10, ge=0)

    # ------------------------------------------------------------
    # 🎲 Zufallsinstanzen (verify --random)
    # ------------------------------------------------------------
    HOPF_SETFAM_SEED: int | None = None


# ------------------------------------------------------------
# Globale Settings-Instanz
# ------------------------------------------------------------
settings = Settings()
