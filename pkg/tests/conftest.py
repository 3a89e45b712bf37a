# tests/conftest.py
from __future__ import annotations

import random

import pytest

from app.core.config import settings


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture(autouse=True)
def _default_settings(monkeypatch):
    # deterministische Defaults unabhängig von einer lokalen .env
    monkeypatch.setattr(settings, "MAX_GROUND", 24)
    monkeypatch.setattr(settings, "THREADS", 1)
    monkeypatch.setattr(settings, "TRUNCATION", 10)
