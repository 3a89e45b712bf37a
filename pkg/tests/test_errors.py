# tests/test_errors.py
from __future__ import annotations

import inspect
import re

import pytest

from app.core import errors
from app.core.errors import DomainError, GroundTooLarge, ParseError, ensure_ground_size


def _domain_errors():
    return [
        cls
        for _, cls in inspect.getmembers(errors, inspect.isclass)
        if issubclass(cls, DomainError) and cls is not DomainError
    ]


def test_domain_errors_exit_with_three_and_unique_codes():
    classes = _domain_errors()
    assert len(classes) >= 20
    codes = [cls.code for cls in classes]
    assert len(set(codes)) == len(codes)
    for cls in classes:
        assert cls.exit_code == 3
        assert re.fullmatch(r"[A-Z]+(_[A-Z]+)*", cls.code), cls.__name__


def test_parse_error_location():
    assert ParseError("kaputt", source="f.txt", line=4).detail() == {
        "code": "PARSE_ERROR",
        "message": "kaputt",
        "location": "f.txt:4",
    }
    assert ParseError("kaputt").location == "<input>"


def test_ensure_ground_size(monkeypatch):
    ensure_ground_size(3, cap=3)
    with pytest.raises(GroundTooLarge) as exc:
        ensure_ground_size(4, cap=3)
    assert (exc.value.size, exc.value.cap) == (4, 3)
    assert exc.value.exit_code == 3

    from app.core.config import settings

    monkeypatch.setattr(settings, "MAX_GROUND", 2)
    with pytest.raises(GroundTooLarge):
        ensure_ground_size(3)
