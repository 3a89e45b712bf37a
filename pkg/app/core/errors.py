# app/core/errors.py
from __future__ import annotations

from typing import Optional


class AppError(Exception):
    """Basisklasse aller fachlichen Fehler. Trägt code + message wie ErrorOut."""

    code: str = "APP_ERROR"
    exit_code: int = 1

    def __init__(self, message: str, code: Optional[str] = None) -> None:
        if code:
            self.code = code
        self.message = message
        super().__init__(message)

    def detail(self) -> dict:
        return {"code": self.code, "message": self.message}


# ------------------------------------------------------------
# Eingabe / Parser  (Exit-Code 2)
# ------------------------------------------------------------
class ParseError(AppError):
    code = "PARSE_ERROR"
    exit_code = 2

    def __init__(self, message: str, source: str = "<input>", line: Optional[int] = None) -> None:
        self.source = source
        self.line = line
        super().__init__(message)

    @property
    def location(self) -> str:
        if self.line is None:
            return self.source
        return f"{self.source}:{self.line}"

    def detail(self) -> dict:
        return {"code": self.code, "message": self.message, "location": self.location}


# ------------------------------------------------------------
# Fachliche Fehler  (Exit-Code 3)
# ------------------------------------------------------------
class DomainError(AppError):
    code = "DOMAIN_ERROR"
    exit_code = 3


class MemberOutsideGround(DomainError):
    code = "MEMBER_OUTSIDE_GROUND"


class NotGrounded(DomainError):
    code = "NOT_GROUNDED"


class OverlappingGrounds(DomainError):
    code = "OVERLAPPING_GROUNDS"


class SubsetOutsideGround(DomainError):
    code = "SUBSET_OUTSIDE_GROUND"


class CompositionMismatch(DomainError):
    code = "COMPOSITION_MISMATCH"


class PartitionMismatch(DomainError):
    code = "PARTITION_MISMATCH"


class LabelAlreadyPresent(DomainError):
    code = "LABEL_ALREADY_PRESENT"


class GroundSetMismatch(DomainError):
    code = "GROUND_SET_MISMATCH"


class GroundTooLarge(DomainError):
    code = "GROUND_TOO_LARGE"

    def __init__(self, size: int, cap: int) -> None:
        self.size = int(size)
        self.cap = int(cap)
        super().__init__(f"Grundmenge hat {self.size} Elemente, erlaubt sind höchstens {self.cap}.")


class CycleDetected(DomainError):
    code = "CYCLE_DETECTED"


class UnknownLabel(DomainError):
    code = "UNKNOWN_LABEL"


class FaceOutsideGround(DomainError):
    code = "FACE_OUTSIDE_GROUND"


class NotAnInflation(DomainError):
    code = "NOT_AN_INFLATION"


class InvalidSkeletonDim(DomainError):
    code = "INVALID_SKELETON_DIM"


class NotLatticeOfIdeals(DomainError):
    code = "NOT_LATTICE_OF_IDEALS"


class NotAChainGang(DomainError):
    code = "NOT_A_CHAIN_GANG"


class NotAFracturing(DomainError):
    code = "NOT_A_FRACTURING"


class DegreeExceedsTruncation(DomainError):
    code = "DEGREE_EXCEEDS_TRUNCATION"


class TruncationMismatch(DomainError):
    code = "TRUNCATION_MISMATCH"


class NotInExorcismGroup(DomainError):
    code = "NOT_IN_EXORCISM_GROUP"


class NotASimplicialComplex(DomainError):
    code = "NOT_A_SIMPLICIAL_COMPLEX"


class InvalidIntervalParameters(DomainError):
    code = "INVALID_INTERVAL_PARAMETERS"


# ------------------------------------------------------------
# Hilfsfunktionen
# ------------------------------------------------------------
def ensure_ground_size(size: int, cap: Optional[int] = None) -> None:
    """Wirft GroundTooLarge, wenn |I| die konfigurierte Obergrenze überschreitet."""
    if cap is None:
        from app.core.config import settings

        cap = settings.MAX_GROUND
    if size > cap:
        raise GroundTooLarge(size, cap)
