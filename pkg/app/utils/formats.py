# app/utils/formats.py
"""
Eingabeformate der CLI. Jede Struktur gibt es als JSON (Maschinenformat) und als knappes
Textformat, eine Angabe pro Zeile:

    ground: 1,2,3         # Familie / Komplex: erste Zeile
    elements: 1,2,3       # Poset: erste Zeile
    {}                    # Familie: ein Mitglied pro Zeile, {} ist die leere Menge
    1,2                   # Familie: Mitglied {1,2}; Komplex: Facette {1,2}
    1<3                   # Poset: Relationen (auch 1<2<3 oder 1<3, 2<3)

Zusätzlich gelesen werden Mitglieder und Facetten in Klammern ({1,2} {3} bzw. <123,34>)
und 'ground' statt 'elements' im Poset-Kopf. Labels werden kanonisch sortiert
(Zahlen aufsteigend, dann Strings); die Ausgabe folgt dieser Ordnung, nicht der Eingabe.

Parserfehler tragen Quelle und Zeilennummer.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from app.core.errors import DomainError, ParseError
from app.models.chain_gang import CGBasis, CGSum
from app.models.character import Character, PowerSeries
from app.models.compositions import SetComposition
from app.models.formal_sum import FormalSum
from app.models.fracturing import BetrayalFunction, Fracturing
from app.models.ground_set import GroundSet, Label, SubsetMask, normalize_label
from app.models.poset import Poset
from app.models.set_family import GroundedSetFamily
from app.models.simplicial_complex import SimplicialComplex
from app.schemas.chaingang import CGSumIO, CharacterIO, PowerSeriesIO
from app.schemas.common import FormalSumIO
from app.schemas.complex import ComplexIn
from app.schemas.family import SetFamilyIn
from app.schemas.poset import PosetIn
from app.services.family_service import make_family
from app.services.fracturing_service import make_fracturing
from app.services.poset_service import make_poset
from app.services.simplicial_service import make_complex

ModelT = TypeVar("ModelT", bound=BaseModel)

_BRACES = re.compile(r"\{([^{}]*)\}")
_ANGLE = re.compile(r"^<([^<>]*)>$")
_HEADER = re.compile(r"^(?P<key>[A-Za-z_]+)\s*:?\s*(?P<labels>.*)$")
_CG_TERM = re.compile(
    r"""^(?:(?P<coeff>\d+(?:/\d+)?)\*?)?
         (?P<chain>C\[(?P<lam>[\d,\s]*)\])?
         (?P<phantom>F(?:\^(?P<p>\d+))?)?$""",
    re.VERBOSE,
)


# ------------------------------------------------------------
# Allgemeines
# ------------------------------------------------------------
def is_json(text: str) -> bool:
    return text.lstrip().startswith(("{", "["))


def load_model(text: str, model: Type[ModelT], source: str = "<input>") -> ModelT:
    """JSON -> pydantic-Modell; Syntax- und Validierungsfehler werden zu ParseError."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Ungültiges JSON: {exc.msg}", source=source, line=exc.lineno) from exc
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(x) for x in first.get("loc", ()))
        raise ParseError(f"Ungültige Eingabe bei '{where}': {first.get('msg')}", source=source) from exc


def content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """(Zeilennummer, Inhalt) ohne Leerzeilen und #-Kommentare."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def split_labels(text: str) -> List[Label]:
    return [normalize_label(tok) for tok in re.split(r"[\s,]+", text.strip()) if tok]


def _ground_and_rest(
    text: str, source: str, keys: Tuple[str, ...] = ("ground",)
) -> Tuple[GroundSet, List[Tuple[int, str]]]:
    """Kopfzeile '<key>: a,b,c' (erster Schlüssel ist der kanonische) und die restlichen Zeilen."""
    lines = list(content_lines(text))
    if not lines:
        raise ParseError("Leere Eingabe.", source=source)
    lineno, head = lines[0]
    match = _HEADER.match(head)
    if not match or match.group("key") not in keys:
        raise ParseError(f"Erste Zeile muss '{keys[0]}: <labels>' sein.", source=source, line=lineno)
    try:
        ground = GroundSet.of(split_labels(match.group("labels")))
    except DomainError as exc:  # doppelte Labels
        raise ParseError(str(exc), source=source, line=lineno) from exc
    return ground, lines[1:]


def _single_char(ground: GroundSet) -> bool:
    return all(len(str(x)) == 1 for x in ground.labels)


def split_block(token: str, ground: GroundSet) -> List[Label]:
    """'1,3' oder (bei einstelligen Labels) '13'."""
    token = token.strip()
    if "," in token or not _single_char(ground):
        return split_labels(token)
    return [normalize_label(ch) for ch in token if not ch.isspace()]


# ------------------------------------------------------------
# Familien
# ------------------------------------------------------------
def _subset_line(line: str, ground: GroundSet, what: str, source: str, lineno: int) -> List[List[Label]]:
    """Eine Teilmenge pro Zeile ('1,2', '{}'); Klammerform '{1,2} {3}' auch mehrfach je Zeile."""
    if line == "∅":
        return [[]]
    if "{" not in line and "}" not in line:
        return [split_block(line, ground)]
    found = _BRACES.findall(line)
    if not found or _BRACES.sub("", line).strip(" ,"):
        raise ParseError(f"{what} nicht lesbar: {line!r}", source=source, line=lineno)
    return [split_labels(body) for body in found]


def parse_family(text: str, source: str = "<input>", implicit_empty: bool = False) -> GroundedSetFamily:
    if is_json(text):
        data = load_model(text, SetFamilyIn, source)
        ground = GroundSet.of(data.ground)
        family = make_family(ground, data.members, data.implicit_empty or implicit_empty)
        if data.phantoms is not None and family.phantoms != ground.mask(normalize_label(x) for x in data.phantoms):
            raise ParseError("Angegebene Phantome passen nicht zu den Mitgliedern.", source=source)
        return family
    ground, rest = _ground_and_rest(text, source)
    members: List[List[Label]] = []
    for lineno, line in rest:
        members.extend(_subset_line(line, ground, "Mitglied", source, lineno))
    return make_family(ground, members, implicit_empty)


def parse_formal_sum(text: str, source: str = "<input>", ground: Optional[GroundSet] = None) -> FormalSum:
    """
    Liste von {"coeff", "ground", "members"}. Alle Terme teilen eine Grundmenge; die leere
    Liste ist die Null auf `ground` (ohne Angabe auf der leeren Grundmenge).
    """
    data = load_model(text, FormalSumIO, source)
    pairs = []
    for term in data.root:
        try:
            term_ground = GroundSet.of(term.ground)
        except DomainError as exc:
            raise ParseError(str(exc), source=source) from exc
        if ground is None:
            ground = term_ground
        elif term_ground != ground:
            raise ParseError("Alle Terme einer Summe brauchen dieselbe Grundmenge.", source=source)
        pairs.append((make_family(ground, term.members), int(term.coeff)))
    return FormalSum.accumulate(ground if ground is not None else GroundSet(()), pairs)


# ------------------------------------------------------------
# Posets
# ------------------------------------------------------------
def parse_poset(text: str, source: str = "<input>") -> Poset:
    if is_json(text):
        data = load_model(text, PosetIn, source)
        return make_poset(GroundSet.of(data.elements), data.covers)
    ground, rest = _ground_and_rest(text, source, keys=("elements", "ground"))
    pairs: List[Tuple[Label, Label]] = []
    for lineno, line in rest:
        for item in re.split(r"[,;]", line):
            item = item.strip()
            if not item:
                continue
            chain = [part.strip() for part in item.split("<")]
            if len(chain) < 2 or not all(chain):
                raise ParseError(f"Relation nicht lesbar: {item!r}", source=source, line=lineno)
            pairs.extend(zip(chain, chain[1:]))
    return make_poset(ground, pairs)


# ------------------------------------------------------------
# Simplizialkomplexe
# ------------------------------------------------------------
def parse_complex(text: str, source: str = "<input>") -> SimplicialComplex:
    if is_json(text):
        data = load_model(text, ComplexIn, source)
        return make_complex(GroundSet.of(data.ground), data.facets)
    ground, rest = _ground_and_rest(text, source)
    facets: List[List[Label]] = []
    for lineno, line in rest:
        angle = _ANGLE.match(line)
        if angle:
            facets.extend(split_block(tok, ground) for tok in angle.group(1).split(",") if tok.strip())
        else:
            facets.extend(_subset_line(line, ground, "Facette", source, lineno))
    return make_complex(ground, facets)


# ------------------------------------------------------------
# Kompositionen / Fracturings / Teilmengen
# ------------------------------------------------------------
def parse_subset(text: str, ground: GroundSet) -> SubsetMask:
    body = text.strip().strip("{}")
    if not body or body == "∅":
        return 0
    return ground.mask(split_block(body, ground))


def parse_composition(text: str, ground: GroundSet, source: str = "<argument>") -> SetComposition:
    blocks = [tok for tok in text.split("|")]
    if any(not tok.strip() for tok in blocks):
        raise ParseError(f"Leerer Block in {text!r}", source=source)
    return SetComposition(tuple(ground.mask(split_block(tok, ground)) for tok in blocks))


def parse_fracturing(text: str, poset: Poset, source: str = "<argument>") -> Fracturing:
    """'blocks=1,2|3'; nicht genannte Elemente sind ausgelassen."""
    body = text.split(";", 1)[0].strip()
    if body.startswith("blocks="):
        body = body[len("blocks="):]
    if not body:
        return make_fracturing(poset, [])
    blocks = []
    for tok in body.split("|"):
        if not tok.strip():
            raise ParseError(f"Leerer Block in {text!r}", source=source)
        blocks.append(poset.ground.mask(split_block(tok, poset.ground)))
    return make_fracturing(poset, blocks)


def parse_betrayal(text: str, poset: Poset, source: str = "<argument>") -> BetrayalFunction:
    """'3=1,4=2' -> β(3)=1, β(4)=2"""
    pairs = []
    for item in re.split(r"[,\s]+", text.strip()):
        if not item:
            continue
        if "=" not in item:
            raise ParseError(f"Erwartet b=a, gefunden {item!r}", source=source)
        b, a = item.split("=", 1)
        pairs.append((poset.ground.position(normalize_label(b)), poset.ground.position(normalize_label(a))))
    return BetrayalFunction(tuple(sorted(pairs)))


# ------------------------------------------------------------
# Kettenbanden / Charaktere
# ------------------------------------------------------------
def _parse_cg_term(token: str, source: str) -> Tuple[CGBasis, Fraction]:
    if token == "1":
        return CGBasis(), Fraction(1)
    match = _CG_TERM.match(token.replace(" ", ""))
    if not match or not (match.group("chain") or match.group("phantom") or match.group("coeff")):
        raise ParseError(f"Term nicht lesbar: {token!r}", source=source)
    coeff = Fraction(match.group("coeff") or 1)
    lam: Tuple[int, ...] = ()
    if match.group("chain"):
        lam = tuple(int(x) for x in re.split(r"[,\s]+", match.group("lam")) if x)
        if any(x <= 0 for x in lam):
            raise ParseError(f"Kettenlängen müssen positiv sein: {token!r}", source=source)
    p = 0
    if match.group("phantom"):
        p = int(match.group("p") or 1)
    return CGBasis(lam, p), coeff


def parse_cg_sum(text: str, source: str = "<input>") -> CGSum:
    """Text wie '3*C[2,1]F^2 - 1/2*F + 1' oder CGSum-JSON."""
    if is_json(text):
        data = load_model(text, CGSumIO, source)
        try:
            return CGSum.accumulate((CGBasis(tuple(t.lam), t.p), Fraction(t.coeff)) for t in data.terms)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), source=source) from exc
    body = " ".join(line for _, line in content_lines(text))
    if not body:
        raise ParseError("Leerer Ausdruck.", source=source)
    pairs = []
    # Vorzeichen als eigene Token
    for sign, token in re.findall(r"([+-]?)\s*([^+-]+)", body):
        basis, coeff = _parse_cg_term(token.strip(), source)
        pairs.append((basis, -coeff if sign == "-" else coeff))
    return CGSum.accumulate(pairs)


def _fraction(value: str, source: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"Kein exakter Bruch: {value!r}", source=source) from exc


def parse_character(text: str, source: str = "<input>") -> Character:
    data = load_model(text, CharacterIO, source)
    if len(data.t) > data.N:
        raise ParseError(f"{len(data.t)} Werte für N = {data.N}.", source=source)
    values = [_fraction(v, source) for v in data.t]
    values += [Fraction(0)] * (data.N - len(values))
    return Character(_fraction(data.a, source), tuple(values))


def parse_power_series(text: str, source: str = "<input>") -> PowerSeries:
    data = load_model(text, PowerSeriesIO, source)
    coefficients = [_fraction(v, source) for v in data.root]
    if not coefficients or coefficients[0] != 1:
        raise ParseError("Der konstante Term muss 1 sein.", source=source)
    return PowerSeries(tuple(coefficients))


def parse_scalar(text: str, source: str = "<argument>") -> Fraction:
    return _fraction(text, source)
