"""Line-oriented check-request documents.

A document is a header of "key: value" lines, a blank line, then groups
of integer vector rows with blank lines between groups.  Full-line
comments start with '#' and may sit anywhere.  The grammar lives in
docs/input-format.md; the serializer writes the same shape back, and a
serialized request re-parses to an equal request.

    label: quintic threefold
    precision: 6
    checks: naive-integrality, log-positivity

    1 0 0 0
    0 1 0 0
    0 0 1 0
    0 0 0 1
    -1 -1 -1 -1
"""

from __future__ import annotations

from dataclasses import dataclass

from .checker import CHECK_NAMES, CheckRequest
from .lattice import VectorConfig

_HEADER_KEYS = ("label", "precision", "checks", "d", "dprime",
                "sampling-denominator", "cross-check")


class ParseError(ValueError):
    """Input document rejected; message carries path and line number."""

    def __init__(self, path: str, line: int, message: str):
        super().__init__("%s:%d: %s" % (path, line, message))
        self.path = path
        self.line = line


@dataclass(frozen=True)
class InputDocument:
    """The file's content, before CLI flags are merged in.

    precision may be None here (a flag can supply it); building the
    request is where missing pieces become errors.
    """

    groups: tuple[tuple[tuple[int, ...], ...], ...]
    precision: int | None = None
    checks: tuple[str, ...] | None = None
    label: str = ""
    d: int | None = None
    dprime: int | None = None
    sampling_denominator: int | None = None
    cross_check: bool = False

    def to_request(self, precision: int | None = None,
                   checks: tuple[str, ...] | None = None,
                   d: int | None = None, dprime: int | None = None,
                   sampling_denominator: int | None = None,
                   cross_check: bool | None = None) -> CheckRequest:
        """Merge flag overrides (which win) and build the request."""
        p = precision if precision is not None else self.precision
        if p is None:
            raise ValueError(
                "no precision given: set 'precision:' in the document "
                "header or pass --precision")
        chosen = checks if checks is not None else self.checks
        kwargs = {}
        if chosen is not None:
            kwargs["checks"] = chosen
        return CheckRequest(
            VectorConfig(self.groups), p, label=self.label,
            d_override=d if d is not None else self.d,
            dprime_override=dprime if dprime is not None else self.dprime,
            sampling_denominator=(sampling_denominator
                                  if sampling_denominator is not None
                                  else self.sampling_denominator),
            cross_check=(cross_check if cross_check is not None
                         else self.cross_check),
            **kwargs)


def _int_field(path, line, key, value, minimum):
    try:
        n = int(value)
    except ValueError:
        raise ParseError(path, line, "%s must be an integer, got %r"
                         % (key, value)) from None
    if n < minimum:
        raise ParseError(path, line, "%s must be >= %d, got %d"
                         % (key, minimum, n))
    return n


def parse_document(text: str, path: str = "<input>") -> InputDocument:
    # blocks of (line_no, text) split on blank lines, comments dropped
    blocks: list[list[tuple[int, str]]] = [[]]
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append((no, line))
    if blocks and not blocks[-1]:
        blocks.pop()
    if not blocks:
        raise ParseError(path, 1, "empty document")

    first_no, first_line = blocks[0][0]
    if ":" not in first_line:
        raise ParseError(path, first_no,
                         "missing header: expected 'key: value' lines "
                         "before the vector groups")

    fields: dict[str, object] = {}
    seen: dict[str, int] = {}
    for no, line in blocks[0]:
        if ":" not in line:
            raise ParseError(path, no, "expected 'key: value' in the header")
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if key not in _HEADER_KEYS:
            raise ParseError(path, no, "unknown header key %r; known keys: %s"
                             % (key, ", ".join(_HEADER_KEYS)))
        if key in seen:
            raise ParseError(path, no, "duplicate header key %r (first at "
                             "line %d)" % (key, seen[key]))
        seen[key] = no
        if key == "label":
            fields["label"] = value
        elif key == "precision":
            fields["precision"] = _int_field(path, no, key, value, 1)
        elif key == "d":
            fields["d"] = _int_field(path, no, key, value, 0)
        elif key == "dprime":
            fields["dprime"] = _int_field(path, no, key, value, 0)
        elif key == "sampling-denominator":
            fields["sampling_denominator"] = _int_field(path, no, key, value, 1)
        elif key == "cross-check":
            if value not in ("true", "false"):
                raise ParseError(path, no,
                                 "cross-check must be 'true' or 'false'")
            fields["cross_check"] = value == "true"
        else:
            names = tuple(v.strip() for v in value.split(",") if v.strip())
            bad = [n for n in names if n not in CHECK_NAMES]
            if bad:
                raise ParseError(path, no, "unknown check %r; valid checks: %s"
                                 % (bad[0], ", ".join(CHECK_NAMES)))
            if not names:
                raise ParseError(path, no, "checks list is empty")
            fields["checks"] = names

    if len(blocks) == 1:
        raise ParseError(path, blocks[0][-1][0],
                         "no vector groups after the header")

    groups = []
    dim = None
    dim_line = None
    for block in blocks[1:]:
        vectors = []
        for no, line in block:
            if ":" in line:
                raise ParseError(path, no, "header line after the first "
                                 "blank-separated section")
            parts = line.split()
            row = []
            for idx, tok in enumerate(parts):
                try:
                    row.append(int(tok))
                except ValueError:
                    raise ParseError(path, no, "field %d: %r is not an "
                                     "integer" % (idx + 1, tok)) from None
            if dim is None:
                dim, dim_line = len(row), no
            elif len(row) != dim:
                raise ParseError(path, no, "vector has %d entries, expected "
                                 "%d (set by line %d)"
                                 % (len(row), dim, dim_line))
            vectors.append(tuple(row))
        groups.append(tuple(vectors))

    return InputDocument(groups=tuple(groups), **fields)


def serialize_request(request: CheckRequest) -> str:
    lines = []
    if request.label:
        lines.append("label: %s" % request.label)
    lines.append("precision: %d" % request.precision)
    lines.append("checks: %s" % ", ".join(request.checks))
    if request.d_override is not None:
        lines.append("d: %d" % request.d_override)
    if request.dprime_override is not None:
        lines.append("dprime: %d" % request.dprime_override)
    if request.sampling_denominator is not None:
        lines.append("sampling-denominator: %d" % request.sampling_denominator)
    if request.cross_check:
        lines.append("cross-check: true")
    for group in request.config.groups:
        lines.append("")
        for v in group:
            lines.append(" ".join(str(x) for x in v))
    return "\n".join(lines) + "\n"


def load_request(path: str, **overrides) -> CheckRequest:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_document(text, path=path).to_request(**overrides)


__all__ = ["InputDocument", "ParseError", "parse_document",
           "serialize_request", "load_request"]
