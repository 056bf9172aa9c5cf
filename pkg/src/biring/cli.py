"""Batch command line: JSON matrix documents in, documents/scalars/reports out.

Exit codes: 0 on success, 2 when the mathematical answer is "undefined" or
"not invertible" (or a verification identity fails), 1 for usage, input and
dimension errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import BiringError, NotInvertible, ParseError, UnknownCommand
from .field import determinant
from .matrix import (
    Matrix,
    MinorSpec,
    Mode,
    IndexSet,
    add,
    hadamard_inverse,
    minor,
    power,
    product,
    scalar_mul,
    transpose,
)
from .quasidet import (
    InverseAlgorithm,
    cr_inverse,
    quasideterminant,
    quasideterminant_matrix,
    rc_inverse,
)
from .scalars import QUATERNION, RINGS, Ring, get_ring
from .verify import verify_suite

EXIT_OK, EXIT_ERROR, EXIT_UNDEFINED = 0, 1, 2


@dataclass
class MatrixDocument:
    ring: Ring
    matrix: Matrix
    row_labels: Optional[list[str]] = None
    col_labels: Optional[list[str]] = None

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def cols(self) -> int:
        return self.matrix.cols

    def to_json(self) -> dict:
        enc = self.ring.encode
        doc = {
            "ring": self.ring.name,
            "rows": self.rows,
            "cols": self.cols,
            "data": [[enc(x) for x in row] for row in self.matrix.data],
        }
        if self.row_labels is not None or self.col_labels is not None:
            doc["labels"] = {k: v for k, v in (("rows", self.row_labels),
                                               ("cols", self.col_labels)) if v is not None}
        return doc


@dataclass
class CommandResult:
    status: str                      # "ok" | "undefined" | "error"
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status == "ok" and self.payload is None:
            raise ValueError("ok result without payload")

    @property
    def exit_code(self) -> int:
        return {"ok": EXIT_OK, "undefined": EXIT_UNDEFINED}.get(self.status, EXIT_ERROR)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def render_matrix_document(doc: MatrixDocument) -> str:
    """Canonical text: one line of JSON with sorted keys and reduced rationals."""
    return _dumps(doc.to_json())


def _labels(raw, name: str, size: int):
    if raw is None:
        return None
    if not isinstance(raw, list) or len(raw) != size or not all(isinstance(x, str) for x in raw):
        raise ParseError(f"expected {size} string labels", f"field 'labels.{name}'")
    return raw


def parse_matrix_document(text) -> MatrixDocument:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8 ({exc.reason})", f"byte {exc.start}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} col {exc.colno}") from None
    if not isinstance(raw, dict):
        raise ParseError("document must be a JSON object", "line 1")
    ring_name = raw.get("ring")
    if ring_name not in RINGS:
        raise ParseError(f"ring must be one of {sorted(RINGS)}, got {ring_name!r}", "field 'ring'")
    ring = get_ring(ring_name)
    data = raw.get("data")
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ParseError("data must be a non-empty list of rows", "field 'data'")
    rows = len(data)
    cols = len(data[0])
    for key, actual in (("rows", rows), ("cols", cols)):
        if key in raw and raw[key] != actual:
            raise ParseError(f"declared {key}={raw[key]!r} but data has {actual}", f"field '{key}'")
    table = []
    for i, row in enumerate(data, 1):
        if len(row) != cols:
            raise ParseError(f"row has {len(row)} entries, expected {cols}", f"row {i}")
        table.append([ring.parse(tok, f"row {i} col {j}") for j, tok in enumerate(row, 1)])
    labels = raw.get("labels") or {}
    if not isinstance(labels, dict):
        raise ParseError("labels must be an object", "field 'labels'")
    extra = set(raw) - {"ring", "rows", "cols", "data", "labels"}
    if extra:
        raise ParseError(f"unknown fields {sorted(extra)}", "document")
    return MatrixDocument(ring, Matrix(table, ring),
                          _labels(labels.get("rows"), "rows", rows),
                          _labels(labels.get("cols"), "cols", cols))


def _doc(m: Matrix, rows=None, cols=None) -> MatrixDocument:
    return MatrixDocument(m.ring, m, rows, cols)


def _read(path: str) -> MatrixDocument:
    try:
        if path == "-":
            text = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), path) from None
    try:
        return parse_matrix_document(text)
    except ParseError as exc:
        raise type(exc)(str(exc), path) from None


def _positions(text: str) -> IndexSet:
    try:
        return IndexSet(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise ParseError(f"bad position list {text!r} ({exc})", "flag") from None


def _scalar_flag(text: str, ring: Ring):
    """Scalar from a flag; a quaternion may be a JSON array or "w,x,y,z"."""
    text = text.strip()
    if text.startswith("["):
        try:
            token = json.loads(text)
        except json.JSONDecodeError:
            raise ParseError(f"malformed scalar {text!r}", "flag --scalar") from None
    elif "," in text:
        token = text.split(",")
    else:
        token = text
    if isinstance(token, list):
        return QUATERNION.parse(token, "flag --scalar")
    # a bare rational acts on quaternion matrices through the embedding
    return get_ring("rational").parse(token, "flag --scalar")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UnknownCommand(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="biring", description="Exact matrix biring and quasideterminant calculator.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    kind = dict(choices=["rc", "cr"], default="rc")

    c = sub.add_parser("product", help="rc or cr product of two matrices")
    c.add_argument("--kind", **kind)
    c.add_argument("a")
    c.add_argument("b")

    c = sub.add_parser("power", help="rc or cr power")
    c.add_argument("--kind", **kind)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("a")

    c = sub.add_parser("transpose", help="swap rows and columns")
    c.add_argument("a")

    c = sub.add_parser("add", help="entrywise sum")
    c.add_argument("a")
    c.add_argument("b")

    c = sub.add_parser("scalarmul", help="multiply every entry by a scalar")
    c.add_argument("--side", choices=["left", "right"], default="left")
    c.add_argument("--scalar", required=True,
                   help='rational "p/q", or quaternion as \'["w","x","y","z"]\' or "w,x,y,z"')
    c.add_argument("a")

    c = sub.add_parser("hadamard-inv", help="entrywise inverse with rows and columns exchanged")
    c.add_argument("a")

    c = sub.add_parser("minor", help="select or delete rows and columns (comma separated)")
    rows = c.add_mutually_exclusive_group()
    rows.add_argument("--select-rows")
    rows.add_argument("--delete-rows")
    cols = c.add_mutually_exclusive_group()
    cols.add_argument("--select-cols")
    cols.add_argument("--delete-cols")
    c.add_argument("a")

    c = sub.add_parser("quasidet", help="one quasideterminant or the whole table")
    c.add_argument("--kind", **kind)
    c.add_argument("--row", type=int)
    c.add_argument("--col", type=int)
    c.add_argument("--matrix", action="store_true")
    c.add_argument("a")

    c = sub.add_parser("inverse", help="rc- or cr-inverse by one of three algorithms")
    c.add_argument("--kind", **kind)
    c.add_argument("--alg", choices=[a.value for a in InverseAlgorithm], default="elim")
    c.add_argument("a")

    c = sub.add_parser("det", help="determinant (rational matrices only)")
    c.add_argument("--column", type=int, default=1)
    c.add_argument("a")

    c = sub.add_parser("verify", help="check every applicable identity")
    c.add_argument("a")
    c.add_argument("b", nargs="?")
    return p


def _minor_spec(args) -> MinorSpec:
    if args.select_rows is not None:
        rmode, rset = Mode.SELECT, _positions(args.select_rows)
    else:
        rmode, rset = Mode.DELETE, _positions(args.delete_rows or "")
    if args.select_cols is not None:
        cmode, cset = Mode.SELECT, _positions(args.select_cols)
    else:
        cmode, cset = Mode.DELETE, _positions(args.delete_cols or "")
    return MinorSpec(rmode, rset, cmode, cset)


def _pick(labels, idx: IndexSet):
    return None if labels is None else [labels[p - 1] for p in idx]


def _run(args) -> CommandResult:
    cmd = args.command
    a = _read(args.a)
    A = a.matrix

    if cmd == "product":
        b = _read(args.b)
        m = product(args.kind, A, b.matrix)
        if args.kind == "rc":
            return CommandResult("ok", _doc(m, a.row_labels, b.col_labels))
        return CommandResult("ok", _doc(m, b.row_labels, a.col_labels))
    if cmd == "power":
        return CommandResult("ok", _doc(power(args.kind, A, args.n), a.row_labels, a.col_labels))
    if cmd == "transpose":
        return CommandResult("ok", _doc(transpose(A), a.col_labels, a.row_labels))
    if cmd == "add":
        b = _read(args.b)
        return CommandResult("ok", _doc(add(A, b.matrix), a.row_labels, a.col_labels))
    if cmd == "scalarmul":
        m = scalar_mul(args.side, _scalar_flag(args.scalar, a.ring), A)
        return CommandResult("ok", _doc(m, a.row_labels, a.col_labels))
    if cmd == "hadamard-inv":
        return CommandResult("ok", _doc(hadamard_inverse(A), a.col_labels, a.row_labels))
    if cmd == "minor":
        spec = _minor_spec(args)
        keep_r, keep_c = spec.resolve(A.rows, A.cols)
        m = minor(A, spec)
        return CommandResult("ok", _doc(m, _pick(a.row_labels, keep_r), _pick(a.col_labels, keep_c)))
    if cmd == "quasidet":
        return _quasidet(args, a)
    if cmd == "inverse":
        inv = (rc_inverse if args.kind == "rc" else cr_inverse)(A, args.alg)
        return CommandResult("ok", _doc(inv, a.col_labels, a.row_labels))
    if cmd == "det":
        return CommandResult("ok", a.ring.encode(determinant(A, args.column)))
    if cmd == "verify":
        b = _read(args.b).matrix if args.b else None
        report = verify_suite(A, b)
        diags = [f"{c.name}: {c.detail}" for c in report.checks if not c.ok]
        return CommandResult("ok" if report.passed else "undefined", report.to_dict(), diags)
    raise UnknownCommand(f"unknown command {cmd!r}")


def _quasidet(args, a: MatrixDocument) -> CommandResult:
    A = a.matrix
    if args.matrix:
        if args.row is not None or args.col is not None:
            raise UnknownCommand("--matrix excludes --row/--col")
        table = quasideterminant_matrix(args.kind, A)
        diags = [f"cell ({q.undefined.position[0]}, {q.undefined.position[1]}): "
                 f"undefined, {q.undefined.cause}" for row in table for q in row if not q.is_defined]
        payload = {
            "ring": a.ring.name, "rows": A.rows, "cols": A.cols,
            "data": [[a.ring.encode(q.value) if q.is_defined else None for q in row]
                     for row in table],
        }
        return CommandResult("ok", payload, diags)
    if args.row is None or args.col is None:
        raise UnknownCommand("quasidet needs --row and --col, or --matrix")
    q = quasideterminant(args.kind, A, args.row, args.col)
    if not q.is_defined:
        pos = q.undefined.position
        return CommandResult("undefined", None, [f"cell ({pos[0]}, {pos[1]}): undefined, "
                                                 f"{q.undefined.cause}"])
    return CommandResult("ok", a.ring.encode(q.value))


def execute_command(argv: list[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UnknownCommand("no command given")
        return _run(args)
    except NotInvertible as exc:
        witness = f" [witness {exc.witness}]" if exc.witness else ""
        return CommandResult("undefined", None, [f"NotInvertible: {exc}{witness}"])
    except BiringError as exc:
        return CommandResult("error", None, [f"{type(exc).__name__}: {exc}"])


def render_payload(payload) -> str:
    if isinstance(payload, MatrixDocument):
        return render_matrix_document(payload)
    return _dumps(payload)


def main(argv: list[str] | None = None) -> int:
    result = execute_command(sys.argv[1:] if argv is None else argv)
    if result.payload is not None:
        sys.stdout.write(render_payload(result.payload))
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
