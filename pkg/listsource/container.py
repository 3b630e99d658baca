"""
Bit-exact binary container for codes, syndromes, both phases and plaintexts.

Layout (little-endian, 31-byte header):

    0  magic           4 bytes  b"LSC1"
    4  version         1 byte   0x01
    5  field kind      1 byte   0 = prime, 1 = binary extension
    6  field param     4 bytes  p, or the reduction polynomial
    10 n               4 bytes
    14 k               4 bytes
    18 payload kind    1 byte
    19 row count       4 bytes  matrix rows; envelope bytes for phase II; else 0
    23 symbol count    8 bytes
    31 body            envelope bytes, then one symbol per byte (q <= 256)
                       or per 2 bytes little-endian

The phase II envelope is the prg-stream seed (8 bytes, prg only) followed
by the pre-randomization seed (8 bytes, when used).
"""

import enum
import struct
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from listsource.errors import ContainerFormatError, InvalidField
from listsource.models.bundle import SEED_ENVELOPE, TwoPhaseBundle
from listsource.models.field import FieldKind, FieldSpec
from listsource.models.listcode import Syndrome
from listsource.models.matrix import MatrixGF

MAGIC = b"LSC1"
VERSION = 1
HEADER = struct.Struct('<4sBBIIIBIQ')

OFFSET_VERSION = 4
OFFSET_FIELD_KIND = 5
OFFSET_FIELD_PARAM = 6
OFFSET_N = 10
OFFSET_K = 14
OFFSET_PAYLOAD_KIND = 18
OFFSET_ROW_COUNT = 19
OFFSET_SYMBOL_COUNT = 23


class PayloadKind(enum.IntEnum):
    SYNDROME = 0
    PHASE1 = 1
    PHASE2 = 2
    MATRIX = 3
    PLAINTEXT = 4


def symbol_width(field):
    return 1 if field.order <= 256 else 2


def _symbol_dtype(field):
    return np.dtype('u1') if symbol_width(field) == 1 else np.dtype('<u2')


def encode_symbols(field, symbols):
    """Raw symbol bytes, one or two per symbol."""
    return np.asarray(list(symbols), dtype=_symbol_dtype(field)).tobytes()


def decode_symbols(field, data, base_offset=0):
    """Inverse of encode_symbols; offsets in errors are shifted by `base_offset`."""
    width = symbol_width(field)
    if len(data) % width:
        raise ContainerFormatError("truncated symbol", base_offset + len(data) - len(data) % width)
    values = np.frombuffer(bytes(data), dtype=_symbol_dtype(field)).astype(np.int64)
    bad = np.flatnonzero(values >= field.order)
    if bad.size:
        raise ContainerFormatError(
            f"symbol {int(values[bad[0]])} is not below q = {field.order}",
            base_offset + int(bad[0]) * width)
    return tuple(int(v) for v in values)


@dataclass(frozen=True)
class Container:
    """One payload with the field and code parameters it belongs to."""

    field: FieldSpec
    n: int
    k: int
    payload_kind: PayloadKind
    symbols: Tuple[int, ...]
    row_count: int = 0
    envelope: bytes = b''

    def serialize(self):
        header = HEADER.pack(MAGIC, VERSION, int(self.field.kind), self.field.modulus,
                             self.n, self.k, int(self.payload_kind), self.row_count,
                             len(self.symbols))
        return header + bytes(self.envelope) + encode_symbols(self.field, self.symbols)

    @classmethod
    def parse(cls, data):
        data = bytes(data)
        if len(data) < HEADER.size:
            raise ContainerFormatError(f"header needs {HEADER.size} bytes, got {len(data)}", len(data))
        magic, version, kind, param, n, k, payload, rows, count = HEADER.unpack_from(data)
        if magic != MAGIC:
            raise ContainerFormatError(f"bad magic {magic!r}", 0)
        if version != VERSION:
            raise ContainerFormatError(f"unsupported version {version}", OFFSET_VERSION)
        try:
            kind = FieldKind(kind)
        except ValueError:
            raise ContainerFormatError(f"unknown field kind {kind}", OFFSET_FIELD_KIND)
        try:
            field = FieldSpec(kind, param)
        except InvalidField as e:
            raise ContainerFormatError(str(e), OFFSET_FIELD_PARAM)
        if k > n:
            raise ContainerFormatError(f"k = {k} exceeds n = {n}", OFFSET_K)
        try:
            payload = PayloadKind(payload)
        except ValueError:
            raise ContainerFormatError(f"unknown payload kind {payload}", OFFSET_PAYLOAD_KIND)

        envelope_size = 0
        if payload == PayloadKind.PHASE2:
            if rows not in (0, SEED_ENVELOPE.size, 2 * SEED_ENVELOPE.size):
                raise ContainerFormatError(f"envelope of {rows} bytes", OFFSET_ROW_COUNT)
            envelope_size = rows
            if count != k:
                raise ContainerFormatError(f"phase II carries {count} symbols, k = {k}", OFFSET_SYMBOL_COUNT)
        elif payload == PayloadKind.MATRIX:
            if count != rows * n:
                raise ContainerFormatError(
                    f"{count} symbols for a {rows}x{n} matrix", OFFSET_SYMBOL_COUNT)
        else:
            if rows != 0:
                raise ContainerFormatError(f"row count {rows} for a non-matrix payload", OFFSET_ROW_COUNT)
            if payload in (PayloadKind.SYNDROME, PayloadKind.PHASE1) and count != n - k:
                raise ContainerFormatError(
                    f"syndrome of {count} symbols, n - k = {n - k}", OFFSET_SYMBOL_COUNT)

        expected = HEADER.size + envelope_size + count * symbol_width(field)
        if len(data) < expected:
            raise ContainerFormatError(f"body ends early, expected {expected} bytes", len(data))
        if len(data) > expected:
            raise ContainerFormatError("trailing bytes after body", expected)
        envelope = data[HEADER.size:HEADER.size + envelope_size]
        start = HEADER.size + envelope_size
        symbols = decode_symbols(field, data[start:], start)
        return cls(field, n, k, payload, symbols, rows, envelope)

    def to_matrix(self):
        return MatrixGF.from_rows(
            self.field,
            [self.symbols[i * self.n:(i + 1) * self.n] for i in range(self.row_count)],
            self.n)

    def to_syndrome(self, code):
        return Syndrome(code, self.symbols)


def matrix_container(matrix, n, k):
    return Container(matrix.field, n, k, PayloadKind.MATRIX, matrix.elements, matrix.rows)


def syndrome_container(syndrome, payload_kind=PayloadKind.SYNDROME):
    code = syndrome.code
    return Container(code.field, code.n, code.k, payload_kind, syndrome.symbols)


def plaintext_container(field, n, k, symbols):
    return Container(field, n, k, PayloadKind.PLAINTEXT, tuple(int(v) for v in symbols))


def phase2_container(bundle):
    code = bundle.code
    envelope = bundle.envelope
    return Container(code.field, code.n, code.k, PayloadKind.PHASE2, bundle.phase2,
                     len(envelope), envelope)


def bundle_from_containers(code, phase1, phase2, cipher_kind):
    """
    Rebuild a bundle; a prg-stream envelope starts with the cipher seed and
    any remaining 8 bytes are the pre-randomization seed.
    """
    envelope = phase2.envelope
    seed_envelope = None
    if cipher_kind == 'prg' and envelope:
        seed_envelope, envelope = envelope[:SEED_ENVELOPE.size], envelope[SEED_ENVELOPE.size:]
    if len(envelope) not in (0, SEED_ENVELOPE.size):
        raise ContainerFormatError(
            f"envelope of {len(phase2.envelope)} bytes for a {cipher_kind} bundle", OFFSET_ROW_COUNT)
    pre_randomize_seed = SEED_ENVELOPE.unpack(envelope)[0] if envelope else None
    return TwoPhaseBundle(phase1.to_syndrome(code), phase2.symbols, cipher_kind,
                          seed_envelope, pre_randomize_seed)
