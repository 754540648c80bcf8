"""
Reads and writes the graph6 format: a printable-ASCII encoding of the upper
triangle of a simple graph's adjacency matrix.

Every byte is 63 plus a 6-bit value. The header is one byte for n <= 62, "~"
followed by three bytes (18 bits) for n <= 258047, or "~~" followed by six bytes
(36 bits) beyond that. The payload lists the pairs (0,1), (0,2), (1,2), (0,3), ...
as bits, big-endian within each 6-bit group and zero-padded at the end.
"""

from .graph import Graph, pair_count
from .exceptions import GraphInputError, Graph6ParseError


HEADER = ">>graph6<<"
SMALL_LIMIT = 62
MEDIUM_LIMIT = 258047
LARGE_LIMIT = 68719476735


def _decode_groups(data: bytes, start: int, count: int) -> int:
    value = 0
    for i in range(start, start + count):
        value = (value << 6) | (data[i] - 63)
    return value


def _encode_groups(value: int, count: int) -> bytes:
    return bytes(
        63 + ((value >> (6 * (count - 1 - i))) & 0x3F) for i in range(count)
    )


def parse_graph6(text: str | bytes) -> Graph:
    """
    Decodes a single graph6 line. Surrounding whitespace and an optional
    ">>graph6<<" header are ignored; every other deviation from the format raises
    Graph6ParseError with the byte offset where decoding failed.
    """
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6ParseError("graph6 text must be ASCII", e.start) from e
    else:
        data = bytes(text)

    data = data.strip()
    base = 0
    if data.startswith(HEADER.encode("ascii")):
        base = len(HEADER)
    payload = data[base:]

    for i, byte in enumerate(payload):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"non-printable or out of range byte {byte:#04x}", base + i)

    if not payload:
        raise Graph6ParseError("empty graph6 string", base)

    # Size header
    if payload[0] != 126:
        n, pos = payload[0] - 63, 1
    elif len(payload) >= 2 and payload[1] == 126:
        if len(payload) < 8:
            raise Graph6ParseError("truncated 36-bit size header", base + len(payload))
        n, pos = _decode_groups(payload, 2, 6), 8
        if n <= MEDIUM_LIMIT:
            raise Graph6ParseError("non-canonical 36-bit size header", base)
    else:
        if len(payload) < 4:
            raise Graph6ParseError("truncated 18-bit size header", base + len(payload))
        n, pos = _decode_groups(payload, 1, 3), 4
        if n <= SMALL_LIMIT:
            raise Graph6ParseError("non-canonical 18-bit size header", base)

    bits = pair_count(n)
    expected = (bits + 5) // 6
    available = len(payload) - pos
    if available < expected:
        raise Graph6ParseError(
            f"truncated payload: expected {expected} bytes for n={n}, got {available}",
            base + len(payload),
        )
    if available > expected:
        raise Graph6ParseError(
            f"trailing bytes after payload for n={n}", base + pos + expected
        )

    value = _decode_groups(payload, pos, expected)
    padding = 6 * expected - bits
    if value & ((1 << padding) - 1):
        raise Graph6ParseError("non-zero padding bits", base + len(payload) - 1)

    # The first pair is the most significant bit of the payload.
    value >>= padding
    mask = 0
    for k in range(bits):
        if value >> (bits - 1 - k) & 1:
            mask |= 1 << k
    return Graph.from_bitmask(n, mask)


def encode_graph6(g: Graph, header: bool = False) -> str:
    """
    Returns the canonical graph6 string for the graph (without a trailing newline).
    """
    n = g.n
    if n <= SMALL_LIMIT:
        size = bytes([63 + n])
    elif n <= MEDIUM_LIMIT:
        size = b"~" + _encode_groups(n, 3)
    elif n <= LARGE_LIMIT:
        size = b"~~" + _encode_groups(n, 6)
    else:
        raise GraphInputError(f"graph6 cannot encode n={n}")

    bits = pair_count(n)
    groups = (bits + 5) // 6
    mask = g.bitmask
    value = 0
    for k in range(bits):
        value = (value << 1) | (mask >> k & 1)
    value <<= 6 * groups - bits

    prefix = HEADER if header else ""
    return prefix + (size + _encode_groups(value, groups)).decode("ascii")
