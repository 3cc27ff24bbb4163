"""
graph6 encoding and decoding, DOT output and line-numbered batch reading.

graph6 layout: N(n) followed by the upper triangle of the adjacency matrix
in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
bits per byte, each byte offset by 63. N(n) is one byte 63+n for n <= 62,
'~' plus three bytes for n <= 258047, and '~~' plus six bytes beyond.
"""

from typing import Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

from errors import Graph6ParseError, GraphError
from graph_core import Graph

HEADER = ">>graph6<<"
_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint32)


def strip_graph6_header(text: str) -> str:
    """Remove whitespace and an optional '>>graph6<<' header"""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    return s


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return b"~" + bytes(63 + ((n >> shift) & 63) for shift in (12, 6, 0))
    return b"~~" + bytes(63 + ((n >> shift) & 63) for shift in (30, 24, 18, 12, 6, 0))


def _triangle_bits(matrix: np.ndarray) -> np.ndarray:
    # rows of the strict lower triangle read row by row are the columns of the upper one
    return matrix[np.tril_indices(matrix.shape[0], -1)]


def emit_graph6(g: Graph) -> str:
    bits = _triangle_bits(g.adjacency_matrix()).astype(np.uint32)
    padding = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(padding, dtype=np.uint32)])
    chunks = bits.reshape(-1, 6) @ _WEIGHTS + 63
    return (_encode_order(g.n) + bytes(chunks.astype(np.uint8).tolist())).decode("ascii")


def _decode_order(data: bytes) -> Tuple[int, int]:
    """Return (n, number of bytes used by N(n))"""
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6ParseError("truncated eight-byte order field", len(data))
        digits, used = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6ParseError("truncated four-byte order field", len(data))
        digits, used = data[1:4], 4
    n = 0
    for d in digits:
        n = (n << 6) | (d - 63)
    return n, used


def _prefix_length(text: str) -> int:
    """Characters before the graph6 body: leading whitespace and an optional header"""
    body = text.lstrip()
    if body.startswith(HEADER):
        body = body[len(HEADER):].lstrip()
    return len(text) - len(body)


def parse_graph6(text: Union[str, bytes], line: Optional[int] = None) -> Graph:
    """Offsets in errors count from the start of text, header and whitespace included"""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = strip_graph6_header(text)
    skip = _prefix_length(text)
    if s.startswith(":") or s.startswith("&"):
        raise Graph6ParseError("sparse6 and digraph6 input is not supported", skip, line)
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as e:
        raise Graph6ParseError("non-ASCII character", skip + e.start, line) from None

    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"byte value {byte} outside 63..126", skip + offset, line)

    try:
        n, used = _decode_order(data)
    except Graph6ParseError as e:
        raise Graph6ParseError(str(e).split(": ", 1)[1], skip + e.offset, line) from None

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[used:]
    if len(body) != expected:
        raise Graph6ParseError(
            f"expected {expected} data bytes for n={n}, found {len(body)}",
            skip + used + min(len(body), expected), line)

    values = np.frombuffer(body, dtype=np.uint8) - 63
    bits = np.unpackbits(values[:, None], axis=1)[:, 2:].ravel()
    if bits[nbits:].any():
        raise Graph6ParseError("nonzero padding bits", skip + used + expected - 1, line)

    rows, cols = np.tril_indices(n, -1)
    present = bits[:nbits].astype(bool)
    return Graph(n, zip(cols[present].tolist(), rows[present].tolist()))


def iter_graph6_lines(stream: Iterable[str]) -> Iterator[Tuple[int, Union[Graph, Graph6ParseError]]]:
    """
    Yield (line number, graph or parse error) for each non-blank line.

    Errors are yielded rather than raised so that batch callers can report
    them in input order and carry on.
    """
    for number, raw in enumerate(stream, 1):
        s = raw.strip()
        if not s or s == HEADER:
            continue
        try:
            yield number, parse_graph6(raw.rstrip(), line=number)
        except Graph6ParseError as e:
            yield number, e


def read_graph6_file(path: str) -> List[Graph]:
    """Read every graph in a graph6 file, failing on the first bad line"""
    graphs = []
    with open(path, "r") as f:
        for _, item in iter_graph6_lines(f):
            if isinstance(item, GraphError):
                raise item
            graphs.append(item)
    return graphs


def write_graph6_file(graphs: Iterable[Graph], path: str, header: bool = False):
    with open(path, "w") as f:
        if header:
            f.write(HEADER)
        for g in graphs:
            f.write(emit_graph6(g) + "\n")


def to_dot(g: Graph, name: str = "G") -> str:
    safe = "".join(c if c.isalnum() or c == "_" else "_" for c in name)
    lines = [f"graph {safe} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines)
