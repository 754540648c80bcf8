"""
Corpus loaders for iterating through graph files.
"""

import os
import logging

from dataclasses import dataclass
from typing import Iterator, List, Optional
from collections.abc import Iterable, Sized

from .graph import Graph, parse_edge_list
from .graph6 import parse_graph6
from .exceptions import GraphInputError, LoaderError, UnsupportedLoader


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    """
    One input graph, or the reason the input could not be decoded. Line numbers
    are 1-based; index is the position of the entry among all entries so records
    can be ordered by source.
    """

    index: int
    source: str
    text: str
    graph: Optional[Graph] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.graph is not None


class Loader(Iterable, Sized):
    """
    A loader is an iterator over CorpusEntry objects read from some datasource.
    Malformed inputs are yielded as entries with an error rather than raised, so
    that campaigns can count and skip them.
    """

    def count(self):
        """
        Returns the total number of entries being managed by the loader.
        """
        return len(self)


class Graph6Loader(Loader):
    """
    Loads a graph6 corpus: one graph per line. Blank lines are ignored and an
    optional ">>graph6<<" header is accepted on any line.

    Parameters
    ----------
    path : str
        The path to the graph6 file.
    """

    def __init__(self, path: str):
        self._path = path
        self._count = None

    def __len__(self):
        if self._count is None:
            self._count = sum(1 for _ in self._lines())
        return self._count

    def _lines(self) -> Iterator[tuple[int, bytes]]:
        try:
            with open(self._path, "rb") as f:
                for lineno, raw in enumerate(f, start=1):
                    line = raw.strip()
                    if line:
                        yield lineno, line
        except OSError as e:
            raise LoaderError(f"unable to open corpus file: {self._path}") from e

    def __iter__(self):
        logger.debug(f"loading graph6 corpus from {self._path}")
        self._count = 0
        for lineno, line in self._lines():
            source = f"{self._path}:{lineno}"
            text = line.decode("ascii", errors="replace")
            try:
                graph = parse_graph6(line)
            except GraphInputError as e:
                entry = CorpusEntry(self._count, source, text, error=str(e))
            else:
                entry = CorpusEntry(self._count, source, text, graph=graph)
            self._count += 1
            yield entry


class EdgeListLoader(Loader):
    """
    Loads a single graph from an edge-list file ("u v" per line, 0-indexed, '#'
    comments).

    Parameters
    ----------
    path : str
        The path to the edge-list file.
    """

    def __init__(self, path: str):
        self._path = path

    def __len__(self):
        return 1

    def __iter__(self):
        try:
            with open(self._path, "r") as f:
                text = f.read()
        except OSError as e:
            raise LoaderError(f"unable to open edge list: {self._path}") from e

        try:
            yield CorpusEntry(0, self._path, text, graph=parse_edge_list(text))
        except GraphInputError as e:
            yield CorpusEntry(0, self._path, text, error=str(e))


class StringLoader(Loader):
    """
    Wraps graph6 strings given directly, e.g. on the command line.
    """

    def __init__(self, lines: List[str], source: str = "arg"):
        self._lines = [line for line in lines if line.strip()]
        self._source = source

    def __len__(self):
        return len(self._lines)

    def __iter__(self):
        for index, line in enumerate(self._lines):
            source = f"{self._source}:{index + 1}"
            try:
                yield CorpusEntry(index, source, line.strip(), graph=parse_graph6(line))
            except GraphInputError as e:
                yield CorpusEntry(index, source, line.strip(), error=str(e))


GRAPH6_TYPES = {".g6", ".graph6", ".txt"}
EDGE_LIST_TYPES = {".edges", ".edgelist", ".el"}


def extension(path: str) -> str:
    """
    Returns the normalized extension of the specified path.
    """
    return os.path.splitext(os.path.basename(path))[1].lower()


def open_loader(path: str) -> Loader:
    """
    Returns the loader for the file type indicated by the extension of path.
    """
    if not os.path.exists(path):
        raise LoaderError(f"missing corpus file: {path}")

    ext = extension(path)
    if ext in GRAPH6_TYPES:
        return Graph6Loader(path)
    if ext in EDGE_LIST_TYPES:
        return EdgeListLoader(path)
    raise UnsupportedLoader(f"unsupported corpus file type: {ext or path}")


def resolve_argument(arg: str) -> Loader:
    """
    The invariants command accepts a file path or a literal graph6 string.
    """
    if os.path.exists(arg):
        return open_loader(arg)
    return StringLoader([arg])
