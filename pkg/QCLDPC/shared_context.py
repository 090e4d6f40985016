"""
Shared Code Context
Per-process cache of built codes and their Tanner graphs, keyed by code name.
"""

import threading
from typing import Dict

from QCLDPC.constructions import CodeSpec, get_code
from QCLDPC.spa import TannerGraph, build_tanner


class CodeContext:
    """
    A built code together with the decoder graphs derived from it.
    Graphs are built on first use and shared read-only afterwards.
    """

    def __init__(self, spec: CodeSpec):
        self.spec = spec
        self._graphs: Dict[str, TannerGraph] = {}
        self._lock = threading.Lock()

    @property
    def name(self) -> str:
        return self.spec.name

    def _graph(self, key: str, matrix) -> TannerGraph:
        with self._lock:
            if key not in self._graphs:
                self._graphs[key] = build_tanner(matrix)
            return self._graphs[key]

    @property
    def tanner_x(self) -> TannerGraph:
        """Graph of the matrix whose syndrome reveals X errors."""
        return self._graph("x", self.spec.H_xdet)

    @property
    def tanner_z(self) -> TannerGraph:
        """Graph of the matrix whose syndrome reveals Z errors."""
        if not self.spec.is_css_pair():
            return self.tanner_x
        return self._graph("z", self.spec.H_zdet)


class CodeContextManager:
    """
    Thread-safe registry of CodeContext objects.
    Each worker process keeps its own, so a code is built once per process.
    """
    _contexts: Dict[str, CodeContext] = {}
    _lock = threading.Lock()

    @classmethod
    def get_context(cls, name_or_path: str) -> CodeContext:
        """
        Get or build the context for a code.
        Thread-safe implementation.

        Args:
            name_or_path: Built-in code name or path to a matrix file

        Returns:
            CodeContext shared by every caller in this process

        Raises:
            UnknownCodeError: If nothing matches name_or_path; nothing is cached
        """
        with cls._lock:
            if name_or_path not in cls._contexts:
                cls._contexts[name_or_path] = CodeContext(get_code(name_or_path))
            return cls._contexts[name_or_path]

    @classmethod
    def cleanup_all(cls):
        """Drop every cached context, e.g. after a matrix file changed on disk."""
        with cls._lock:
            cls._contexts.clear()


def get_context(name_or_path: str) -> CodeContext:
    return CodeContextManager.get_context(name_or_path)
