"""Persistence adapters for generator output."""

from .files import PersistOptions, PersistSummary, persist_results, summary_lines

__all__ = ["PersistOptions", "PersistSummary", "persist_results", "summary_lines"]
