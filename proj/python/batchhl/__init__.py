"""Exact shortest-path distances on unweighted graphs under batches of edge updates."""

from ._core import (
    Graph,
    Labelling,
    Oracle,
    build,
    query,
    select_landmarks,
    update,
)

__all__ = ["Graph", "Labelling", "Oracle", "build", "query", "select_landmarks", "update"]
