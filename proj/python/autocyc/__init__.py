"""Automorphic cyclic graphs of finite permutation groups."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import Error, catalog_keys, catalog_load, report_json, analyze, build_delta

__all__ = [name for name in dir() if not name.startswith("_")]


def catalog_metadata(entry):
    return _json.loads(entry.metadata_json())


def catalog_graph(key, action="inner"):
    """Load a catalog entry and build its graph under the named action."""
    entry = catalog_load(key)
    group = entry.group
    return entry, build_delta(group, entry.action(action))


def report(group, graph):
    return _json.loads(report_json(group, graph, analyze(graph)))
