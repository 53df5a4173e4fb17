"""Canonical JSON serialization used for all machine-readable output.

Every report emitted by the package goes through canonical_json so that
parsing and re-serializing a report is byte-identical.
"""

import json


def canonical_json(obj):
    """Serialize with sorted keys and fixed separators; ends without newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
