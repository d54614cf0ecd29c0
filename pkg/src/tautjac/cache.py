"""On-disk cache for built relation ideals.

Entries are keyed by (genus, source_cap, format version); the payload
carries a sha256 integrity hash computed over its canonical JSON
serialization.  A hash or key mismatch is treated as a miss and the
ideal is recomputed - a corrupted file is never trusted.  The
TAUTJAC_CACHE_DIR environment variable overrides any directory given
on the command line.
"""

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .ideal import FORMAT_VERSION, RelationIdeal

ENV_VAR = "TAUTJAC_CACHE_DIR"


def resolve_cache_dir(flag=None):
    """Cache directory to use, or None for no caching."""
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    if flag:
        return Path(flag)
    return None


def cache_path(root, genus, source_cap):
    return Path(root) / (
        "relideal-g%d-c%d-v%d.json" % (genus, source_cap, FORMAT_VERSION)
    )


def _canonical_body(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def store_ideal(ideal, root):
    """Write an ideal to the cache atomically; returns the path."""
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    payload = ideal.to_json_dict()
    body = _canonical_body(payload)
    envelope = {
        "format-version": FORMAT_VERSION,
        "genus": ideal.genus,
        "source_cap": ideal.source_cap,
        "sha256": hashlib.sha256(body.encode("utf-8")).hexdigest(),
        "ideal": payload,
    }
    path = cache_path(root, ideal.genus, ideal.source_cap)
    fd, tmp = tempfile.mkstemp(dir=str(root), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(envelope, handle, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return path


def load_ideal(root, genus, source_cap):
    """Load a cached ideal, or None on miss / key mismatch / corruption."""
    path = cache_path(root, genus, source_cap)
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
        if (
            data.get("format-version") != FORMAT_VERSION
            or data.get("genus") != genus
            or data.get("source_cap") != source_cap
        ):
            return None
        payload = data["ideal"]
        body = _canonical_body(payload)
        if hashlib.sha256(body.encode("utf-8")).hexdigest() != data.get("sha256"):
            return None
        ideal = RelationIdeal.from_json_dict(payload)
        if ideal.genus != genus or ideal.source_cap != source_cap:
            return None
        return ideal
    except (OSError, ValueError, KeyError, TypeError):
        return None


def get_or_build(genus, source_cap, root=None):
    """Fetch from the cache when possible, otherwise build (and store
    when a cache directory is configured).  Warm and cold results are
    identical by construction (the build is deterministic)."""
    if root is None:
        return RelationIdeal.build(genus, source_cap)
    ideal = load_ideal(root, genus, source_cap)
    if ideal is not None:
        return ideal
    ideal = RelationIdeal.build(genus, source_cap)
    store_ideal(ideal, root)
    return ideal


def clear_cache(root):
    """Remove every cache entry under root; returns the removed count."""
    root = Path(root)
    removed = 0
    if root.is_dir():
        for path in sorted(root.glob("relideal-*.json")):
            path.unlink()
            removed += 1
    return removed


def list_entries(root):
    root = Path(root)
    if not root.is_dir():
        return []
    return sorted(str(path.name) for path in root.glob("relideal-*.json"))
