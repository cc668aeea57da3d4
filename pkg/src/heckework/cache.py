"""Persistent on-disk cache for memoized tables.

One file per (table kind, system content hash), holding length-prefixed
binary records under a magic header with a schema version; bumping the
version invalidates old files.  Keys are write-once: appending a duplicate
is harmless (loads keep the last record, and values for a key are required
to be deterministic).  Appends are serialized per store; readers simply
re-scan the file.
"""

from __future__ import annotations

import struct
import threading
from pathlib import Path

MAGIC = b"HWBC"
SCHEMA_VERSION = 1


class CacheStore:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _path(self, kind, syshash):
        return self.root / ("%s-%s.hwc" % (kind, syshash))

    def load_table(self, kind, syshash):
        """All records of one table as a dict of key bytes -> value bytes."""
        path = self._path(kind, syshash)
        out = {}
        if not path.exists():
            return out
        blob = path.read_bytes()
        if len(blob) < 8 or blob[:4] != MAGIC:
            return out
        (version,) = struct.unpack("<I", blob[4:8])
        if version != SCHEMA_VERSION:
            return out
        pos = 8
        n = len(blob)
        while pos + 4 <= n:
            (klen,) = struct.unpack("<I", blob[pos : pos + 4])
            pos += 4
            if pos + klen + 4 > n:
                break  # truncated trailing record: ignore
            key = blob[pos : pos + klen]
            pos += klen
            (vlen,) = struct.unpack("<I", blob[pos : pos + 4])
            pos += 4
            if pos + vlen > n:
                break
            out[key] = blob[pos : pos + vlen]
            pos += vlen
        return out

    def append(self, kind, syshash, key, value):
        path = self._path(kind, syshash)
        rec = struct.pack("<I", len(key)) + key + struct.pack("<I", len(value)) + value
        with self._lock:
            if not path.exists():
                path.write_bytes(MAGIC + struct.pack("<I", SCHEMA_VERSION) + rec)
            else:
                with path.open("ab") as fh:
                    fh.write(rec)
                    fh.flush()
