"""Length-prefixed checkpoint records for resumable shard searches.

File layout: a sequence of records, each a 4-byte big-endian payload length
followed by that many bytes of canonical JSON.  Records are appended and
fsync'd one per completed shard, so a crash can only ever leave a truncated
tail behind the last complete record.  A truncated tail is discarded on load
(the interrupted shard simply reruns); anything else that does not decode is
reported as corruption.
"""

from __future__ import annotations

import json
import os
import struct
from pathlib import Path

__all__ = ["CheckpointError", "append_record", "read_records"]

_LENGTH = struct.Struct(">I")

# Sanity bound on a single record; a length prefix beyond this is garbage,
# not a plausibly truncated write.
MAX_RECORD_BYTES = 1 << 28


class CheckpointError(Exception):
    """The checkpoint file content is not usable for this run."""


def append_record(path: str | Path, record: dict) -> None:
    """Append one record and force it to disk before returning."""
    payload = json.dumps(record, sort_keys=True, separators=(",", ":")).encode("utf-8")
    with open(path, "ab") as handle:
        handle.write(_LENGTH.pack(len(payload)))
        handle.write(payload)
        handle.flush()
        os.fsync(handle.fileno())


def read_records(path: str | Path) -> tuple[list[dict], bool]:
    """All complete records plus a flag marking a discarded truncated tail."""
    data = Path(path).read_bytes()
    records: list[dict] = []
    offset = 0
    while offset < len(data):
        if offset + _LENGTH.size > len(data):
            return records, True
        (length,) = _LENGTH.unpack_from(data, offset)
        if length > MAX_RECORD_BYTES:
            raise CheckpointError(
                f"record length {length} at byte {offset} exceeds the sanity bound"
            )
        start = offset + _LENGTH.size
        if start + length > len(data):
            return records, True
        try:
            record = json.loads(data[start : start + length])
        except ValueError as exc:
            raise CheckpointError(f"undecodable record at byte {offset}: {exc}") from exc
        if not isinstance(record, dict):
            raise CheckpointError(f"record at byte {offset} is not an object")
        records.append(record)
        offset = start + length
    return records, False
