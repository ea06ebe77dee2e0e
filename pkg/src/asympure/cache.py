"""Append-friendly JSON-lines result cache for the command-line front end.

One record per line: {"key": <canonical parameter string>, "version": <tag>,
"value": <result payload with integers as decimal strings>}.  Later records
for the same key win.  Desk-scale volumes only; no database.
"""

from __future__ import annotations

import json
from pathlib import Path

CACHE_VERSION = "1"


class ResultCache:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._records: dict[str, dict] = {}
        if self.path.exists():
            with open(self.path, encoding="utf-8") as handle:
                for line in handle:
                    line = line.strip()
                    if not line:
                        continue
                    record = json.loads(line)
                    if record.get("version") == CACHE_VERSION:
                        self._records[record["key"]] = record["value"]

    def get(self, key: str) -> dict | None:
        return self._records.get(key)

    def put(self, key: str, value: dict) -> None:
        self._records[key] = value
        record = {"key": key, "version": CACHE_VERSION, "value": value}
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(json.dumps(record, sort_keys=True) + "\n")

    def items(self) -> list[tuple[str, dict]]:
        return list(self._records.items())
