# Standard Library Imports
import logging
import os
import random
import tempfile
import threading
from typing import Callable

# Third Party Imports

# Local App Imports
from tilecount.models.exceptions import CacheMismatch
from tilecount.services import environment

logger = logging.getLogger(__name__)

CACHE_FILE = "counts.tsv"


class CountCache:
    """
    Persistent store of exact counts keyed by method and parameters, one "key<TAB>value" line per entry.
    Lookups are spot-checked: with probability spot_check_rate a hit is recomputed and compared.
    """

    def __init__(
        self,
        directory: str | None = None,
        spot_check_rate: float | None = None,
        enabled: bool = True,
    ):
        self.directory = os.path.expanduser(directory or environment.CACHE_DIR)
        self.path = os.path.join(self.directory, CACHE_FILE)
        self.spot_check_rate = (
            environment.SPOT_CHECK_RATE if spot_check_rate is None else spot_check_rate
        )
        self.enabled = enabled
        self.hits = 0
        self.misses = 0
        self.checks = 0
        self._lock = threading.Lock()
        self._entries: dict[str, int] = self._load() if enabled else {}
        self._dirty = False

    def _load(self) -> dict[str, int]:
        if not os.path.exists(self.path):
            return {}
        entries = {}
        with open(self.path, encoding="utf-8") as handle:
            for number, line in enumerate(handle, 1):
                key, sep, value = line.rstrip("\n").partition("\t")
                try:
                    count = int(value)
                except ValueError:
                    sep = ""
                if not sep:
                    logger.warning("skipping malformed cache line %d in %s", number, self.path)
                    continue
                entries[key] = count
        logger.debug("loaded %d cached counts from %s", len(entries), self.path)
        return entries

    def get(self, key: str) -> int | None:
        with self._lock:
            return self._entries.get(key)

    def put(self, key: str, value: int) -> None:
        if not self.enabled:
            return
        with self._lock:
            self._entries[key] = int(value)
            self._dirty = True

    def lookup(self, key: str, compute: Callable[[], int]) -> int:
        """
        Cached value of key, computing and storing it on a miss.
        :param key: Cache key, for example "flashlight:2,1,2,0".
        :param compute: Exact computation of the value.
        :return: The count.
        :raises CacheMismatch: If a spot check disagrees with the stored value.
        """
        cached = self.get(key) if self.enabled else None
        if cached is None:
            value = compute()
            with self._lock:
                self.misses += 1
            self.put(key, value)
            return value
        with self._lock:
            self.hits += 1
            check = random.random() < self.spot_check_rate
        if check:
            value = compute()
            with self._lock:
                self.checks += 1
            if value != cached:
                raise CacheMismatch(key, cached, value)
        return cached

    def flush(self) -> None:
        """
        Write the entries atomically: a temporary file in the cache directory replaces the old one.
        """
        if not self.enabled or not self._dirty:
            return
        os.makedirs(self.directory, exist_ok=True)
        with self._lock:
            lines = [f"{key}\t{value}\n" for key, value in sorted(self._entries.items())]
            handle, temporary = tempfile.mkstemp(dir=self.directory, prefix=".counts-", suffix=".tsv")
            with os.fdopen(handle, "w", encoding="utf-8") as out:
                out.writelines(lines)
            os.replace(temporary, self.path)
            self._dirty = False
        logger.info("wrote %d cached counts to %s", len(lines), self.path)

    def clear(self) -> int:
        """
        Drop every entry and delete the cache file.
        :return: Number of entries removed.
        """
        with self._lock:
            removed = len(self._entries)
            self._entries = {}
            self._dirty = False
        if os.path.exists(self.path):
            os.remove(self.path)
        return removed

    def stats(self) -> dict[str, int | str]:
        with self._lock:
            return {
                "path": self.path,
                "entries": len(self._entries),
                "hits": self.hits,
                "misses": self.misses,
                "spot_checks": self.checks,
            }

    def __len__(self):
        return len(self._entries)
