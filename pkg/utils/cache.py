"""
Persistent Khovanov rank cache: one JSON document per (digest, flavor).
"""
import json
import logging
import os
import tempfile

from config import get_setting
from models.records import CacheEntry

logger = logging.getLogger(__name__)


def _entry_path(directory, digest, flavor):
    return os.path.join(directory, f'{digest}-{flavor}.json')


def _cache_dir():
    directory = get_setting('KH_CACHE_DIR')
    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as e:
        logger.warning(f'Cache directory {directory} unusable, continuing without cache: {e}')
        return None
    if not os.access(directory, os.R_OK | os.W_OK):
        logger.warning(f'Cache directory {directory} is not readable and writable, continuing without cache')
        return None
    return directory


def cache_get(digest, flavor):
    """Return the stored entry for the current engine version, or None"""
    directory = _cache_dir()
    if directory is None:
        return None
    path = _entry_path(directory, digest, flavor)
    if not os.path.exists(path):
        logger.debug(f'Cache miss: {digest[:12]} ({flavor})')
        return None
    try:
        with open(path, 'r', encoding='utf-8') as f:
            entry = CacheEntry.from_dict(json.load(f))
    except (OSError, ValueError, KeyError) as e:
        logger.warning(f'Ignoring unreadable cache entry {path}: {e}')
        return None
    if entry.engine_version != get_setting('ENGINE_VERSION') or entry.digest != digest:
        logger.debug(f'Stale cache entry for {digest[:12]} (engine {entry.engine_version})')
        return None
    return entry


def cache_put(digest, flavor, ranks, wall_time=0.0):
    """Write an entry atomically; returns the entry, or None when the cache is unusable"""
    directory = _cache_dir()
    if directory is None:
        return None
    entry = CacheEntry(
        digest=digest,
        flavor=flavor,
        ranks=ranks,
        engine_version=get_setting('ENGINE_VERSION'),
        wall_time=wall_time,
    )
    try:
        fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp-', suffix='.json')
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            json.dump(entry.to_dict(), f, indent=2, sort_keys=True)
        os.replace(tmp_path, _entry_path(directory, digest, flavor))
    except OSError as e:
        logger.warning(f'Could not write cache entry for {digest[:12]}: {e}')
        return None
    logger.debug(f'Cached {digest[:12]} ({flavor}) total {ranks.total}')
    return entry
