"""Versioned JSON cache of the Maclaurin coefficient tables.

Layout: {"schema_version": 1, "checksum": <sha256 of the canonical tables JSON>,
"tables": [<SeriesTable.to_json()>, ...]}. The leading entries of every table are
re-derived on load. A cache that fails any check is regenerated, never trusted.
"""
import hashlib
import json
import logging
from pathlib import Path
from typing import Dict, List

from berndt_closed_forms.exceptions import BerndtError, CacheError
from berndt_closed_forms.series import (TABLE_TYPES, SdTable, SeriesTable, SinhTable, SnSquareTable, SnTable,
                                       gen_q_polys, gen_R_polys, gen_sd_polys, gen_sn_polys, get_table, register_table,
                                       table_from_json)

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
TABLE_KINDS = tuple(sorted(TABLE_TYPES))
SPOT_CHECK_INDEX = 4

_REFERENCE = {
    SdTable.kind: gen_sd_polys,
    SnTable.kind: gen_sn_polys,
    SnSquareTable.kind: gen_q_polys,
    SinhTable.kind: gen_R_polys,
}


def _canonical(tables: List[Dict]) -> str:
    return json.dumps(tables, sort_keys=True, separators=(',', ':'))


def checksum(tables: List[Dict]) -> str:
    return hashlib.sha256(_canonical(tables).encode('utf-8')).hexdigest()


def dumps_cache(tables: List[SeriesTable]) -> str:
    payload = [t.to_json() for t in sorted(tables, key=lambda t: t.kind)]
    doc = {'schema_version': SCHEMA_VERSION, 'checksum': checksum(payload), 'tables': payload}
    return json.dumps(doc, sort_keys=True, indent=1) + '\n'


def spot_check(table: SeriesTable, upto: int = SPOT_CHECK_INDEX) -> None:
    """Regenerate the first entries of ``table`` from scratch and compare.

    Raises:
        CacheError: if a leading polynomial differs from the recurrence.
    """
    n = min(table.max_index, upto)
    if n < table.first_index:
        return
    reference = _REFERENCE[table.kind](n).truncated(n)
    if table.truncated(n) != reference:
        bad = next(i for i in range(table.first_index, n + 1) if table[i] != reference[i])
        raise CacheError(f'cached {table.kind} entry {bad} is {table[bad]}, '
                         f'recurrence gives {reference[bad]}')


def save_cache(path: Path, tables: List[SeriesTable]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_cache(tables), encoding='utf-8')
    logger.debug(f'wrote {len(tables)} tables to {path}')


def load_cache(path: Path) -> List[SeriesTable]:
    """Read and validate a cache file.

    Raises:
        CacheError: if the file is unreadable, of another schema version, fails its
            checksum, holds a malformed table or one whose leading entries disagree with
            the recurrences.
    """
    try:
        doc = json.loads(Path(path).read_text(encoding='utf-8'))
    except (OSError, ValueError) as e:
        raise CacheError(f'cannot read cache {path}: {e}') from e
    version = doc.get('schema_version') if isinstance(doc, dict) else None
    if version != SCHEMA_VERSION:
        raise CacheError(f'cache {path} has schema version {version}, expected {SCHEMA_VERSION}')
    payload = doc.get('tables')
    if not isinstance(payload, list) or doc.get('checksum') != checksum(payload):
        raise CacheError(f'checksum mismatch in cache {path}')
    try:
        tables = [table_from_json(t) for t in payload]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise CacheError(f'malformed table in cache {path}: {e}') from e
    for t in tables:
        spot_check(t)
    return tables


def prepare_tables(path: Path, max_index: int) -> List[SeriesTable]:
    """Install cached tables covering ``max_index``; regenerate and rewrite the cache otherwise."""
    path = Path(path)
    if path.exists():
        try:
            tables = load_cache(path)
            if {t.kind for t in tables} == set(TABLE_KINDS) and all(t.max_index >= max_index for t in tables):
                for t in tables:
                    register_table(t)
                logger.info(f'loaded coefficient tables from {path}')
                return tables
            logger.info(f'cache {path} does not reach index {max_index}, extending')
        except BerndtError as e:
            logger.warning(f'{e}; regenerating')
    tables = [get_table(kind, max_index) for kind in TABLE_KINDS]
    try:
        save_cache(path, tables)
    except OSError as e:
        logger.warning(f'could not write cache {path}: {e}')
    return tables
