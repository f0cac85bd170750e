from .cache import SCHEMA_VERSION, TABLE_KINDS, load_cache, prepare_tables, save_cache
from .config import ENV_PREFIX, FORMATS, Config, config_from_env, env_overrides
from .main import build_parser, main
from .suite import SuiteItem, build_items, run_item, run_suite, summarize
