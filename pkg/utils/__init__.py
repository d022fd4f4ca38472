from utils.logger import logger, set_log_level, log_operation
from utils.config import ResolutionConfig, load_config

__all__ = ["logger", "set_log_level", "log_operation", "ResolutionConfig", "load_config"]
