from steaneChef.logs.steanechef_logging import get_module_logger, log, setup_file_logging

__all__ = ["log", "get_module_logger", "setup_file_logging"]
