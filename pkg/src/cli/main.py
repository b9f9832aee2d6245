"""
Entry point: parse flags, load settings, dispatch, map errors to exit codes.
"""

import logging
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from src.exceptions import CausalSearchError
from src.utils.logging_config import setup_logging
from src.utils.settings import LoggingSettings, Settings, load_settings

from .commands import cmd_benchmark, cmd_oracle_check, cmd_search, cmd_simulate
from .parser import build_parser

logger = logging.getLogger(__name__)

COMMANDS: Dict[str, Callable[..., int]] = {
    "simulate": cmd_simulate,
    "search": cmd_search,
    "benchmark": cmd_benchmark,
    "oracle-check": cmd_oracle_check,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand.

    Returns:
        0 on success, 1 on usage or configuration errors, 2 on data errors,
        3 on internal-consistency failures
    """
    try:
        args = build_parser().parse_args(argv)
        settings: Settings = load_settings(args.config)
        if args.log_level:
            settings = settings.model_copy(
                update={"logging": LoggingSettings(level=args.log_level, format=settings.logging.format)}
            )
        setup_logging(settings.logging)
        return COMMANDS[args.command](args, settings)
    except CausalSearchError as e:
        logger.error("%s", e.message)
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
