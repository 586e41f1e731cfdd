#!/usr/bin/env python3
"""
Main entry point for running sallykit commands locally.
Loads .env overrides, configures logging and dispatches to the CLI.
"""

import logging
import os
import sys

from dotenv import load_dotenv

# Load environment variables from .env file if present
load_dotenv()

from sallykit.cli import run_command  # noqa: E402


def main() -> int:
    logging.basicConfig(level=os.getenv("LOG_LEVEL", "INFO"))
    return run_command(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
