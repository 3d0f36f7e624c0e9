"""Run with python -m tropicaust."""
import sys

from .cli import main

sys.exit(main())
