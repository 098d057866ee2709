"""Allows running the command line as "python -m bec_ground_py"."""

# Python libraries
import sys

# bec_ground_py components
from .cli import main

sys.exit(main())
