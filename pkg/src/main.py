"""Module entry point; delegates to the surplus-lab CLI."""

import sys

from surplus_lab import main


if __name__ == "__main__":
    sys.exit(main())
